//! Reading and writing terms and maps, plus Graphviz output.

mod dot;
mod map_file;
mod term_syntax;

pub use dot::{emit_dot_diagram, emit_dot_map};
pub use map_file::{parse_map, print_map, MapFileError};
pub use term_syntax::{display_name, parse_term, print_term, TermSyntaxError};
