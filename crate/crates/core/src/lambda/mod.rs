//! Linear and planar lambda terms with their colorings. The term surgeries
//! mirror Tutte decomposition of maps.

mod coloring;
mod handles;
mod skeleton;
mod surgery;
mod term;

pub use coloring::{color, color_term, head_variable, neutral_body, Coloring, Kind, Rule};
pub use handles::{outer_neutral_handles, Handle};
pub use skeleton::{decorate, decorate_planar, decorate_rl, is_planar, Skeleton, Traversal};
pub use surgery::{
    classify, compose_fun_open, compose_val_open, decompose_fun_open, decompose_val_open,
    wrap_value_open, Npt, Trichotomy,
};
pub use term::{LinearTerm, Path, Step, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("variable index {0} is not bound")]
    UnboundIndex(usize),
    #[error("a variable is used {uses} times")]
    NotLinear { uses: u32 },
    #[error("tree is not a lambda skeleton (an abstraction has negative degree)")]
    IllFormedSkeleton,
    #[error("coloring does not match the term or has the wrong kind")]
    ColoringMismatch,
    #[error("not a normal planar term: {0}")]
    NotNpt(&'static str),
    #[error("term is not function-open")]
    NotFunctionOpen,
    #[error("term is not value-open")]
    NotValueOpen,
    #[error("handle index {k} out of range 1..={count}")]
    HandleOutOfRange { k: usize, count: usize },
    #[error("path does not address a subterm")]
    BadPath,
    #[error("focus is not an outer neutral handle")]
    NotOuterHandle,
}
