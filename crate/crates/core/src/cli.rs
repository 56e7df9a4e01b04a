//! The `lammap` command line. Data goes to `out`, diagnostics to `err`.
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bijection::{map_to_term, term_to_map, verify_bijection, BijectionError};
use crate::counting::{check_identities, count_tables, enumerate_npt, CountingError};
use crate::io::{
    emit_dot_diagram, emit_dot_map, parse_map, parse_term, print_map, MapFileError,
    TermSyntaxError,
};
use crate::lambda::{color, Kind, LambdaError, Npt};
use crate::strategy::Registry;

#[derive(Parser, Debug)]
#[command(name = "lammap", version, about = "Normal planar lambda terms and rooted planar maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the table of term counts by size (columns) and free variables (rows)
    Count {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        max_size: usize,
        /// Largest number of free variables shown [default: all non-zero rows]
        #[arg(long)]
        max_vars: Option<usize>,
    },
    /// Compare the independent formulas for the closed-term counts
    Series {
        #[arg(long)]
        terms: usize,
    },
    /// List the normal planar terms of a size and number of free variables
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Print the map file of the map corresponding to a term
    ToMap { term: String },
    /// Print the term corresponding to the map in a file
    ToTerm { mapfile: PathBuf },
    /// Check the bijection and the counting identities exhaustively
    Verify {
        #[arg(long)]
        max_size: usize,
    },
    /// Write a Graphviz rendering of a term's diagram or of a map
    Render {
        #[arg(long, conflicts_with = "map", required_unless_present = "map")]
        term: Option<String>,
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Normal,
    Neutral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// `<index>. <term>`
    Text,
    /// one bare term per line
    Lines,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Syntax(#[from] TermSyntaxError),
    #[error(transparent)]
    MapFile(#[from] MapFileError),
    #[error(transparent)]
    Term(#[from] LambdaError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Failed(String),
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut text = String::new();
    let result = execute(cli.command, &mut text);
    // partial output from `verify` is still useful on failure
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return 1;
    }
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.clone(),
        source,
    })
}

fn execute(command: Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Count {
            kind,
            max_size,
            max_vars,
        } => count(kind, max_size, max_vars, out),
        Command::Series { terms } => series(terms, out),
        Command::Enumerate { size, vars, format } => {
            for (idx, (t, _)) in enumerate_npt(size, vars).iter().enumerate() {
                match format {
                    Format::Lines => writeln!(out, "{t}").unwrap(),
                    Format::Text => writeln!(out, "{}. {t}", idx + 1).unwrap(),
                }
            }
            Ok(())
        }
        Command::ToMap { term } => {
            let npt = Npt::new(parse_term(&term)?)?;
            out.push_str(&print_map(&term_to_map(npt.term(), npt.coloring())?));
            Ok(())
        }
        Command::ToTerm { mapfile } => {
            let m = parse_map(&read(&mapfile)?)?;
            let (t, _) = map_to_term(&m)?;
            writeln!(out, "{t}").unwrap();
            Ok(())
        }
        Command::Verify { max_size } => verify(max_size, out),
        Command::Render { term, map, out: path } => {
            let dot = match (term, map) {
                (Some(src), _) => {
                    let t = parse_term(&src)?;
                    let c = color(&t, Kind::Normal)
                        .or_else(|| color(&t, Kind::Neutral))
                        .ok_or(LambdaError::ColoringMismatch)?;
                    emit_dot_diagram(&t, &c)
                }
                (None, Some(file)) => emit_dot_map(&parse_map(&read(&file)?)?),
                (None, None) => unreachable!("clap requires one of --term, --map"),
            };
            std::fs::write(&path, dot).map_err(|source| CliError::File { path, source })
        }
    }
}

fn count(
    kind: KindArg,
    max_size: usize,
    max_vars: Option<usize>,
    out: &mut String,
) -> Result<(), CliError> {
    let (sizes, vars) = match kind {
        KindArg::Normal => (1..=max_size, 0..=max_vars.unwrap_or(max_size)),
        KindArg::Neutral => (0..=max_size, 1..=max_vars.unwrap_or(max_size + 1)),
    };
    let table = count_tables(max_size, *vars.end());
    out.push_str("i\\n");
    for n in sizes.clone() {
        write!(out, "\t{n}").unwrap();
    }
    out.push('\n');
    for i in vars {
        write!(out, "{i}").unwrap();
        for n in sizes.clone() {
            let v = match kind {
                KindArg::Normal => table.normal(n, i),
                KindArg::Neutral => table.neutral(n, i),
            };
            write!(out, "\t{v}").unwrap();
        }
        out.push('\n');
    }
    Ok(())
}

fn series(terms: usize, out: &mut String) -> Result<(), CliError> {
    let registry = Registry::new();
    let columns = ["recurrence", "closed-form", "tutte"];
    let values = columns
        .iter()
        .map(|name| {
            registry
                .get(name)
                .expect("built-in source")
                .coefficients(terms)
        })
        .collect::<Result<Vec<_>, _>>()?;
    out.push_str("n\trecurrence\tclosed_form\ttutte\tstatus\n");
    let mut mismatches = 0;
    for n in 1..=terms {
        let row: Vec<_> = values.iter().map(|v| &v[n - 1]).collect();
        let status = if row.iter().all(|v| *v == row[0]) {
            "MATCH"
        } else {
            mismatches += 1;
            "MISMATCH"
        };
        writeln!(out, "{n}\t{}\t{}\t{}\t{status}", row[0], row[1], row[2]).unwrap();
    }
    if mismatches > 0 {
        return Err(CliError::Failed(format!("{mismatches} rows disagree")));
    }
    Ok(())
}

fn verify(max_size: usize, out: &mut String) -> Result<(), CliError> {
    let report = verify_bijection(max_size);
    out.push_str("size\tterms\tmaps\tterm_roundtrips\tmap_roundtrips\n");
    for s in &report.sizes {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            s.size, s.terms, s.maps, s.term_roundtrips, s.map_roundtrips
        )
        .unwrap();
    }
    for v in &report.violations {
        writeln!(
            out,
            "FAIL size {} {}: {} [trace: {}]",
            v.size,
            v.object,
            v.message,
            v.trace.as_deref().unwrap_or("-")
        )
        .unwrap();
    }
    let identities = check_identities(max_size);
    match &identities {
        Ok(r) => writeln!(out, "identities hold for n <= {}", r.rows.len() - 1).unwrap(),
        Err(e) => writeln!(out, "FAIL {e}").unwrap(),
    }
    if !report.passed() {
        return Err(CliError::Failed(format!(
            "{} bijection violations",
            report.violations.len()
        )));
    }
    identities?;
    out.push_str("OK\n");
    Ok(())
}
