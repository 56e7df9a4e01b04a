//! Outer neutral handles: the neutral subterms whose wires border the outer
//! region of a term's diagram.

use super::{Coloring, LambdaError, LinearTerm, Path, Rule, Step, Term};

/// A factorization of a term at a neutral subterm.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Handle {
    /// Root-to-focus address.
    pub path: Path,
    /// The focused neutral subterm, with indices as they appear in place.
    pub focus: Term,
}

/// Outer neutral handles of `t`, numbered counterclockwise along the outer
/// region starting from the output wire.
///
/// At an application the handle of the application itself comes first,
/// then the handles of the argument, then (only when the argument is
/// closed) the handles of the function.
pub fn outer_neutral_handles(t: &LinearTerm, c: &Coloring) -> Result<Vec<Handle>, LambdaError> {
    if !c.colors(t) {
        return Err(LambdaError::ColoringMismatch);
    }
    let mut paths = Vec::new();
    collect(c.root(), t.term(), &mut Vec::new(), &mut paths);
    Ok(paths
        .into_iter()
        .map(|path| {
            let focus = t.term().subterm(&path).expect("collected from t").clone();
            Handle { path, focus }
        })
        .collect())
}

/// Handle paths only.
pub(crate) fn handle_paths(rule: &Rule, term: &Term) -> Vec<Path> {
    let mut paths = Vec::new();
    collect(rule, term, &mut Vec::new(), &mut paths);
    paths
}

fn collect(rule: &Rule, term: &Term, path: &mut Path, out: &mut Vec<Path>) {
    match (rule, term) {
        (Rule::V, Term::Var(_)) => out.push(path.clone()),
        (Rule::A(rf, ra), Term::App(f, a)) => {
            out.push(path.clone());
            path.push(Step::Arg);
            collect(ra, a, path, out);
            path.pop();
            if a.free_occurrences() == 0 {
                path.push(Step::Fun);
                collect(rf, f, path, out);
                path.pop();
            }
        }
        (Rule::S(n), t) => collect(n, t, path, out),
        (Rule::L(b), Term::Lam(body)) => {
            path.push(Step::Body);
            collect(b, body, path, out);
            path.pop();
        }
        _ => unreachable!("coloring checked against term"),
    }
}
