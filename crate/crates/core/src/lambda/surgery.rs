//! Normal planar terms with one free variable and the function-open and
//! value-open surgeries that build them up and take them apart.

use std::fmt;

use super::coloring::{color, Coloring, Kind};
use super::handles::{handle_paths, outer_neutral_handles, Handle};
use super::skeleton::is_planar;
use super::{LambdaError, LinearTerm, Path, Step, Term};

/// A normal planar lambda term with exactly one free variable, carrying its
/// normal coloring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Npt {
    term: LinearTerm,
    coloring: Coloring,
}

impl Npt {
    pub fn new(term: LinearTerm) -> Result<Self, LambdaError> {
        if term.arity() != 1 {
            return Err(LambdaError::NotNpt("expected exactly one free variable"));
        }
        if !is_planar(&term) {
            return Err(LambdaError::NotNpt("term is not planar"));
        }
        let coloring = color(&term, Kind::Normal).ok_or(LambdaError::NotNpt("term is not normal"))?;
        Ok(Npt { term, coloring })
    }

    /// `[x] x`
    pub fn identity() -> Self {
        Npt::new(LinearTerm::new_unchecked(Term::Var(0), 1)).expect("identity is an NPT")
    }

    pub fn term(&self) -> &LinearTerm {
        &self.term
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn into_parts(self) -> (LinearTerm, Coloring) {
        (self.term, self.coloring)
    }

    /// Number of `s` nodes in the normal coloring.
    pub fn size(&self) -> usize {
        self.coloring.size()
    }

    pub fn handles(&self) -> Vec<Handle> {
        outer_neutral_handles(&self.term, &self.coloring).expect("coloring belongs to term")
    }

    pub fn handle_count(&self) -> usize {
        handle_paths(self.coloring.root(), self.term.term()).len()
    }

    pub fn classify(&self) -> Trichotomy {
        classify(&self.term, &self.coloring).expect("an NPT is a one-variable normal term")
    }
}

impl fmt::Display for Npt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.term.fmt(f)
    }
}

/// How the free variable of a one-variable normal term is used.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    /// The term is the variable itself.
    IdentityTerm,
    /// The variable is applied: `site` addresses the subterm `x(u)`.
    FunctionOpen { site: Path },
    /// The variable is an argument: `site` addresses the subterm `u(x)`.
    ValueOpen { site: Path },
}

/// Classifies a one-variable normal linear term by the position of its
/// unique free occurrence.
pub fn classify(t: &LinearTerm, c: &Coloring) -> Result<Trichotomy, LambdaError> {
    if t.arity() != 1 {
        return Err(LambdaError::NotNpt("expected exactly one free variable"));
    }
    if c.kind() != Kind::Normal || !c.colors(t) {
        return Err(LambdaError::ColoringMismatch);
    }
    let occurrences = t.term().occurrences_of_free(0);
    let [path] = occurrences.as_slice() else {
        unreachable!("linear term uses its free variable once");
    };
    Ok(match path.last() {
        None => Trichotomy::IdentityTerm,
        Some(Step::Fun) => Trichotomy::FunctionOpen {
            site: path[..path.len() - 1].to_vec(),
        },
        Some(Step::Arg) => Trichotomy::ValueOpen {
            site: path[..path.len() - 1].to_vec(),
        },
        Some(Step::Body) => unreachable!("a linear abstraction uses its own variable"),
    })
}

/// Replaces the free occurrence `x` of `t1` with `x(λy. t2)`.
pub fn compose_fun_open(t1: &Npt, t2: &Npt) -> Npt {
    let mut term = t1.term.term().clone();
    let occurrences = term.occurrences_of_free(0);
    let site = term.subterm_mut(&occurrences[0]).expect("occurrence path is valid");
    let x = std::mem::replace(site, Term::Var(0));
    // t2 is closed under the new abstraction, so no index shifting is needed
    *site = Term::app(x, Term::lam(t2.term.term().clone()));
    Npt::new(LinearTerm::new_unchecked(term, 1)).expect("function-open composition preserves NPTs")
}

/// Splits a function-open term `C[x(λy.u)]` into `[x] C[x]` and `[y] u`.
pub fn decompose_fun_open(t: &Npt) -> Result<(Npt, Npt), LambdaError> {
    let Trichotomy::FunctionOpen { site } = t.classify() else {
        return Err(LambdaError::NotFunctionOpen);
    };
    let mut outer = t.term.term().clone();
    let node = outer.subterm_mut(&site).expect("site path is valid");
    let Term::App(x, arg) = std::mem::replace(node, Term::Var(0)) else {
        unreachable!("site addresses an application");
    };
    let Term::Lam(inner) = *arg else {
        return Err(LambdaError::NotFunctionOpen);
    };
    if inner.free_occurrences() != 1 {
        return Err(LambdaError::NotFunctionOpen);
    }
    *node = *x;
    let t1 = Npt::new(LinearTerm::new_unchecked(outer, 1))?;
    let t2 = Npt::new(LinearTerm::new(*inner, 1)?)?;
    Ok((t1, t2))
}

/// Applies the neutral subterm at `focus` to a fresh free variable `x` and
/// abstracts the old free variable: `[y] C[u]  ↦  [x] λy. C[u(x)]`.
///
/// No check is made that the focus is an outer handle, so the result may
/// be non-planar.
pub fn wrap_value_open(t1: &LinearTerm, focus: &[Step]) -> Result<LinearTerm, LambdaError> {
    if t1.arity() != 1 {
        return Err(LambdaError::NotNpt("expected exactly one free variable"));
    }
    let mut term = t1.term().clone();
    let depth = Term::depth_at(focus);
    let node = term.subterm_mut(focus).ok_or(LambdaError::BadPath)?;
    let u = std::mem::replace(node, Term::Var(0));
    // inside the new abstraction the old free variable keeps its index and
    // the new one sits just past it
    *node = Term::app(u, Term::Var(depth + 1));
    LinearTerm::new(Term::lam(term), 1)
}

/// Factors `t1` at its `k`-th outer neutral handle (1-based) and builds the
/// corresponding value-open term.
pub fn compose_val_open(t1: &Npt, k: usize) -> Result<Npt, LambdaError> {
    let paths = handle_paths(t1.coloring.root(), t1.term.term());
    if k == 0 || k > paths.len() {
        return Err(LambdaError::HandleOutOfRange {
            k,
            count: paths.len(),
        });
    }
    Npt::new(wrap_value_open(&t1.term, &paths[k - 1])?)
}

/// Removes the leading abstraction and the application to the free
/// variable, returning the resulting term and the handle index that
/// [`compose_val_open`] needs to rebuild `t`.
pub fn decompose_val_open(t: &Npt) -> Result<(Npt, usize), LambdaError> {
    let Trichotomy::ValueOpen { site } = t.classify() else {
        return Err(LambdaError::NotValueOpen);
    };
    let Term::Lam(body) = t.term.term() else {
        unreachable!("a value-open term begins with an abstraction");
    };
    debug_assert_eq!(site.first(), Some(&Step::Body));
    let focus = site[1..].to_vec();
    let mut body = (**body).clone();
    let node = body.subterm_mut(&focus).expect("site path is valid");
    let Term::App(u, _) = std::mem::replace(node, Term::Var(0)) else {
        unreachable!("site addresses an application");
    };
    *node = *u;
    let t1 = Npt::new(LinearTerm::new_unchecked(body, 1))?;
    let k = handle_paths(t1.coloring.root(), t1.term.term())
        .iter()
        .position(|p| *p == focus)
        .ok_or(LambdaError::NotOuterHandle)?;
    Ok((t1, k + 1))
}
