//! Nameless linear lambda terms.
//!
//! Variables are binder-distance indices. A term with `arity` free
//! variables sees them as indices `depth + 0 .. depth + arity`, where index
//! `depth + 0` is the leftmost entry of the context `[x_i, …, x_1]`. A lambda
//! prepends its variable to the context, so the innermost binder is always
//! index 0. With this convention α-equivalence is plain structural equality.

use std::fmt;

use super::LambdaError;

/// A nameless lambda term.
///
/// The variant order gives the canonical term order used by enumeration:
/// `Var < App < Lam`, compared structurally left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    App(Box<Term>, Box<Term>),
    Lam(Box<Term>),
}

impl Term {
    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn lam(body: Term) -> Term {
        Term::Lam(Box::new(body))
    }

    /// Number of variable occurrences (skeleton leaves).
    pub fn leaves(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(f, a) => f.leaves() + a.leaves(),
            Term::Lam(b) => b.leaves(),
        }
    }

    /// Number of occurrences referring to variables bound outside this term.
    ///
    /// For a linear subterm this is the size of its context.
    pub fn free_occurrences(&self) -> usize {
        fn go(t: &Term, depth: usize) -> usize {
            match t {
                Term::Var(i) => usize::from(*i >= depth),
                Term::App(f, a) => go(f, depth) + go(a, depth),
                Term::Lam(b) => go(b, depth + 1),
            }
        }
        go(self, 0)
    }

    pub fn subterm(&self, path: &[Step]) -> Option<&Term> {
        let mut cur = self;
        for step in path {
            cur = match (step, cur) {
                (Step::Fun, Term::App(f, _)) => f,
                (Step::Arg, Term::App(_, a)) => a,
                (Step::Body, Term::Lam(b)) => b,
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn subterm_mut(&mut self, path: &[Step]) -> Option<&mut Term> {
        let mut cur = self;
        for step in path {
            cur = match (step, cur) {
                (Step::Fun, Term::App(f, _)) => f,
                (Step::Arg, Term::App(_, a)) => a,
                (Step::Body, Term::Lam(b)) => b,
                _ => return None,
            };
        }
        Some(cur)
    }

    /// Lambda depth of the node at `path`, i.e. the number of `Body` steps.
    pub fn depth_at(path: &[Step]) -> usize {
        path.iter().filter(|s| **s == Step::Body).count()
    }

    /// Paths to every occurrence of the free variable with context position
    /// `slot`.
    pub fn occurrences_of_free(&self, slot: usize) -> Vec<Path> {
        fn go(t: &Term, depth: usize, slot: usize, path: &mut Path, out: &mut Vec<Path>) {
            match t {
                Term::Var(i) => {
                    if *i == depth + slot {
                        out.push(path.clone());
                    }
                }
                Term::App(f, a) => {
                    path.push(Step::Fun);
                    go(f, depth, slot, path, out);
                    path.pop();
                    path.push(Step::Arg);
                    go(a, depth, slot, path, out);
                    path.pop();
                }
                Term::Lam(b) => {
                    path.push(Step::Body);
                    go(b, depth + 1, slot, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, 0, slot, &mut Vec::new(), &mut out);
        out
    }
}

/// One step from a node to one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Function side of an application.
    Fun,
    /// Argument side of an application.
    Arg,
    /// Body of an abstraction.
    Body,
}

/// Root-to-node address inside a term.
pub type Path = Vec<Step>;

/// A linear lambda term together with the length of its free-variable
/// context.
///
/// Construction through [`LinearTerm::new`] checks that every bound and free
/// variable is used exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearTerm {
    term: Term,
    arity: usize,
}

impl LinearTerm {
    pub fn new(term: Term, arity: usize) -> Result<Self, LambdaError> {
        check_linear(&term, arity)?;
        Ok(LinearTerm { term, arity })
    }

    /// Builds a term already known to be linear.
    pub(crate) fn new_unchecked(term: Term, arity: usize) -> Self {
        debug_assert!(check_linear(&term, arity).is_ok(), "not linear: {term:?}");
        LinearTerm { term, arity }
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn into_term(self) -> Term {
        self.term
    }

    /// Number of free variables (length of the context).
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of variable occurrences.
    pub fn leaves(&self) -> usize {
        self.term.leaves()
    }
}

impl fmt::Display for LinearTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::print_term(self))
    }
}

fn check_linear(term: &Term, arity: usize) -> Result<(), LambdaError> {
    // uses[k] counts occurrences of the k-th variable in scope, ordered
    // outermost first: free variables (rightmost context entry first), then
    // binders.
    fn go(t: &Term, scope: &mut Vec<u32>) -> Result<(), LambdaError> {
        match t {
            Term::Var(i) => {
                let n = scope.len();
                if *i >= n {
                    return Err(LambdaError::UnboundIndex(*i));
                }
                scope[n - 1 - i] += 1;
                Ok(())
            }
            Term::App(f, a) => {
                go(f, scope)?;
                go(a, scope)
            }
            Term::Lam(b) => {
                scope.push(0);
                go(b, scope)?;
                let uses = scope.pop().unwrap_or_default();
                if uses != 1 {
                    return Err(LambdaError::NotLinear { uses });
                }
                Ok(())
            }
        }
    }
    let mut scope = vec![0u32; arity];
    go(term, &mut scope)?;
    if let Some(uses) = scope.iter().copied().find(|u| *u != 1) {
        return Err(LambdaError::NotLinear { uses });
    }
    Ok(())
}
