//! Lambda skeletons (unary-binary trees) and their stack-based decoration
//! into planar terms.

use super::{LambdaError, LinearTerm, Term};

/// A lambda skeleton: a term with placeholders instead of variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Skeleton {
    Leaf,
    App(Box<Skeleton>, Box<Skeleton>),
    Lam(Box<Skeleton>),
}

impl Skeleton {
    pub fn app(p: Skeleton, q: Skeleton) -> Skeleton {
        Skeleton::App(Box::new(p), Box::new(q))
    }

    pub fn lam(p: Skeleton) -> Skeleton {
        Skeleton::Lam(Box::new(p))
    }

    /// Leaves minus abstractions, or `None` when some abstraction would have
    /// negative degree (the tree is not a skeleton of any term).
    pub fn degree(&self) -> Option<usize> {
        match self {
            Skeleton::Leaf => Some(1),
            Skeleton::App(p, q) => Some(p.degree()? + q.degree()?),
            Skeleton::Lam(p) => p.degree()?.checked_sub(1),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Skeleton::Leaf => 1,
            Skeleton::App(p, q) => p.leaves() + q.leaves(),
            Skeleton::Lam(p) => p.leaves(),
        }
    }

    /// The skeleton underlying a term.
    pub fn of(term: &Term) -> Skeleton {
        match term {
            Term::Var(_) => Skeleton::Leaf,
            Term::App(f, a) => Skeleton::app(Skeleton::of(f), Skeleton::of(a)),
            Term::Lam(b) => Skeleton::lam(Skeleton::of(b)),
        }
    }
}

/// Order in which the two sides of an application consume the variable
/// stack.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    /// Function first, then argument (ordinary planarity).
    LeftToRight,
    /// Argument first, then function.
    RightToLeft,
}

#[derive(Clone, Copy)]
enum Slot {
    Free(usize),
    Bound { binder_depth: usize },
}

/// Decorates `skel` by walking it with a stack of variables: a leaf pops the
/// top, an abstraction pushes a fresh variable, an application visits its
/// sides in the given order. The initial stack is the context with its
/// leftmost entry on top.
pub fn decorate(skel: &Skeleton, order: Traversal) -> Result<LinearTerm, LambdaError> {
    let arity = skel.degree().ok_or(LambdaError::IllFormedSkeleton)?;
    let mut stack: Vec<Slot> = (0..arity).rev().map(Slot::Free).collect();
    let term = walk(skel, order, 0, &mut stack);
    debug_assert!(stack.is_empty());
    Ok(LinearTerm::new_unchecked(term, arity))
}

fn walk(skel: &Skeleton, order: Traversal, depth: usize, stack: &mut Vec<Slot>) -> Term {
    match skel {
        Skeleton::Leaf => match stack.pop().expect("degree guarantees a variable") {
            Slot::Free(slot) => Term::Var(depth + slot),
            Slot::Bound { binder_depth } => Term::Var(depth - binder_depth - 1),
        },
        Skeleton::Lam(body) => {
            stack.push(Slot::Bound { binder_depth: depth });
            Term::lam(walk(body, order, depth + 1, stack))
        }
        Skeleton::App(p, q) => match order {
            Traversal::LeftToRight => {
                let f = walk(p, order, depth, stack);
                let a = walk(q, order, depth, stack);
                Term::app(f, a)
            }
            Traversal::RightToLeft => {
                let a = walk(q, order, depth, stack);
                let f = walk(p, order, depth, stack);
                Term::app(f, a)
            }
        },
    }
}

/// The unique planar decoration of a skeleton.
pub fn decorate_planar(skel: &Skeleton) -> Result<LinearTerm, LambdaError> {
    decorate(skel, Traversal::LeftToRight)
}

/// The right-to-left planar decoration of a skeleton.
pub fn decorate_rl(skel: &Skeleton) -> Result<LinearTerm, LambdaError> {
    decorate(skel, Traversal::RightToLeft)
}

/// True iff `t` is the planar decoration of its own skeleton.
pub fn is_planar(t: &LinearTerm) -> bool {
    decorate_planar(&Skeleton::of(t.term())).is_ok_and(|d| &d == t)
}
