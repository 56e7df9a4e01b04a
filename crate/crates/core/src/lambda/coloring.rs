//! Neutral (blue) and normal (red) colorings of terms.

use super::{LambdaError, LinearTerm, Term};

/// The two colors a derivation can conclude with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Blue: a variable applied to a sequence of normal arguments.
    Neutral,
    /// Red: abstractions over a neutral term.
    Normal,
}

/// A derivation node. Each rule mirrors one term constructor except `S`,
/// which injects a neutral derivation into the normal ones and leaves the
/// term unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Variable; concludes neutral.
    V,
    /// Neutral function applied to a normal argument; concludes neutral.
    A(Box<Rule>, Box<Rule>),
    /// Neutral seen as normal.
    S(Box<Rule>),
    /// Abstraction over a normal body; concludes normal.
    L(Box<Rule>),
}

impl Rule {
    pub fn kind(&self) -> Kind {
        match self {
            Rule::V | Rule::A(..) => Kind::Neutral,
            Rule::S(_) | Rule::L(_) => Kind::Normal,
        }
    }

    /// Number of `S` nodes.
    pub fn size(&self) -> usize {
        match self {
            Rule::V => 0,
            Rule::A(f, a) => f.size() + a.size(),
            Rule::S(n) => 1 + n.size(),
            Rule::L(b) => b.size(),
        }
    }

    /// Count of each rule: `(v, a, s, l)`.
    pub fn census(&self) -> (usize, usize, usize, usize) {
        match self {
            Rule::V => (1, 0, 0, 0),
            Rule::A(f, a) => {
                let (v1, a1, s1, l1) = f.census();
                let (v2, a2, s2, l2) = a.census();
                (v1 + v2, a1 + a2 + 1, s1 + s2, l1 + l2)
            }
            Rule::S(n) => {
                let (v, a, s, l) = n.census();
                (v, a, s + 1, l)
            }
            Rule::L(b) => {
                let (v, a, s, l) = b.census();
                (v, a, s, l + 1)
            }
        }
    }
}

/// A derivation witnessing that a term is neutral or normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    root: Rule,
    degree: usize,
}

impl Coloring {
    pub fn kind(&self) -> Kind {
        self.root.kind()
    }

    pub fn root(&self) -> &Rule {
        &self.root
    }

    /// Number of uses of the `s` rule.
    pub fn size(&self) -> usize {
        self.root.size()
    }

    /// Context length of the colored term.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// True iff this derivation colors the given term.
    pub fn colors(&self, t: &LinearTerm) -> bool {
        fn fits(rule: &Rule, term: &Term) -> bool {
            match (rule, term) {
                (Rule::V, Term::Var(_)) => true,
                (Rule::A(rf, ra), Term::App(f, a)) => {
                    rf.kind() == Kind::Neutral && ra.kind() == Kind::Normal && fits(rf, f) && fits(ra, a)
                }
                (Rule::S(n), t) => n.kind() == Kind::Neutral && fits(n, t),
                (Rule::L(b), Term::Lam(body)) => b.kind() == Kind::Normal && fits(b, body),
                _ => false,
            }
        }
        self.degree == t.arity() && fits(&self.root, t.term())
    }
}

/// Derivation of a term of the given kind, if one exists.
pub fn color_term(term: &Term, kind: Kind) -> Option<Rule> {
    match kind {
        Kind::Neutral => match term {
            Term::Var(_) => Some(Rule::V),
            Term::App(f, a) => Some(Rule::A(
                Box::new(color_term(f, Kind::Neutral)?),
                Box::new(color_term(a, Kind::Normal)?),
            )),
            Term::Lam(_) => None,
        },
        Kind::Normal => match term {
            Term::Lam(b) => Some(Rule::L(Box::new(color_term(b, Kind::Normal)?))),
            t => Some(Rule::S(Box::new(color_term(t, Kind::Neutral)?))),
        },
    }
}

/// The unique coloring of `t` of the requested kind. Absent when `t`
/// contains a redex, or (for `Neutral`) when `t` is not headed by a variable.
pub fn color(t: &LinearTerm, kind: Kind) -> Option<Coloring> {
    color_term(t.term(), kind).map(|root| Coloring {
        root,
        degree: t.arity(),
    })
}

fn require(t: &LinearTerm, c: &Coloring, kind: Kind) -> Result<(), LambdaError> {
    if c.kind() != kind || !c.colors(t) {
        return Err(LambdaError::ColoringMismatch);
    }
    Ok(())
}

/// Context position of the variable reached by following function sides
/// from the root of a neutral term.
pub fn head_variable(t: &LinearTerm, c: &Coloring) -> Result<usize, LambdaError> {
    require(t, c, Kind::Neutral)?;
    let mut cur = t.term();
    loop {
        match cur {
            Term::App(f, _) => cur = f,
            // no abstraction lies on the head spine, so the index is the slot
            Term::Var(i) => return Ok(*i),
            Term::Lam(_) => unreachable!("neutral coloring has no abstraction on its spine"),
        }
    }
}

/// Strips the leading abstractions of a normal term. The stripped variables
/// are prepended to the context, innermost first.
pub fn neutral_body(t: &LinearTerm, c: &Coloring) -> Result<LinearTerm, LambdaError> {
    require(t, c, Kind::Normal)?;
    let mut cur = t.term();
    let mut arity = t.arity();
    while let Term::Lam(b) = cur {
        cur = b;
        arity += 1;
    }
    Ok(LinearTerm::new_unchecked(cur.clone(), arity))
}
