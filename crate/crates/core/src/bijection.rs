//! The size-preserving bijection between rooted planar maps and normal
//! planar terms, obtained by running both Tutte decompositions in parallel.
//!
//! A map with `n` edges and outer face degree `d` corresponds to a term of
//! size `n + 1` with `d + 1` outer neutral handles.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::counting::enumerate_npt;
use crate::lambda::{
    compose_fun_open, compose_val_open, decompose_fun_open, decompose_val_open, Coloring,
    LambdaError, LinearTerm, Npt, Trichotomy,
};
use crate::maps::{
    canonicalize, compose_isthmic, compose_nonisthmic, decompose_isthmic, decompose_nonisthmic,
    maps_by_edges, MapClass, MapError, RootedMap,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Term(#[from] LambdaError),
}

/// One decomposition step, shared by both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceStep {
    /// Vertex map / identity term.
    Vertex,
    /// Isthmic root / function-open term; followed by two sub-traces.
    Isthmic,
    /// Non-isthmic root with a backward walk of `k` darts / value-open term
    /// at handle `k + 1`; followed by one sub-trace.
    NonIsthmic { k: usize },
}

/// A full decomposition, as the pre-order list of its steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompTrace {
    steps: Vec<TraceStep>,
}

impl DecompTrace {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// Number of edges of the map side (one less than the term size).
    pub fn edges(&self) -> usize {
        self.steps.len() - self.steps.iter().filter(|s| **s == TraceStep::Vertex).count()
    }

    /// Decomposes a map.
    pub fn of_map(m: &RootedMap) -> Result<Self, BijectionError> {
        m.validate()?;
        let mut steps = Vec::new();
        let mut pending = vec![m.clone()];
        while let Some(m) = pending.pop() {
            match m.classify() {
                MapClass::VertexMap => steps.push(TraceStep::Vertex),
                MapClass::IsthmicRoot => {
                    let (m1, m2) = decompose_isthmic(&m)?;
                    steps.push(TraceStep::Isthmic);
                    pending.push(m2);
                    pending.push(m1);
                }
                MapClass::NonIsthmicRoot => {
                    let (m1, k) = decompose_nonisthmic(&m)?;
                    steps.push(TraceStep::NonIsthmic { k });
                    pending.push(m1);
                }
            }
        }
        Ok(DecompTrace { steps })
    }

    /// Decomposes a normal planar term.
    pub fn of_term(t: &Npt) -> Result<Self, BijectionError> {
        let mut steps = Vec::new();
        let mut pending = vec![t.clone()];
        while let Some(t) = pending.pop() {
            match t.classify() {
                Trichotomy::IdentityTerm => steps.push(TraceStep::Vertex),
                Trichotomy::FunctionOpen { .. } => {
                    let (t1, t2) = decompose_fun_open(&t)?;
                    steps.push(TraceStep::Isthmic);
                    pending.push(t2);
                    pending.push(t1);
                }
                Trichotomy::ValueOpen { .. } => {
                    let (t1, handle) = decompose_val_open(&t)?;
                    steps.push(TraceStep::NonIsthmic { k: handle - 1 });
                    pending.push(t1);
                }
            }
        }
        Ok(DecompTrace { steps })
    }

    /// Rebuilds the object on either side by replaying the steps bottom-up.
    fn replay<T>(
        &self,
        vertex: impl Fn() -> T,
        isthmic: impl Fn(T, T) -> Result<T, BijectionError>,
        nonisthmic: impl Fn(T, usize) -> Result<T, BijectionError>,
    ) -> Result<T, BijectionError> {
        // reversed pre-order visits children before parents, right child
        // first, so the left result is on top when the parent is reached
        let mut values: Vec<T> = Vec::new();
        for step in self.steps.iter().rev() {
            let v = match *step {
                TraceStep::Vertex => vertex(),
                TraceStep::Isthmic => {
                    let left = values.pop().expect("well-formed trace");
                    let right = values.pop().expect("well-formed trace");
                    isthmic(left, right)?
                }
                TraceStep::NonIsthmic { k } => {
                    let inner = values.pop().expect("well-formed trace");
                    nonisthmic(inner, k)?
                }
            };
            values.push(v);
        }
        let out = values.pop().expect("non-empty trace");
        debug_assert!(values.is_empty());
        Ok(out)
    }

    pub fn to_map(&self) -> Result<RootedMap, BijectionError> {
        self.replay(
            RootedMap::vertex,
            |m1, m2| Ok(compose_isthmic(&m1, &m2)),
            |m1, k| Ok(compose_nonisthmic(&m1, k)?),
        )
    }

    pub fn to_term(&self) -> Result<Npt, BijectionError> {
        self.replay(
            Npt::identity,
            |t1, t2| Ok(compose_fun_open(&t1, &t2)),
            |t1, k| Ok(compose_val_open(&t1, k + 1)?),
        )
    }
}

impl fmt::Display for DecompTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match step {
                TraceStep::Vertex => f.write_str("V")?,
                TraceStep::Isthmic => f.write_str("I")?,
                TraceStep::NonIsthmic { k } => write!(f, "N{k}")?,
            }
        }
        Ok(())
    }
}

/// The term corresponding to a rooted planar map.
pub fn map_to_term(m: &RootedMap) -> Result<(LinearTerm, Coloring), BijectionError> {
    Ok(DecompTrace::of_map(m)?.to_term()?.into_parts())
}

/// The rooted planar map (in canonical form) corresponding to a term.
pub fn term_to_map(t: &LinearTerm, c: &Coloring) -> Result<RootedMap, BijectionError> {
    let npt = Npt::new(t.clone())?;
    if npt.coloring() != c {
        return Err(LambdaError::ColoringMismatch.into());
    }
    DecompTrace::of_term(&npt)?.to_map()
}

/// A single failed check, with the decomposition that exposed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub size: usize,
    pub object: String,
    pub trace: Option<String>,
    pub message: String,
}

/// Per-size outcome of [`verify_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub size: usize,
    pub terms: usize,
    pub maps: usize,
    pub term_roundtrips: usize,
    pub map_roundtrips: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BijectionReport {
    pub sizes: Vec<SizeReport>,
    pub violations: Vec<Violation>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every size `1..=max_size`: term→map→term is the identity on
/// all normal planar terms; map→term→map is the identity on all maps with
/// one edge fewer; both sides have the same count; images are distinct;
/// and each pair satisfies `edges = size - 1` and
/// `outer degree = handles - 1`.
pub fn verify_bijection(max_size: usize) -> BijectionReport {
    let mut report = BijectionReport::default();
    let layers = maps_by_edges(max_size.saturating_sub(1));
    for size in 1..=max_size {
        let terms = enumerate_npt(size, 1);
        let maps = &layers[size - 1];
        let mut sr = SizeReport {
            size,
            terms: terms.len(),
            maps: maps.len(),
            term_roundtrips: 0,
            map_roundtrips: 0,
        };
        let mut fail = |object: String, trace: Option<&DecompTrace>, message: String| {
            report.violations.push(Violation {
                size,
                object,
                trace: trace.map(|t| t.to_string()),
                message,
            })
        };
        if terms.len() != maps.len() {
            fail(
                format!("size {size}"),
                None,
                format!("{} terms but {} maps", terms.len(), maps.len()),
            );
        }

        let mut images = BTreeSet::new();
        for (t, _) in &terms {
            let npt = match Npt::new(t.clone()) {
                Ok(n) => n,
                Err(e) => {
                    fail(t.to_string(), None, e.to_string());
                    continue;
                }
            };
            let trace = match DecompTrace::of_term(&npt) {
                Ok(tr) => tr,
                Err(e) => {
                    fail(t.to_string(), None, e.to_string());
                    continue;
                }
            };
            let checked = trace.to_map().and_then(|m| {
                let back = DecompTrace::of_map(&m)?.to_term()?;
                Ok((m, back))
            });
            match checked {
                Err(e) => fail(t.to_string(), Some(&trace), e.to_string()),
                Ok((m, back)) => {
                    if back != npt {
                        fail(t.to_string(), Some(&trace), format!("came back as {back}"));
                        continue;
                    }
                    if m.edge_count() + 1 != npt.size() {
                        fail(t.to_string(), Some(&trace), "edges != size - 1".into());
                        continue;
                    }
                    if m.outer_face_degree() + 1 != npt.handle_count() {
                        fail(t.to_string(), Some(&trace), "outer degree != handles - 1".into());
                        continue;
                    }
                    if !images.insert(m) {
                        fail(t.to_string(), Some(&trace), "map image is not unique".into());
                        continue;
                    }
                    sr.term_roundtrips += 1;
                }
            }
        }

        for m in maps {
            let trace = match DecompTrace::of_map(m) {
                Ok(tr) => tr,
                Err(e) => {
                    fail(format!("{m:?}"), None, e.to_string());
                    continue;
                }
            };
            let checked = trace.to_term().and_then(|t| {
                let back = DecompTrace::of_term(&t)?.to_map()?;
                Ok((t, back))
            });
            match checked {
                Err(e) => fail(format!("{m:?}"), Some(&trace), e.to_string()),
                Ok((t, back)) => {
                    if canonicalize(&back) != canonicalize(m) {
                        fail(format!("{m:?}"), Some(&trace), "map roundtrip differs".into());
                    } else if t.size() != m.edge_count() + 1
                        || t.handle_count() != m.outer_face_degree() + 1
                    {
                        fail(format!("{m:?}"), Some(&trace), "size or handle law fails".into());
                    } else if !images.contains(&canonicalize(m).into_inner()) {
                        fail(format!("{m:?}"), Some(&trace), "map is not the image of a term".into());
                    } else {
                        sr.map_roundtrips += 1;
                    }
                }
            }
        }
        report.sizes.push(sr);
    }
    report
}
