//! Rooted planar maps as rotation systems, with Tutte's trichotomy and
//! root-edge operators.

mod canonical;
mod map;
mod ops;

pub use canonical::{canonicalize, CanonicalMap};
pub use map::{Dart, MapClass, MapReport, RootedMap};
pub use ops::{compose_isthmic, compose_nonisthmic, decompose_isthmic, decompose_nonisthmic};

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("malformed rotation: {0}")]
    MalformedPermutation(String),
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("map is not planar (genus {genus})")]
    NonPlanar { genus: usize },
    #[error("bad root: {0}")]
    BadRoot(String),
    #[error("root edge is not an isthmus")]
    NotIsthmic,
    #[error("root edge is not a non-isthmic edge")]
    NotNonIsthmic,
    #[error("walk of {k} darts exceeds outer face degree {degree}")]
    WalkOutOfRange { k: usize, degree: usize },
}

/// All rooted planar maps with `0..=max_edges` edges, generated from the
/// vertex map by closing under both compose operators. Layer `n` holds the
/// distinct canonical maps with `n` edges in sorted order.
pub fn maps_by_edges(max_edges: usize) -> Vec<Vec<RootedMap>> {
    let mut layers: Vec<Vec<RootedMap>> = vec![vec![RootedMap::vertex()]];
    for n in 1..=max_edges {
        let mut layer = BTreeSet::new();
        for e1 in 0..n {
            let e2 = n - 1 - e1;
            for m1 in &layers[e1] {
                for m2 in &layers[e2] {
                    layer.insert(compose_isthmic(m1, m2));
                }
            }
        }
        for m in &layers[n - 1] {
            for k in 0..=m.outer_face_degree() {
                layer.insert(compose_nonisthmic(m, k).expect("k bounded by outer degree"));
            }
        }
        layers.push(layer.into_iter().collect());
    }
    layers
}
