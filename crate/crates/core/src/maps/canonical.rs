use std::collections::VecDeque;
use std::ops::Deref;

use super::map::{dart_of, index_of, opposite, Dart, RootedMap};

/// A rooted map relabeled into its canonical form. Two rooted maps are
/// equivalent up to root-preserving homeomorphism iff their canonical forms
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalMap(RootedMap);

impl CanonicalMap {
    pub fn into_inner(self) -> RootedMap {
        self.0
    }
}

impl Deref for CanonicalMap {
    type Target = RootedMap;

    fn deref(&self) -> &RootedMap {
        &self.0
    }
}

/// Relabels darts by a breadth-first walk from the root, visiting the
/// rotation successor before the opposite dart. The first dart discovered
/// on each edge gets the positive label; edges are numbered in discovery
/// order, so the root becomes `+1`.
pub fn canonicalize(m: &RootedMap) -> CanonicalMap {
    match m.root() {
        None => CanonicalMap(RootedMap::vertex()),
        Some(root) => {
            let sigma = m.sigma_indices();
            CanonicalMap(relabel_component(index_of(root), sigma.len(), |i| sigma[i]))
        }
    }
}

/// Canonical map of the connected component of `root`, under a rotation
/// given as a function on dart indices in `0..n`.
pub(crate) fn relabel_component(
    root: usize,
    n: usize,
    sigma: impl Fn(usize) -> usize,
) -> RootedMap {
    let mut label: Vec<Option<Dart>> = vec![None; n];
    let mut order = Vec::new();
    let mut next_edge: Dart = 1;
    let mut queue = VecDeque::new();

    label[root] = Some(next_edge);
    next_edge += 1;
    order.push(root);
    queue.push_back(root);
    while let Some(d) = queue.pop_front() {
        for nb in [sigma(d), opposite(d)] {
            if label[nb].is_some() {
                continue;
            }
            let l = match label[opposite(nb)] {
                Some(partner) => -partner,
                None => {
                    next_edge += 1;
                    next_edge - 1
                }
            };
            label[nb] = Some(l);
            order.push(nb);
            queue.push_back(nb);
        }
    }

    let mut new_sigma = vec![0usize; order.len()];
    for &old in &order {
        let from = index_of(label[old].expect("labeled"));
        let to = index_of(label[sigma(old)].expect("component is closed under sigma"));
        new_sigma[from] = to;
    }
    RootedMap::from_parts_unchecked(new_sigma, Some(dart_of(0)))
}
