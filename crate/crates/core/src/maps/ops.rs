//! Tutte's root-edge operators and their inverses.
//!
//! Both compose operators are defined by the face boundaries they create;
//! the rotation follows from `sigma(d) = phi(-d)`. Every result is returned
//! in canonical form.

use super::canonical::{canonicalize, relabel_component};
use super::map::{index_of, opposite, MapClass, RootedMap};
use super::MapError;

/// Face permutation of `m` with every dart index shifted by `offset`.
fn shifted_phi(m: &RootedMap, offset: usize, phi: &mut [usize]) {
    for i in 0..2 * m.edge_count() {
        phi[i + offset] = m.phi_index(i) + offset;
    }
}

fn outer_indices(m: &RootedMap, offset: usize) -> Vec<usize> {
    m.outer_face().into_iter().map(|d| index_of(d) + offset).collect()
}

fn close_cycle(phi: &mut [usize], cycle: &[usize]) {
    for (pos, &d) in cycle.iter().enumerate() {
        phi[d] = cycle[(pos + 1) % cycle.len()];
    }
}

/// Joins `m1` and `m2` by a new isthmic root edge from the root vertex of
/// `m1` to the root vertex of `m2`. The outer face becomes the root, the
/// outer face of `m2`, the opposite of the root, then the outer face of
/// `m1`.
pub fn compose_isthmic(m1: &RootedMap, m2: &RootedMap) -> RootedMap {
    let (n1, n2) = (2 * m1.edge_count(), 2 * m2.edge_count());
    let mut phi = vec![0usize; 2 + n1 + n2];
    shifted_phi(m1, 2, &mut phi);
    shifted_phi(m2, 2 + n1, &mut phi);
    let mut outer = vec![0usize];
    outer.extend(outer_indices(m2, 2 + n1));
    outer.push(1);
    outer.extend(outer_indices(m1, 2));
    close_cycle(&mut phi, &outer);
    let m = RootedMap::from_phi(&phi, Some(1)).expect("isthmic composition preserves planarity");
    canonicalize(&m).into_inner()
}

/// Rotation of `m` with the root edge removed, as a function on the
/// remaining dart indices.
fn sigma_without_root(m: &RootedMap) -> impl Fn(usize) -> usize + '_ {
    let root = index_of(m.root().expect("map has a root edge"));
    let gone = [root, opposite(root)];
    move |d| {
        let mut s = m.sigma_indices()[d];
        while gone.contains(&s) {
            s = m.sigma_indices()[s];
        }
        s
    }
}

/// Deletes an isthmic root and roots the two sides at the darts following
/// the opposite of the root and the root along the outer face.
pub fn decompose_isthmic(m: &RootedMap) -> Result<(RootedMap, RootedMap), MapError> {
    if m.classify() != MapClass::IsthmicRoot {
        return Err(MapError::NotIsthmic);
    }
    let a = index_of(m.root().expect("isthmic root"));
    let b = m.phi_index(opposite(a));
    let c = m.phi_index(a);
    let n = 2 * m.edge_count();
    let sigma = sigma_without_root(m);
    let m1 = if b == a {
        RootedMap::vertex()
    } else {
        relabel_component(b, n, &sigma)
    };
    let m2 = if c == opposite(a) {
        RootedMap::vertex()
    } else {
        relabel_component(c, n, &sigma)
    };
    Ok((m1, m2))
}

/// Adds a non-isthmic root edge from the root vertex to the vertex reached
/// by walking `k` darts backwards along the outer face. The new root face
/// is the new root followed by those `k` darts.
pub fn compose_nonisthmic(m1: &RootedMap, k: usize) -> Result<RootedMap, MapError> {
    let degree = m1.outer_face_degree();
    if k > degree {
        return Err(MapError::WalkOutOfRange { k, degree });
    }
    let n1 = 2 * m1.edge_count();
    let mut phi = vec![0usize; 2 + n1];
    shifted_phi(m1, 2, &mut phi);
    let outer = outer_indices(m1, 2);
    let split = degree - k;
    let mut root_face = vec![0usize];
    root_face.extend_from_slice(&outer[split..]);
    let mut other_face = vec![1usize];
    other_face.extend_from_slice(&outer[..split]);
    close_cycle(&mut phi, &root_face);
    close_cycle(&mut phi, &other_face);
    let m = RootedMap::from_phi(&phi, Some(1)).expect("non-isthmic composition preserves planarity");
    Ok(canonicalize(&m).into_inner())
}

/// Deletes a non-isthmic root. The remaining map is rooted at the dart
/// following the opposite of the root along its face, or, when that dart is
/// the opposite itself, at the dart following the root. Returns the walk
/// length `k` that rebuilds `m` through [`compose_nonisthmic`].
pub fn decompose_nonisthmic(m: &RootedMap) -> Result<(RootedMap, usize), MapError> {
    if m.classify() != MapClass::NonIsthmicRoot {
        return Err(MapError::NotNonIsthmic);
    }
    let a = index_of(m.root().expect("non-isthmic root"));
    let k = m.outer_face_degree() - 1;
    let after_opposite = m.phi_index(opposite(a));
    let new_root = if after_opposite != opposite(a) {
        Some(after_opposite)
    } else if m.phi_index(a) != a {
        Some(m.phi_index(a))
    } else {
        None
    };
    let m1 = match new_root {
        None => RootedMap::vertex(),
        Some(r) => relabel_component(r, 2 * m.edge_count(), sigma_without_root(m)),
    };
    Ok((m1, k))
}
