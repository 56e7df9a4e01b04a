use std::collections::VecDeque;

use super::MapError;

/// A dart: edge `i` (1-based) yields darts `+i` and `-i`, opposite to each
/// other.
pub type Dart = i32;

pub(crate) fn index_of(d: Dart) -> usize {
    let e = d.unsigned_abs() as usize - 1;
    2 * e + usize::from(d < 0)
}

pub(crate) fn dart_of(idx: usize) -> Dart {
    let e = (idx / 2 + 1) as Dart;
    if idx.is_multiple_of(2) {
        e
    } else {
        -e
    }
}

#[inline]
pub(crate) fn opposite(idx: usize) -> usize {
    idx ^ 1
}

/// Tutte's trichotomy on rooted planar maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapClass {
    VertexMap,
    IsthmicRoot,
    NonIsthmicRoot,
}

/// Cell counts of a validated map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

/// A rooted planar map given by a rotation system.
///
/// `sigma` is the counterclockwise successor of each dart around its
/// source vertex, stored by dart index (`+i ↦ 2i-2`, `-i ↦ 2i-1`).
/// Faces are the orbits of `phi = sigma ∘ alpha`, where `alpha` negates a
/// dart; the face of a dart is the one to its left. The vertex map has no
/// darts and no root.
///
/// Values are only built through validating constructors, so every
/// `RootedMap` is connected and planar.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedMap {
    sigma: Vec<usize>,
    root: Option<Dart>,
}

impl RootedMap {
    /// The map with one vertex and no edges.
    pub fn vertex() -> Self {
        RootedMap {
            sigma: Vec::new(),
            root: None,
        }
    }

    /// Builds a map from counterclockwise vertex rotations.
    pub fn from_rotation(
        edges: usize,
        vertices: &[Vec<Dart>],
        root: Option<Dart>,
    ) -> Result<Self, MapError> {
        let n = 2 * edges;
        let mut sigma = vec![usize::MAX; n];
        for cycle in vertices {
            for (pos, &d) in cycle.iter().enumerate() {
                if d == 0 || d.unsigned_abs() as usize > edges {
                    return Err(MapError::MalformedPermutation(format!(
                        "dart {d} is not in ±1..±{edges}"
                    )));
                }
                let next = cycle[(pos + 1) % cycle.len()];
                let slot = &mut sigma[index_of(d)];
                if *slot != usize::MAX {
                    return Err(MapError::MalformedPermutation(format!(
                        "dart {d} appears more than once"
                    )));
                }
                *slot = index_of(next);
            }
        }
        if let Some(missing) = sigma.iter().position(|s| *s == usize::MAX) {
            return Err(MapError::MalformedPermutation(format!(
                "dart {} appears in no vertex",
                dart_of(missing)
            )));
        }
        let map = RootedMap { sigma, root };
        map.validate()?;
        Ok(map)
    }

    /// Builds a map from its face permutation, deriving `sigma = phi ∘ alpha`.
    pub(crate) fn from_phi(phi: &[usize], root: Option<Dart>) -> Result<Self, MapError> {
        let sigma = (0..phi.len()).map(|i| phi[opposite(i)]).collect();
        let map = RootedMap { sigma, root };
        map.validate()?;
        Ok(map)
    }

    /// Wraps a rotation already known to describe a valid map.
    pub(crate) fn from_parts_unchecked(sigma: Vec<usize>, root: Option<Dart>) -> Self {
        let map = RootedMap { sigma, root };
        debug_assert!(map.validate().is_ok());
        map
    }

    pub fn root(&self) -> Option<Dart> {
        self.root
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn is_vertex_map(&self) -> bool {
        self.sigma.is_empty()
    }

    pub(crate) fn sigma_indices(&self) -> &[usize] {
        &self.sigma
    }

    pub(crate) fn phi_index(&self, idx: usize) -> usize {
        self.sigma[opposite(idx)]
    }

    /// All darts in label order `+1, -1, +2, -2, …`.
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.sigma.len()).map(dart_of)
    }

    /// Counterclockwise successor of `d` around its source vertex.
    pub fn sigma(&self, d: Dart) -> Dart {
        dart_of(self.sigma[index_of(d)])
    }

    /// Successor of `d` along the face to its left.
    pub fn phi(&self, d: Dart) -> Dart {
        dart_of(self.phi_index(index_of(d)))
    }

    fn orbits(&self, next: impl Fn(usize) -> usize) -> Vec<Vec<Dart>> {
        let n = self.sigma.len();
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cycle.push(dart_of(d));
                d = next(d);
            }
            out.push(cycle);
        }
        out
    }

    /// Vertex rotations. The vertex map has a single empty rotation.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        self.orbits(|i| self.sigma[i])
    }

    /// Face boundaries as dart cycles. The vertex map has a single empty
    /// face.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        self.orbits(|i| self.phi_index(i))
    }

    /// Boundary of the face left of the root, starting at the root.
    pub fn outer_face(&self) -> Vec<Dart> {
        let Some(root) = self.root else {
            return Vec::new();
        };
        let start = index_of(root);
        let mut cycle = vec![root];
        let mut d = self.phi_index(start);
        while d != start {
            cycle.push(dart_of(d));
            d = self.phi_index(d);
        }
        cycle
    }

    pub fn outer_face_degree(&self) -> usize {
        self.outer_face().len()
    }

    /// True iff both darts of `edge` (1-based) border the same face.
    pub fn is_isthmus(&self, edge: usize) -> bool {
        assert!(edge >= 1 && edge <= self.edge_count(), "edge {edge} out of range");
        let plus = 2 * (edge - 1);
        let minus = plus + 1;
        let mut d = self.phi_index(plus);
        while d != plus {
            if d == minus {
                return true;
            }
            d = self.phi_index(d);
        }
        false
    }

    pub fn classify(&self) -> MapClass {
        match self.root {
            None => MapClass::VertexMap,
            Some(r) if self.is_isthmus(r.unsigned_abs() as usize) => MapClass::IsthmicRoot,
            Some(_) => MapClass::NonIsthmicRoot,
        }
    }

    /// Checks the rotation is a permutation, the root is consistent, the
    /// underlying graph is connected, and the Euler characteristic is 2.
    pub fn validate(&self) -> Result<MapReport, MapError> {
        let n = self.sigma.len();
        if !n.is_multiple_of(2) {
            return Err(MapError::MalformedPermutation("odd number of darts".into()));
        }
        let mut hit = vec![false; n];
        for &s in &self.sigma {
            if s >= n || std::mem::replace(&mut hit[s], true) {
                return Err(MapError::MalformedPermutation(
                    "rotation is not a permutation".into(),
                ));
            }
        }
        match self.root {
            None if n == 0 => {
                return Ok(MapReport {
                    vertices: 1,
                    edges: 0,
                    faces: 1,
                })
            }
            None => return Err(MapError::BadRoot("a map with edges needs a root dart".into())),
            Some(r) if r == 0 || r.unsigned_abs() as usize > n / 2 => {
                return Err(MapError::BadRoot(format!("root {r} is not a dart")))
            }
            Some(_) => {}
        }
        // connectivity under sigma and alpha
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(d) = queue.pop_front() {
            for nb in [self.sigma[d], opposite(d)] {
                if !seen[nb] {
                    seen[nb] = true;
                    reached += 1;
                    queue.push_back(nb);
                }
            }
        }
        if reached != n {
            return Err(MapError::Disconnected);
        }
        let vertices = self.vertices().len();
        let faces = self.faces().len();
        let edges = n / 2;
        let chi = vertices as i64 - edges as i64 + faces as i64;
        if chi != 2 {
            return Err(MapError::NonPlanar {
                genus: ((2 - chi) / 2) as usize,
            });
        }
        Ok(MapReport {
            vertices,
            edges,
            faces,
        })
    }
}
