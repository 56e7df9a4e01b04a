use std::collections::HashMap;
use std::rc::Rc;

use crate::lambda::{color, decorate_planar, Coloring, Kind, LinearTerm, Skeleton};

/// Skeletons admitting a coloring with the given parameters, built
/// directly from the coloring rules.
#[derive(Default)]
pub struct ColoredSkeletons {
    memo: HashMap<(Kind, usize, usize), Rc<Vec<Skeleton>>>,
}

impl ColoredSkeletons {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, kind: Kind, n: usize, i: usize) -> Rc<Vec<Skeleton>> {
        if let Some(hit) = self.memo.get(&(kind, n, i)) {
            return Rc::clone(hit);
        }
        let built = match kind {
            Kind::Neutral => self.neutral(n, i),
            Kind::Normal => self.normal(n, i),
        };
        let built = Rc::new(built);
        self.memo.insert((kind, n, i), Rc::clone(&built));
        built
    }

    fn neutral(&mut self, n: usize, i: usize) -> Vec<Skeleton> {
        if i == 0 || i > n + 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        if n == 0 && i == 1 {
            out.push(Skeleton::Leaf);
        }
        for j in 1..=i {
            let k = i - j;
            for a in 0..n {
                let b = n - a;
                let funs = self.get(Kind::Neutral, a, j);
                if funs.is_empty() {
                    continue;
                }
                let args = self.get(Kind::Normal, b, k);
                for f in funs.iter() {
                    for x in args.iter() {
                        out.push(Skeleton::app(f.clone(), x.clone()));
                    }
                }
            }
        }
        out
    }

    fn normal(&mut self, n: usize, i: usize) -> Vec<Skeleton> {
        if n == 0 || i > n {
            return Vec::new();
        }
        let mut out: Vec<Skeleton> = self.get(Kind::Neutral, n - 1, i).as_ref().clone();
        out.extend(self.get(Kind::Normal, n, i + 1).iter().cloned().map(Skeleton::lam));
        out
    }
}

/// Every planar term of the given kind with size `n` and `i` free
/// variables, with its coloring, in canonical term order.
pub fn enumerate_colored(kind: Kind, n: usize, i: usize) -> Vec<(LinearTerm, Coloring)> {
    let skeletons = ColoredSkeletons::new().get(kind, n, i);
    let mut out: Vec<(LinearTerm, Coloring)> = skeletons
        .iter()
        .map(|s| {
            let t = decorate_planar(s).expect("colored skeletons are well formed");
            let c = color(&t, kind).expect("decoration keeps the coloring");
            (t, c)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Every normal planar term of size `n` with `i` free variables.
pub fn enumerate_npt(n: usize, i: usize) -> Vec<(LinearTerm, Coloring)> {
    enumerate_colored(Kind::Normal, n, i)
}
