//! Interchangeable sources for the sequence 1, 2, 9, 54, … counting closed
//! normal planar terms of size `n` (equivalently rooted planar maps with
//! `n - 1` edges), selected by name at runtime.

use num_bigint::BigUint;

use crate::counting::{closed_form_r0, count_tables, enumerate_npt, tutte_count, CountingError};
use crate::maps::maps_by_edges;

pub trait SequenceSource: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Coefficients for `n = 1..=max_n`.
    fn coefficients(&self, max_n: usize) -> Result<Vec<BigUint>, CountingError>;
}

struct Recurrence;
struct ClosedForm;
struct Tutte;
struct Enumeration;
struct MapClosure;

impl SequenceSource for Recurrence {
    fn name(&self) -> &'static str {
        "recurrence"
    }

    fn description(&self) -> &'static str {
        "closed normal counts from the neutral/normal recurrence"
    }

    fn coefficients(&self, max_n: usize) -> Result<Vec<BigUint>, CountingError> {
        let table = count_tables(max_n, 0);
        Ok((1..=max_n).map(|n| table.normal(n, 0)).collect())
    }
}

impl SequenceSource for ClosedForm {
    fn name(&self) -> &'static str {
        "closed-form"
    }

    fn description(&self) -> &'static str {
        "series expansion of the algebraic generating function"
    }

    fn coefficients(&self, max_n: usize) -> Result<Vec<BigUint>, CountingError> {
        closed_form_r0(max_n)
    }
}

impl SequenceSource for Tutte {
    fn name(&self) -> &'static str {
        "tutte"
    }

    fn description(&self) -> &'static str {
        "Tutte's formula for rooted planar maps with n - 1 edges"
    }

    fn coefficients(&self, max_n: usize) -> Result<Vec<BigUint>, CountingError> {
        Ok((1..=max_n).map(|n| tutte_count(n - 1)).collect())
    }
}

impl SequenceSource for Enumeration {
    fn name(&self) -> &'static str {
        "enumeration"
    }

    fn description(&self) -> &'static str {
        "explicit enumeration of one-variable normal planar terms"
    }

    fn coefficients(&self, max_n: usize) -> Result<Vec<BigUint>, CountingError> {
        Ok((1..=max_n)
            .map(|n| BigUint::from(enumerate_npt(n, 1).len()))
            .collect())
    }
}

impl SequenceSource for MapClosure {
    fn name(&self) -> &'static str {
        "map-closure"
    }

    fn description(&self) -> &'static str {
        "rooted planar maps generated by the two root-edge operators"
    }

    fn coefficients(&self, max_n: usize) -> Result<Vec<BigUint>, CountingError> {
        if max_n == 0 {
            return Ok(Vec::new());
        }
        Ok(maps_by_edges(max_n - 1)
            .iter()
            .map(|layer| BigUint::from(layer.len()))
            .collect())
    }
}

/// Named sequence sources. The last three grow exponentially in cost.
pub struct Registry {
    sources: Vec<Box<dyn SequenceSource>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry {
            sources: vec![
                Box::new(Recurrence),
                Box::new(ClosedForm),
                Box::new(Tutte),
                Box::new(Enumeration),
                Box::new(MapClosure),
            ],
        }
    }
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a source, replacing any existing one with the same name.
    pub fn register(&mut self, source: Box<dyn SequenceSource>) {
        self.sources.retain(|s| s.name() != source.name());
        self.sources.push(source);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SequenceSource> {
        self.sources.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.sources.iter().map(|s| s.name())
    }
}
