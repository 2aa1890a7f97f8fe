//! Degrees of new generators: the part of each graded piece not reached by
//! products of lower-degree invariants.

use serde::{Deserialize, Serialize};

use super::{span_rank, GradedInvariantSpace};
use crate::exact::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub degree: u32,
    pub dimension: usize,
    /// Dimension of the degree-`d` part of the subalgebra generated below `d`.
    pub decomposable: usize,
    pub new_generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub rows: Vec<GeneratorRow>,
}

impl GeneratorReport {
    /// Degrees carrying at least one new generator.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.rows.iter().filter(|r| r.new_generators > 0).map(|r| r.degree).collect()
    }
}

/// `family` holds the pieces of degrees `1..=D` (in any order, one per degree).
/// The degree-`d` part of the subalgebra generated in degrees `< d` is the span of
/// products `I_i·I_{d−i}`.
pub fn generator_report(family: &[GradedInvariantSpace]) -> GeneratorReport {
    let mut pieces: Vec<&GradedInvariantSpace> = family.iter().filter(|s| s.degree > 0).collect();
    pieces.sort_by_key(|s| s.degree);
    let by_degree = |d: u32| pieces.iter().find(|s| s.degree == d);
    let mut rows = Vec::new();
    for s in &pieces {
        let d = s.degree;
        let mut products: Vec<MultiPoly> = Vec::new();
        for i in 1..=d / 2 {
            if let (Some(a), Some(b)) = (by_degree(i), by_degree(d - i)) {
                for f in &a.basis {
                    for g in &b.basis {
                        products.push(f.mul(g));
                    }
                }
            }
        }
        let decomposable = span_rank(&products, s.num_vars, d);
        rows.push(GeneratorRow {
            degree: d,
            dimension: s.dim(),
            decomposable,
            new_generators: s.dim() - decomposable,
        });
    }
    GeneratorReport { rows }
}
