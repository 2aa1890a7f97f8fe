//! A basis of `Lie(U)` as a graded Lie algebra of matrices.

use crate::action::{UnipotentData, WeightedAction};
use crate::exact::matrix::span_rank;
use crate::exact::RatMatrix;

/// Linearly independent weight vectors spanning the Lie algebra generated by the
/// unipotent generators. The original generators (minus dependent ones) come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieBasis {
    pub elements: Vec<RatMatrix>,
    pub weights: Vec<i64>,
}

impl LieBasis {
    pub fn empty() -> Self {
        Self {
            elements: Vec::new(),
            weights: Vec::new(),
        }
    }

    pub fn new(u: &UnipotentData) -> Self {
        let mut basis = Self::empty();
        for (n, &w) in u.generators().iter().zip(u.adjoint_weights()) {
            basis.try_push(n.clone(), w);
        }
        let mut i = 0;
        while i < basis.elements.len() {
            for j in 0..i {
                let c = basis.elements[j].commutator(&basis.elements[i]);
                let w = basis.weights[j] + basis.weights[i];
                basis.try_push(c, w);
            }
            i += 1;
        }
        basis
    }

    pub fn of_action(action: &WeightedAction) -> Self {
        action.unipotent().map_or_else(Self::empty, Self::new)
    }

    fn try_push(&mut self, m: RatMatrix, w: i64) -> bool {
        if m.is_zero() {
            return false;
        }
        // distinct weights are independent, so only compare within one weight
        let mut same: Vec<Vec<_>> = self
            .elements
            .iter()
            .zip(&self.weights)
            .filter(|(_, &v)| v == w)
            .map(|(e, _)| e.entries().to_vec())
            .collect();
        let before = same.len();
        same.push(m.entries().to_vec());
        if span_rank(&same) == before {
            return false;
        }
        self.elements.push(m);
        self.weights.push(w);
        true
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `Σ c_j B_j`.
    pub fn combination(&self, coeffs: &[crate::exact::Rational]) -> RatMatrix {
        let n = self.elements.first().map_or(0, RatMatrix::rows);
        self.elements
            .iter()
            .zip(coeffs)
            .fold(RatMatrix::zeros(n, n), |acc, (b, c)| acc.add(&b.scale(c)))
    }
}
