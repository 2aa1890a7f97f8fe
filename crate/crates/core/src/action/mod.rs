//! Linear actions on projective space: diagonal torus weights, a diagonal
//! grading `G_m`, and nilpotent generators of a graded unipotent group.

mod builtin;
mod document;

pub use builtin::{aut_p112_example, jet_group_example, jordan_embed_ga, sym_power_e, sym_power_f, sym_weights};
pub use document::{parse_action, parse_document, serialize_action, serialize_document, ActionDocument, Bounds, NamedPoint};

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::exact::rational::{self, Rational};
use crate::exact::RatMatrix;

/// Weights of a rank-`r` torus acting diagonally on `k^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusWeights {
    rank: usize,
    weights: Vec<Vec<i64>>,
}

impl TorusWeights {
    pub fn new(rank: usize, weights: Vec<Vec<i64>>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::Precondition("torus needs at least one weight (n >= 0)".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.len() != rank) {
            return Err(Error::DimensionMismatch {
                what: "torus weight vector".into(),
                expected: rank,
                found: w.len(),
            });
        }
        Ok(Self { rank, weights })
    }

    /// Rank-1 torus with the given integer weights.
    pub fn rank_one(weights: &[i64]) -> Self {
        Self::new(1, weights.iter().map(|&w| vec![w]).collect()).expect("nonempty rank-one weights")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Number of homogeneous coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn rational_weight(&self, i: usize) -> Vec<Rational> {
        rational::ints(&self.weights[i])
    }

    /// `α_i − twist` for every coordinate.
    pub fn twisted(&self, twist: &[Rational]) -> Result<Vec<Vec<Rational>>, Error> {
        if twist.len() != self.rank {
            return Err(Error::DimensionMismatch {
                what: "torus twist".into(),
                expected: self.rank,
                found: twist.len(),
            });
        }
        Ok((0..self.len())
            .map(|i| rational::sub_vec(&self.rational_weight(i), twist))
            .collect())
    }
}

/// Weights of the grading `G_m` on the coordinates, plus the rational character twist.
///
/// The weights are kept in coordinate order; `sorted` and `permutation` give the
/// ascending normal form `r_0 <= ... <= r_n` with `sorted[k] = weights[permutation[k]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingData {
    weights: Vec<i64>,
    sorted: Vec<i64>,
    permutation: Vec<usize>,
    chi: Rational,
}

impl GradingData {
    pub fn new(weights: Vec<i64>, chi: Rational) -> Self {
        let mut permutation: Vec<usize> = (0..weights.len()).collect();
        permutation.sort_by_key(|&i| (weights[i], i));
        let sorted = permutation.iter().map(|&i| weights[i]).collect();
        Self {
            weights,
            sorted,
            permutation,
            chi,
        }
    }

    /// Weights in coordinate order.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn sorted_weights(&self) -> &[i64] {
        &self.sorted
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn chi(&self) -> &Rational {
        &self.chi
    }

    pub fn with_chi(&self, chi: Rational) -> Self {
        Self {
            chi,
            ..self.clone()
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Twisted weight `r_i − χ` of coordinate `i`.
    pub fn twisted_weight(&self, i: usize) -> Rational {
        rational::int(self.weights[i]) - &self.chi
    }

    pub fn is_trivial(&self) -> bool {
        self.sorted.first() == self.sorted.last()
    }
}

/// Nilpotent generators of `Lie(U)` with their adjoint `G_m`-weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentData {
    generators: Vec<RatMatrix>,
    adjoint_weights: Vec<i64>,
}

impl UnipotentData {
    /// Checks squareness, nilpotency and positivity of the adjoint weights.
    pub fn new(generators: Vec<RatMatrix>, adjoint_weights: Vec<i64>) -> Result<Self, Error> {
        if generators.len() != adjoint_weights.len() {
            return Err(Error::DimensionMismatch {
                what: "unipotent adjoint_weights".into(),
                expected: generators.len(),
                found: adjoint_weights.len(),
            });
        }
        for (j, g) in generators.iter().enumerate() {
            if !g.is_square() {
                return Err(Error::DimensionMismatch {
                    what: format!("unipotent generator {j} columns"),
                    expected: g.rows(),
                    found: g.cols(),
                });
            }
            if !g.is_nilpotent() {
                return Err(Error::NotNilpotent { generator: j });
            }
        }
        if let Some((j, &w)) = adjoint_weights.iter().enumerate().find(|(_, &w)| w <= 0) {
            return Err(Error::NonPositiveGradingWeight { generator: j, weight: w });
        }
        Ok(Self {
            generators,
            adjoint_weights,
        })
    }

    pub fn generators(&self) -> &[RatMatrix] {
        &self.generators
    }

    pub fn adjoint_weights(&self) -> &[i64] {
        &self.adjoint_weights
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// True when every generator is the zero matrix (trivial group action).
    pub fn acts_trivially(&self) -> bool {
        self.generators.iter().all(RatMatrix::is_zero)
    }

    /// The sub-datum consisting of generator `j` only.
    pub fn single(&self, j: usize) -> Self {
        Self {
            generators: vec![self.generators[j].clone()],
            adjoint_weights: vec![self.adjoint_weights[j]],
        }
    }
}

/// A (graded) linearisation of a linear action on `P^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedAction {
    label: String,
    torus: TorusWeights,
    torus_twist: Vec<Rational>,
    grading: Option<GradingData>,
    unipotent: Option<UnipotentData>,
}

impl WeightedAction {
    /// Validates that all dimensions agree and that, when both a grading and
    /// unipotent generators are present, `[D, N_j] = w_j N_j` holds exactly.
    pub fn new(
        label: impl Into<String>,
        torus: TorusWeights,
        torus_twist: Vec<Rational>,
        grading: Option<GradingData>,
        unipotent: Option<UnipotentData>,
    ) -> Result<Self, Error> {
        let dim = torus.len();
        if torus_twist.len() != torus.rank() {
            return Err(Error::DimensionMismatch {
                what: "torus twist".into(),
                expected: torus.rank(),
                found: torus_twist.len(),
            });
        }
        if let Some(g) = &grading {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    what: "grading gm_weights".into(),
                    expected: dim,
                    found: g.len(),
                });
            }
        }
        if let Some(u) = &unipotent {
            for (j, n) in u.generators().iter().enumerate() {
                if n.rows() != dim {
                    return Err(Error::DimensionMismatch {
                        what: format!("unipotent generator {j}"),
                        expected: dim,
                        found: n.rows(),
                    });
                }
            }
            if let Some(g) = &grading {
                let d = RatMatrix::diagonal(&rational::ints(g.weights()));
                for (j, (n, &w)) in u.generators().iter().zip(u.adjoint_weights()).enumerate() {
                    if d.commutator(n) != n.scale(&rational::int(w)) {
                        return Err(Error::GradingCommutationFailure { generator: j });
                    }
                }
            }
        }
        Ok(Self {
            label: label.into(),
            torus,
            torus_twist,
            grading,
            unipotent,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Projective dimension `n`.
    pub fn n(&self) -> usize {
        self.torus.len() - 1
    }

    pub fn torus(&self) -> &TorusWeights {
        &self.torus
    }

    pub fn torus_twist(&self) -> &[Rational] {
        &self.torus_twist
    }

    pub fn grading(&self) -> Option<&GradingData> {
        self.grading.as_ref()
    }

    pub fn unipotent(&self) -> Option<&UnipotentData> {
        self.unipotent.as_ref()
    }

    pub fn unipotent_dim(&self) -> usize {
        self.unipotent.as_ref().map_or(0, UnipotentData::dim)
    }

    pub fn require_grading(&self) -> Result<&GradingData, Error> {
        self.grading.as_ref().ok_or(Error::MissingGrading)
    }

    pub fn relabel(&self, label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            ..self.clone()
        }
    }

    /// Same action with the grading character replaced by `chi`.
    pub fn with_chi(&self, chi: Rational) -> Result<Self, Error> {
        let g = self.require_grading()?.with_chi(chi);
        Ok(Self {
            grading: Some(g),
            ..self.clone()
        })
    }

    pub fn with_torus_twist(&self, twist: Vec<Rational>) -> Result<Self, Error> {
        Self::new(
            self.label.clone(),
            self.torus.clone(),
            twist,
            self.grading.clone(),
            self.unipotent.clone(),
        )
    }

    /// Checks that a point lives in this action's `P^n`.
    pub fn check_point(&self, x: &ProjectivePoint) -> Result<(), Error> {
        if x.len() != self.torus.len() {
            return Err(Error::DimensionMismatch {
                what: "point coordinates".into(),
                expected: self.torus.len(),
                found: x.len(),
            });
        }
        Ok(())
    }
}

/// A point of `P^n` in homogeneous coordinates; equality is up to a nonzero scalar.
#[derive(Clone)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::Precondition("projective point has all coordinates zero".into()));
        }
        Ok(Self { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(rational::ints(coords)).expect("nonzero integer point")
    }

    /// Basis point `e_i` of `P^n`.
    pub fn coordinate(n_plus_1: usize, i: usize) -> Self {
        let mut c = vec![Rational::zero(); n_plus_1];
        c[i] = rational::one();
        Self { coords: c }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    /// Representative whose first nonzero coordinate is 1.
    pub fn normalized(&self) -> Vec<Rational> {
        let lead = self.coords.iter().find(|c| !c.is_zero()).expect("nonzero point");
        let inv = lead.recip();
        self.coords.iter().map(|c| c * &inv).collect()
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords.len() == other.coords.len() && self.normalized() == other.normalized()
    }
}

impl Eq for ProjectivePoint {}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::to_text).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl serde::Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serde_text_vec::serialize(&self.coords, s)
    }
}

impl<'de> serde::Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coords = rational::serde_text_vec::deserialize(d)?;
        Self::new(coords).map_err(serde::de::Error::custom)
    }
}
