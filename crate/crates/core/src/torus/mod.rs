//! Hilbert–Mumford convex-hull stability for torus actions, chambers of the
//! grading and one-parameter limits.

mod strata;

pub use strata::{
    kirwan_indices, stratum_of, stratum_quotient_data, Stratification, StratumIndex, StratumQuotientData,
    DEFAULT_SUBSET_CAP,
};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::action::{GradingData, ProjectivePoint, TorusWeights};
use crate::error::Error;
use crate::exact::rational::{self, Rational};
use crate::exact::{hull_origin_position, HullPosition, PolytopeQuery};
use crate::graded::GradedWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Status {
    pub fn from_position(p: HullPosition) -> Self {
        match p {
            HullPosition::Interior => Status::Stable,
            HullPosition::Boundary => Status::StrictlySemistable,
            HullPosition::Outside => Status::Unstable,
        }
    }
}

/// The weights actually tested and where the origin sits relative to their hull.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullWitness {
    pub support: Vec<usize>,
    #[serde(with = "rational::serde_text_vecs")]
    pub weights: Vec<Vec<Rational>>,
    pub position: HullPosition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Hull(HullWitness),
    Graded(GradedWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: Status,
    pub witness: Witness,
}

impl StabilityVerdict {
    pub(crate) fn from_hull(support: Vec<usize>, weights: Vec<Vec<Rational>>) -> Self {
        let q = PolytopeQuery::new(weights.clone()).expect("support of a projective point is nonempty");
        let position = hull_origin_position(&q);
        Self {
            status: Status::from_position(position),
            witness: Witness::Hull(HullWitness {
                support,
                weights,
                position,
            }),
        }
    }

    pub fn is_stable(&self) -> bool {
        self.status == Status::Stable
    }
}

pub(crate) fn check_len(what: &str, expected: usize, found: usize) -> Result<(), Error> {
    if expected != found {
        return Err(Error::DimensionMismatch {
            what: what.into(),
            expected,
            found,
        });
    }
    Ok(())
}

/// Classifies `x` from the position of 0 in `conv{α_i − twist : x_i ≠ 0}`.
pub fn torus_verdict(a: &TorusWeights, twist: &[Rational], x: &ProjectivePoint) -> Result<StabilityVerdict, Error> {
    check_len("point coordinates", a.len(), x.len())?;
    let twisted = a.twisted(twist)?;
    let support = x.support();
    let weights = support.iter().map(|&i| twisted[i].clone()).collect();
    Ok(StabilityVerdict::from_hull(support, weights))
}

/// Closed interval of rationals; `lo == hi` is the degenerate chamber of a trivial action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    #[serde(with = "rational::serde_text")]
    pub lo: Rational,
    #[serde(with = "rational::serde_text")]
    pub hi: Rational,
}

impl Chamber {
    pub fn shifted(&self, by: &Rational) -> Self {
        Self {
            lo: &self.lo - by,
            hi: &self.hi - by,
        }
    }
}

/// `[r_0, r_j]` where `r_j` is the first weight above `r_0`.
pub fn lowest_bounded_chamber(g: &GradingData) -> Chamber {
    let w = g.sorted_weights();
    let lo = w[0];
    let hi = w.iter().copied().find(|&r| r > lo).unwrap_or(lo);
    Chamber {
        lo: rational::int(lo),
        hi: rational::int(hi),
    }
}

/// The lowest bounded chamber after twisting by the grading character.
pub fn twisted_chamber(g: &GradingData) -> Chamber {
    lowest_bounded_chamber(g).shifted(g.chi())
}

/// A degenerate chamber counts as its own interior.
pub fn chamber_contains_zero_interior(c: &Chamber) -> bool {
    if c.lo == c.hi {
        return c.lo.is_zero();
    }
    c.lo.is_negative() && c.hi.is_positive()
}

/// Limit of `λ(t)·x` as `t → 0`: keeps the support coordinates of minimal pairing `⟨λ, α_i⟩`.
pub fn limit_point(a: &TorusWeights, lambda: &[i64], x: &ProjectivePoint) -> Result<ProjectivePoint, Error> {
    check_len("point coordinates", a.len(), x.len())?;
    check_len("one-parameter subgroup", a.rank(), lambda.len())?;
    let pairing = |i: usize| -> i64 { a.weights()[i].iter().zip(lambda).map(|(w, l)| w * l).sum() };
    let support = x.support();
    let min = support.iter().map(|&i| pairing(i)).min().expect("nonempty support");
    let coords = x
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if !c.is_zero() && pairing(i) == min {
                c.clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    Ok(ProjectivePoint::new(coords).expect("minimal coordinates are nonzero"))
}
