//! Unstable stratification of a torus action, indexed by closest points of
//! support hulls.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::check_len;
use crate::action::{ProjectivePoint, TorusWeights};
use crate::error::Error;
use crate::exact::rational::{self, Rational};
use crate::exact::{closest_point_to_origin, PolytopeQuery};

pub const DEFAULT_SUBSET_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StratumIndex {
    #[serde(with = "rational::serde_text")]
    pub norm_sq: Rational,
    #[serde(with = "rational::serde_text_vec")]
    pub beta: Vec<Rational>,
}

impl StratumIndex {
    pub fn new(beta: Vec<Rational>) -> Self {
        Self {
            norm_sq: rational::norm_sq(&beta),
            beta,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.beta.iter().all(Zero::is_zero)
    }
}

/// All indices `β` with, for each, the coordinate supports whose hull has closest point `β`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratification {
    pub indices: Vec<StratumIndex>,
    pub supports: Vec<Vec<Vec<usize>>>,
}

impl Stratification {
    pub fn position(&self, beta: &[Rational]) -> Option<usize> {
        self.indices.iter().position(|b| b.beta == beta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumQuotientData {
    pub index: StratumIndex,
    /// Coordinates with `⟨β, α_i − twist⟩ = |β|²`.
    pub z_beta_weights: Vec<usize>,
    /// Coordinates with pairing below `|β|²`; these vanish on `Y_β`.
    pub y_beta_vanishing: Vec<usize>,
    pub y_beta_supports: Vec<Vec<usize>>,
    #[serde(with = "rational::serde_text")]
    pub delta: Rational,
    #[serde(with = "rational::serde_text_vec")]
    pub adapted_twist: Vec<Rational>,
}

fn mask_indices(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|&i| mask >> i & 1 == 1).collect()
}

fn closest_of(points: &[Vec<Rational>], idx: &[usize]) -> Vec<Rational> {
    let q = PolytopeQuery::new(idx.iter().map(|&i| points[i].clone()).collect()).expect("nonempty support");
    closest_point_to_origin(&q)
}

fn check_cap(len: usize, cap: usize) -> Result<(), Error> {
    if len > cap || len > 63 {
        return Err(Error::EnumerationBoundExceeded { count: len, cap });
    }
    Ok(())
}

/// Enumerates every nonempty coordinate support, grouping supports by the
/// closest point of their twisted weight hull.
pub fn kirwan_indices(a: &TorusWeights, twist: &[Rational], cap: usize) -> Result<Stratification, Error> {
    let len = a.len();
    check_cap(len, cap)?;
    let twisted = a.twisted(twist)?;

    // Supports with the same set of distinct weights share a closest point.
    let mut distinct: Vec<Vec<Rational>> = twisted.clone();
    distinct.sort();
    distinct.dedup();
    let class: Vec<usize> = twisted
        .iter()
        .map(|w| distinct.binary_search(w).expect("weight is present"))
        .collect();

    let mut memo: BTreeMap<u64, Vec<Rational>> = BTreeMap::new();
    let mut groups: BTreeMap<StratumIndex, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 1..(1u64 << len) {
        let support = mask_indices(mask, len);
        let key = support.iter().fold(0u64, |k, &i| k | 1 << class[i]);
        let beta = memo
            .entry(key)
            .or_insert_with(|| closest_of(&distinct, &mask_indices(key, distinct.len())))
            .clone();
        groups.entry(StratumIndex::new(beta)).or_default().push(support);
    }
    let (indices, mut supports): (Vec<_>, Vec<_>) = groups.into_iter().unzip();
    for s in &mut supports {
        s.sort();
    }
    Ok(Stratification { indices, supports })
}

/// Index of the stratum containing `x`: the closest point of its support hull.
pub fn stratum_of(a: &TorusWeights, twist: &[Rational], x: &ProjectivePoint) -> Result<StratumIndex, Error> {
    check_len("point coordinates", a.len(), x.len())?;
    let twisted = a.twisted(twist)?;
    Ok(StratumIndex::new(closest_of(&twisted, &x.support())))
}

/// `Z_β`, the `Y_β` membership rule and a twist `(1+δ)β` that is adapted for the
/// `β`-grading rather than borderline.
pub fn stratum_quotient_data(
    a: &TorusWeights,
    twist: &[Rational],
    beta: &[Rational],
    cap: usize,
) -> Result<StratumQuotientData, Error> {
    let strat = kirwan_indices(a, twist, cap)?;
    let pos = strat
        .position(beta)
        .ok_or_else(|| Error::UnknownIndex(format!("({})", beta.iter().map(rational::to_text).collect::<Vec<_>>().join(", "))))?;
    let index = strat.indices[pos].clone();
    if index.is_zero() {
        return Err(Error::UnknownIndex("β = 0 indexes the semistable stratum".into()));
    }
    let twisted = a.twisted(twist)?;
    let pairings: Vec<Rational> = twisted.iter().map(|w| rational::dot(&index.beta, w)).collect();
    let nsq = &index.norm_sq;

    let z_beta_weights: Vec<usize> = (0..a.len()).filter(|&i| &pairings[i] == nsq).collect();
    let y_beta_vanishing: Vec<usize> = (0..a.len()).filter(|&i| &pairings[i] < nsq).collect();
    let y_beta_supports = (1..(1u64 << a.len()))
        .map(|m| mask_indices(m, a.len()))
        .filter(|s| s.iter().map(|&i| &pairings[i]).min() == Some(nsq))
        .collect();

    let gap = pairings.iter().filter(|p| *p > nsq).map(|p| p - nsq).min();
    let delta = match gap {
        Some(g) => g / (rational::int(2) * nsq),
        None => rational::frac(1, 2),
    };
    debug_assert!(delta.is_positive());
    let factor = rational::one() + &delta;
    let adapted_twist = index.beta.iter().map(|b| b * &factor).collect();
    Ok(StratumQuotientData {
        index,
        z_beta_weights,
        y_beta_vanishing,
        y_beta_supports,
        delta,
        adapted_twist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};
    use crate::torus::{torus_verdict, Status};

    fn w(ws: &[i64]) -> TorusWeights {
        TorusWeights::rank_one(ws)
    }

    fn betas(s: &Stratification) -> Vec<Vec<Rational>> {
        s.indices.iter().map(|i| i.beta.clone()).collect()
    }

    #[test]
    fn index_sets() {
        let z = [int(0)];
        let s = kirwan_indices(&w(&[-1, 0, 1]), &z, 16).unwrap();
        assert_eq!(betas(&s), vec![vec![int(0)], vec![int(-1)], vec![int(1)]]);
        let s = kirwan_indices(&w(&[1, 2]), &z, 16).unwrap();
        assert_eq!(betas(&s), vec![vec![int(1)], vec![int(2)]]);
        assert_eq!(s.supports[0], vec![vec![0], vec![0, 1]]);
        let s = kirwan_indices(&w(&[0]), &z, 16).unwrap();
        assert_eq!(betas(&s), vec![vec![int(0)]]);
        assert!(matches!(
            kirwan_indices(&w(&[0; 5]), &z, 4),
            Err(Error::EnumerationBoundExceeded { count: 5, cap: 4 })
        ));
    }

    #[test]
    fn stratum_of_examples() {
        let a = w(&[-1, 0, 1]);
        let z = [int(0)];
        let at = |c: &[i64]| stratum_of(&a, &z, &ProjectivePoint::from_ints(c)).unwrap().beta;
        assert_eq!(at(&[1, 0, 0]), vec![int(-1)]);
        assert_eq!(at(&[1, 0, 1]), vec![int(0)]);
        assert_eq!(
            stratum_of(&w(&[1, 2]), &z, &ProjectivePoint::from_ints(&[1, 1])).unwrap().beta,
            vec![int(1)]
        );
        let x = ProjectivePoint::from_ints(&[0, 1, 1]);
        assert!(stratum_of(&a, &z, &x).unwrap().is_zero());
        assert_ne!(torus_verdict(&a, &z, &x).unwrap().status, Status::Unstable);
    }

    #[test]
    fn quotient_data() {
        let z = [int(0)];
        let d = stratum_quotient_data(&w(&[-1, 0, 1]), &z, &[int(1)], 16).unwrap();
        assert_eq!(d.z_beta_weights, vec![2]);
        assert_eq!(d.y_beta_vanishing, vec![0, 1]);
        assert_eq!(d.y_beta_supports, vec![vec![2]]);
        assert_eq!(d.adapted_twist, vec![frac(3, 2)]);

        let d = stratum_quotient_data(&w(&[1, 2]), &z, &[int(1)], 16).unwrap();
        assert_eq!(d.z_beta_weights, vec![0]);
        assert_eq!(d.y_beta_supports, vec![vec![0], vec![0, 1]]);
        assert_eq!(d.delta, frac(1, 2));
        assert_eq!(d.adapted_twist, vec![frac(3, 2)]);

        assert!(matches!(
            stratum_quotient_data(&w(&[1, 2]), &z, &[int(3)], 16),
            Err(Error::UnknownIndex(_))
        ));
        assert!(matches!(
            stratum_quotient_data(&w(&[-1, 1]), &z, &[int(0)], 16),
            Err(Error::UnknownIndex(_))
        ));
    }

    #[test]
    fn rank_two_indices() {
        let a = TorusWeights::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        let s = kirwan_indices(&a, &[int(0), int(0)], 16).unwrap();
        let b = betas(&s);
        assert_eq!(b[0], vec![int(0), int(0)]);
        assert!(b.contains(&vec![frac(1, 2), frac(1, 2)]));
        assert_eq!(s.supports[0], vec![vec![0, 1, 2]]);
    }
}
