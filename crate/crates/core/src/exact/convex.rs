//! Exact convex geometry of small rational point sets, by exhaustive
//! enumeration of Carathéodory subsets.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::RatMatrix;
use super::rational::{self, Rational};
use crate::error::Error;

/// Position of the origin relative to a convex hull in `R^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HullPosition {
    Outside,
    Boundary,
    Interior,
}

/// A nonempty list of points of common dimension `r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeQuery {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PolytopeQuery {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::Precondition("polytope query needs at least one point".into()))?;
        if dim == 0 {
            return Err(Error::Precondition("polytope query needs dimension >= 1".into()));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
                what: "polytope point".into(),
            });
        }
        Ok(Self { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    fn distinct_points(&self) -> Vec<Vec<Rational>> {
        let mut pts = self.points.clone();
        pts.sort();
        pts.dedup();
        pts
    }
}

/// Calls `f` on every `k`-subset of `0..n` (lexicographic order). Stops early if `f` returns true.
pub(crate) fn any_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let need = k - cur.len();
        for i in start..=(n - need) {
            cur.push(i);
            if rec(i + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if k > n {
        return false;
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

fn nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

/// True iff `target` is a nonnegative combination of the points (conic Carathéodory:
/// only linearly independent subsets of size `<= r` need checking).
fn in_cone(points: &[Vec<Rational>], dim: usize, target: &[Rational]) -> bool {
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    (1..=dim.min(points.len())).any(|k| {
        any_combination(points.len(), k, &mut |idx| {
            let cols: Vec<Vec<Rational>> = idx.iter().map(|&i| points[i].clone()).collect();
            let m = RatMatrix::from_columns(&cols, dim);
            m.solve(target).is_some_and(|mu| nonnegative(&mu))
        })
    })
}

/// True iff the origin is a convex combination of the points.
fn origin_in_hull(points: &[Vec<Rational>], dim: usize) -> bool {
    let mut rhs = vec![Rational::zero(); dim];
    rhs.push(rational::one());
    (1..=(dim + 1).min(points.len())).any(|k| {
        any_combination(points.len(), k, &mut |idx| {
            let cols: Vec<Vec<Rational>> = idx
                .iter()
                .map(|&i| {
                    let mut c = points[i].clone();
                    c.push(rational::one());
                    c
                })
                .collect();
            let m = RatMatrix::from_columns(&cols, dim + 1);
            m.solve(&rhs).is_some_and(|l| nonnegative(&l))
        })
    })
}

/// Exact classification of the origin relative to `conv(points)`; `Interior` is
/// interior in the ambient `R^r`.
pub fn hull_origin_position(q: &PolytopeQuery) -> HullPosition {
    let pts = q.distinct_points();
    let dim = q.dim;
    if !origin_in_hull(&pts, dim) {
        return HullPosition::Outside;
    }
    let spans = RatMatrix::from_rows(pts.clone()).rank() == dim;
    // 0 is interior iff the points positively span R^r, i.e. every -p lies in cone(P).
    let interior = spans
        && pts.iter().all(|p| {
            let neg: Vec<Rational> = p.iter().map(|x| -x.clone()).collect();
            in_cone(&pts, dim, &neg)
        });
    if interior {
        HullPosition::Interior
    } else {
        HullPosition::Boundary
    }
}

fn affinely_independent(points: &[&Vec<Rational>]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let base = points[0];
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| rational::sub_vec(p, base)).collect();
    RatMatrix::from_rows(diffs).rank() == points.len() - 1
}

/// Point of `conv(points)` of minimal Euclidean norm, computed exactly by
/// projecting the origin onto the affine span of every affinely independent
/// subset and keeping projections that land inside their simplex.
pub fn closest_point_to_origin(q: &PolytopeQuery) -> Vec<Rational> {
    let pts = q.distinct_points();
    let dim = q.dim;
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for k in 1..=(dim + 1).min(pts.len()) {
        any_combination(pts.len(), k, &mut |idx| {
            let sub: Vec<&Vec<Rational>> = idx.iter().map(|&i| &pts[i]).collect();
            if !affinely_independent(&sub) {
                return false;
            }
            // KKT system: [G 1; 1ᵀ 0] [λ; μ] = [0; 1]
            let mut kkt = RatMatrix::zeros(k + 1, k + 1);
            for a in 0..k {
                for b in 0..k {
                    kkt[(a, b)] = rational::dot(sub[a], sub[b]);
                }
                kkt[(a, k)] = rational::one();
                kkt[(k, a)] = rational::one();
            }
            let mut rhs = vec![Rational::zero(); k + 1];
            rhs[k] = rational::one();
            let Some(sol) = kkt.solve(&rhs) else {
                return false;
            };
            let lambda = &sol[..k];
            if !nonnegative(lambda) {
                return false;
            }
            let mut p = vec![Rational::zero(); dim];
            for (l, s) in lambda.iter().zip(&sub) {
                for (acc, x) in p.iter_mut().zip(s.iter()) {
                    *acc += l * x;
                }
            }
            let n = rational::norm_sq(&p);
            if best.as_ref().is_none_or(|(bn, _)| &n < bn) {
                best = Some((n, p));
            }
            false
        });
    }
    best.expect("a single vertex is always a candidate").1
}
