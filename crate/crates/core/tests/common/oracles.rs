//! Brute-force oracles, written independently of the library algorithms.
#![allow(dead_code)]

use nrgit_core::exact::matrix::span_basis;
use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::{HullPosition, RatMatrix};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Outside,
    Boundary,
    Interior,
}

fn solve_in_basis(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    RatMatrix::from_columns(basis, v.len()).solve(v)
}

/// Position of `q` relative to `conv(points)` inside the affine hull of the points.
fn relative_position(points: &[Vec<Rational>], q: &[Rational]) -> Rel {
    let p0 = &points[0];
    let diffs: Vec<Vec<Rational>> = points.iter().map(|p| rational::sub_vec(p, p0)).collect();
    let basis = span_basis(&diffs, q.len());
    let k = basis.len();
    let Some(qc) = (if k == 0 {
        if q == p0.as_slice() { Some(Vec::new()) } else { None }
    } else {
        solve_in_basis(&basis, &rational::sub_vec(q, p0))
    }) else {
        return Rel::Outside;
    };
    if k == 0 {
        return Rel::Interior;
    }
    let pts: Vec<Vec<Rational>> = diffs
        .iter()
        .map(|d| solve_in_basis(&basis, d).expect("difference lies in its own span"))
        .collect();
    full_dimensional_position(&pts, &qc, k)
}

/// Facet enumeration: every hyperplane through `k` affinely independent points
/// with all points on one side supports a facet; `q` is classified against all.
fn full_dimensional_position(pts: &[Vec<Rational>], q: &[Rational], k: usize) -> Rel {
    let mut on_boundary = false;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let base = &pts[idx[0]];
        let rows: Vec<Vec<Rational>> = idx[1..].iter().map(|&i| rational::sub_vec(&pts[i], base)).collect();
        let normal = if rows.is_empty() {
            vec![rational::one()]
        } else {
            let ker = RatMatrix::from_rows(rows).kernel();
            if ker.len() == 1 { ker[0].clone() } else { Vec::new() }
        };
        if !normal.is_empty() {
            let b = rational::dot(&normal, base);
            let side: Vec<Rational> = pts.iter().map(|p| rational::dot(&normal, p) - &b).collect();
            let le = side.iter().all(|s| !s.is_positive());
            let ge = side.iter().all(|s| !s.is_negative());
            if le || ge {
                let mut v = rational::dot(&normal, q) - &b;
                if ge {
                    v = -v;
                }
                if v.is_positive() {
                    return Rel::Outside;
                }
                if v.is_zero() {
                    on_boundary = true;
                }
            }
        }
        // next k-combination of 0..pts.len()
        let n = pts.len();
        let mut i = k;
        loop {
            if i == 0 {
                return if on_boundary { Rel::Boundary } else { Rel::Interior };
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Position of the origin relative to `conv(points)` in `R^r`.
pub fn hull_position_oracle(points: &[Vec<Rational>]) -> HullPosition {
    let r = points[0].len();
    let origin = vec![Rational::zero(); r];
    let p0 = &points[0];
    let diffs: Vec<Vec<Rational>> = points.iter().map(|p| rational::sub_vec(p, p0)).collect();
    let full = span_basis(&diffs, r).len() == r;
    match relative_position(points, &origin) {
        Rel::Outside => HullPosition::Outside,
        Rel::Interior if full => HullPosition::Interior,
        _ => HullPosition::Boundary,
    }
}

fn closest_on_segment(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let d = rational::sub_vec(b, a);
    let dd = rational::norm_sq(&d);
    if dd.is_zero() {
        return a.to_vec();
    }
    let mut t = -rational::dot(a, &d) / dd;
    if t.is_negative() {
        t = Rational::zero();
    }
    if t > rational::one() {
        t = rational::one();
    }
    a.iter().zip(&d).map(|(x, y)| x + &t * y).collect()
}

/// Closest point of `conv(points)` to the origin for points in `R^1` or `R^2`:
/// zero when the hull contains the origin, otherwise the best point over all
/// segments between two points.
pub fn closest_point_oracle(points: &[Vec<Rational>]) -> Vec<Rational> {
    let r = points[0].len();
    assert!(r <= 2, "oracle handles rank at most 2");
    if hull_position_oracle(points) != HullPosition::Outside {
        return vec![Rational::zero(); r];
    }
    let mut best = points[0].clone();
    for a in points {
        for b in points {
            let c = closest_on_segment(a, b);
            if rational::norm_sq(&c) < rational::norm_sq(&best) {
                best = c;
            }
        }
    }
    best
}

/// `dim (Sym^d Sym^n)_0 − dim (Sym^d Sym^n)_2`, counted over exponent vectors.
pub fn sl2_weight_count(n: usize, d: u32) -> i64 {
    fn rec(i: usize, n: usize, left: u32, weight: i64, zero: &mut i64, two: &mut i64) {
        if i == n {
            let w = weight + i64::from(left) * -(n as i64);
            if w == 0 {
                *zero += 1;
            } else if w == 2 {
                *two += 1;
            }
            return;
        }
        for k in 0..=left {
            rec(i + 1, n, left - k, weight + i64::from(k) * (n as i64 - 2 * i as i64), zero, two);
        }
    }
    let (mut zero, mut two) = (0, 0);
    rec(0, n, d, 0, &mut zero, &mut two);
    zero - two
}

/// Coefficients `(a_0, …, a_n)` of `X^m · Π_r (X − rY)`, `m = at_infinity`,
/// where `a_i` multiplies `X^{n−i} Y^i`.
pub fn binary_form_from_roots(roots: &[i64], at_infinity: usize) -> Vec<Rational> {
    let mut c = vec![rational::one()];
    for &r in roots {
        let mut next = vec![Rational::zero(); c.len() + 1];
        for (i, v) in c.iter().enumerate() {
            next[i] += v;
            next[i + 1] -= v * rational::int(r);
        }
        c = next;
    }
    c.extend(std::iter::repeat_n(Rational::zero(), at_infinity));
    c
}
