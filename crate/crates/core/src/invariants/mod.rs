//! Degreewise invariant rings: kernels of derivations on polynomial pieces,
//! `SL(2)`-invariants of binary forms and of `P² × Pⁿ`, restriction to the
//! slice `{[1:0:1]} × Pⁿ`, and evaluation verdicts.
//!
//! A matrix `N` acting on `k^{n+1}` acts on coordinate functions by the negative
//! transpose: `δ(x_j) = −Σ_i N_ji x_i`, extended by the Leibniz rule. Then
//! `f(exp(tN)·v) = f(v)` for all `t` exactly when `δf = 0`.

mod binary;
mod generators;

pub use binary::{
    invariant_nonvanishing_verdict, points_at_infinity_classifier, AtInfinity, NonvanishingVerdict,
};
pub use generators::{generator_report, GeneratorReport, GeneratorRow};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::action::{sym_power_e, sym_power_f, sym_weights};
use crate::action::UnipotentData;
use crate::error::Error;
use crate::exact::matrix::span_basis;
use crate::exact::poly::{monomials, Exponents};
use crate::exact::rational::{self, Rational};
use crate::exact::{rref_kernel, MultiPoly, RatMatrix};

pub const DEFAULT_MAX_DEGREE: u32 = 12;
pub const DEFAULT_MAX_BIDEGREE: u32 = 16;

/// A basis of one graded piece of an invariant ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedInvariantSpace {
    pub degree: u32,
    /// `(a, b)` for invariants on `P² × Pⁿ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bidegree: Option<(u32, u32)>,
    pub num_vars: usize,
    pub basis: Vec<MultiPoly>,
    pub constraints: Vec<String>,
}

impl GradedInvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// True when every basis element is killed by each derivation of `ops`.
    pub fn annihilated_by(&self, ops: &[RatMatrix]) -> bool {
        self.basis
            .iter()
            .all(|f| ops.iter().all(|n| apply_derivation(n, f).is_zero()))
    }
}

fn sparse_derivation(n: &RatMatrix, e: &[u32]) -> BTreeMap<Exponents, Rational> {
    let mut out: BTreeMap<Exponents, Rational> = BTreeMap::new();
    for j in (0..e.len()).filter(|&j| e[j] > 0) {
        for i in 0..e.len() {
            let nji = &n[(j, i)];
            if nji.is_zero() {
                continue;
            }
            let mut f = e.to_vec();
            f[j] -= 1;
            f[i] += 1;
            let c = -(nji * rational::int(i64::from(e[j])));
            let slot = out.entry(f).or_insert_with(Rational::zero);
            *slot += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The derivation induced by `n` applied to a polynomial.
pub fn apply_derivation(n: &RatMatrix, f: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(f.num_vars());
    for (e, c) in f.terms() {
        for (g, d) in sparse_derivation(n, e) {
            out.add_term(g, c * d);
        }
    }
    out
}

/// Matrix of the induced derivation on degree-`d` polynomials, in the basis
/// `monomials(n+1, d)` (`x0^d` first) for both rows and columns.
pub fn derivation_on_degree(n: &RatMatrix, d: u32) -> RatMatrix {
    let basis = monomials(n.rows(), d);
    let index: BTreeMap<&Exponents, usize> = basis.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let mut m = RatMatrix::zeros(basis.len(), basis.len());
    for (col, e) in basis.iter().enumerate() {
        for (f, c) in sparse_derivation(n, e) {
            m[(index[&f], col)] = c;
        }
    }
    m
}

/// Scales to coprime integer coefficients with a positive first coefficient.
pub fn primitive(p: &MultiPoly) -> MultiPoly {
    let Some((_, lead)) = p.terms().next() else {
        return p.clone();
    };
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    let mut k = Rational::new(den, num);
    if lead.is_negative() {
        k = -k;
    }
    p.scale(&k)
}

/// Joint kernel of the derivations on the span of `columns`.
///
/// Columns linked through a shared image monomial are solved together; the
/// blocks are usually far smaller than the whole piece.
fn joint_kernel(ops: &[&RatMatrix], columns: &[Exponents], num_vars: usize) -> Vec<MultiPoly> {
    let images: Vec<Vec<BTreeMap<Exponents, Rational>>> = columns
        .iter()
        .map(|e| ops.iter().map(|n| sparse_derivation(n, e)).collect())
        .collect();
    let mut parent: Vec<usize> = (0..columns.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut owner: BTreeMap<(usize, &Exponents), usize> = BTreeMap::new();
    for (col, per_op) in images.iter().enumerate() {
        for (k, image) in per_op.iter().enumerate() {
            for f in image.keys() {
                match owner.get(&(k, f)) {
                    Some(&other) => {
                        let (a, b) = (find(&mut parent, col), find(&mut parent, other));
                        parent[a.max(b)] = a.min(b);
                    }
                    None => {
                        owner.insert((k, f), col);
                    }
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for col in 0..columns.len() {
        let root = find(&mut parent, col);
        blocks.entry(root).or_default().push(col);
    }

    let mut basis = Vec::new();
    for cols in blocks.values() {
        let mut rows: BTreeMap<(usize, &Exponents), usize> = BTreeMap::new();
        for &c in cols {
            for (k, image) in images[c].iter().enumerate() {
                for f in image.keys() {
                    let next = rows.len();
                    rows.entry((k, f)).or_insert(next);
                }
            }
        }
        let mut m = RatMatrix::zeros(rows.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for (k, image) in images[c].iter().enumerate() {
                for (f, v) in image {
                    m[(rows[&(k, f)], j)] = v.clone();
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..cols.len())
                .map(|j| (0..cols.len()).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect())
                .collect()
        } else {
            rref_kernel(&m)
        };
        for v in kernel {
            let monos: Vec<Exponents> = cols.iter().map(|&c| columns[c].clone()).collect();
            basis.push(primitive(&MultiPoly::from_coefficients(num_vars, &monos, &v)));
        }
    }
    basis
}

fn check_bound(degree: u32, bound: u32) -> Result<(), Error> {
    if degree > bound {
        return Err(Error::DegreeBoundExceeded { degree, bound });
    }
    Ok(())
}

fn weight_of(e: &[u32], weights: &[i64]) -> i64 {
    e.iter().zip(weights).map(|(&k, &w)| i64::from(k) * w).sum()
}

/// Degree-`d` invariants of the unipotent group generated by `u`.
pub fn unipotent_invariants(u: &UnipotentData, d: u32, bound: u32) -> Result<GradedInvariantSpace, Error> {
    check_bound(d, bound)?;
    let num_vars = u.generators().first().map_or(0, RatMatrix::rows);
    let ops: Vec<&RatMatrix> = u.generators().iter().collect();
    let basis = joint_kernel(&ops, &monomials(num_vars, d), num_vars);
    Ok(GradedInvariantSpace {
        degree: d,
        bidegree: None,
        num_vars,
        basis,
        constraints: (0..ops.len()).map(|j| format!("killed by derivation of generator {j}")).collect(),
    })
}

/// Degree-`d` invariants of `u` that also have torus weight `target` for the
/// coordinate weights `weights` (weight of `x^e` is `Σ e_i·weights_i`).
pub fn weighted_unipotent_invariants(
    u: &UnipotentData,
    weights: &[Vec<i64>],
    target: &[i64],
    d: u32,
    bound: u32,
) -> Result<GradedInvariantSpace, Error> {
    check_bound(d, bound)?;
    let num_vars = u.generators().first().map_or(weights.len(), RatMatrix::rows);
    crate::torus::check_len("torus weights", num_vars, weights.len())?;
    let ops: Vec<&RatMatrix> = u.generators().iter().collect();
    let columns: Vec<Exponents> = monomials(num_vars, d)
        .into_iter()
        .filter(|e| {
            target.iter().enumerate().all(|(r, &t)| {
                let w: Vec<i64> = weights.iter().map(|w| w[r]).collect();
                weight_of(e, &w) == t
            })
        })
        .collect();
    let mut constraints: Vec<String> =
        (0..ops.len()).map(|j| format!("killed by derivation of generator {j}")).collect();
    constraints.push(format!("torus weight {target:?}"));
    Ok(GradedInvariantSpace {
        degree: d,
        bidegree: None,
        num_vars,
        basis: joint_kernel(&ops, &columns, num_vars),
        constraints,
    })
}

/// Degree-`d` `SL(2)`-invariants in the coefficients `a_0, …, a_n` of a binary
/// `n`-form `Σ a_i X^{n−i} Y^i`.
pub fn sl2_invariants_binary_form(n: usize, d: u32, bound: u32) -> Result<GradedInvariantSpace, Error> {
    if n == 0 {
        return Err(Error::Precondition("binary form degree n must be at least 1".into()));
    }
    check_bound(d, bound)?;
    let (e, f) = (sym_power_e(n), sym_power_f(n));
    let w = sym_weights(n);
    let columns: Vec<Exponents> = monomials(n + 1, d).into_iter().filter(|m| weight_of(m, &w) == 0).collect();
    Ok(GradedInvariantSpace {
        degree: d,
        bidegree: None,
        num_vars: n + 1,
        basis: joint_kernel(&[&e, &f], &columns, n + 1),
        constraints: vec!["killed by e".into(), "killed by f".into(), "torus weight 0".into()],
    })
}

/// The `SL(2)`-action on `k² ⊕ k ⊕ Sym^n(k²)` as `(e, f, weights)`.
fn product_operators(n: usize) -> (RatMatrix, RatMatrix, Vec<i64>) {
    let z = RatMatrix::zeros(1, 1);
    let e = RatMatrix::direct_sum(&[sym_power_e(1), z.clone(), sym_power_e(n)]);
    let f = RatMatrix::direct_sum(&[sym_power_f(1), z, sym_power_f(n)]);
    let mut w = vec![1, -1, 0];
    w.extend(sym_weights(n));
    (e, f, w)
}

/// Bidegree-`(a, b)` `SL(2)`-invariants on `P² × Pⁿ`, in the variables
/// `z0, z1, z2, a_0, …, a_n`.
pub fn product_sl2_invariants(n: usize, bidegree: (u32, u32), bound: u32) -> Result<GradedInvariantSpace, Error> {
    if n == 0 {
        return Err(Error::Precondition("binary form degree n must be at least 1".into()));
    }
    let (a, b) = bidegree;
    check_bound(a + b, bound)?;
    let (e, f, w) = product_operators(n);
    let num_vars = n + 4;
    let forms = monomials(n + 1, b);
    let mut columns = Vec::new();
    for zm in monomials(3, a) {
        for fm in &forms {
            let mut m = zm.clone();
            m.extend_from_slice(fm);
            if weight_of(&m, &w) == 0 {
                columns.push(m);
            }
        }
    }
    Ok(GradedInvariantSpace {
        degree: a + b,
        bidegree: Some(bidegree),
        num_vars,
        basis: joint_kernel(&[&e, &f], &columns, num_vars),
        constraints: vec!["killed by e".into(), "killed by f".into(), "torus weight 0".into()],
    })
}

/// Restricts product invariants to `(z0, z1, z2) = (1, 0, 1)` and returns a basis
/// of the span of the restrictions, as polynomials in `a_0, …, a_n`.
pub fn restriction_to_slice(space: &GradedInvariantSpace) -> Result<GradedInvariantSpace, Error> {
    let Some((_, b)) = space.bidegree else {
        return Err(Error::Precondition("restriction needs a space on P² × Pⁿ".into()));
    };
    let k = space.num_vars - 3;
    let mut values = vec![Some(Rational::one()), Some(Rational::zero()), Some(Rational::one())];
    values.extend(std::iter::repeat_n(None, k));
    let restricted: Vec<MultiPoly> = space.basis.iter().map(|p| p.partial_eval(&values)).collect();
    let basis = span_of(&restricted, k, b);
    let n = k - 1;
    debug_assert!(basis.iter().all(|p| apply_derivation(&sym_power_e(n), p).is_zero()));
    Ok(GradedInvariantSpace {
        degree: b,
        bidegree: None,
        num_vars: k,
        basis,
        constraints: vec!["restriction of SL(2)-invariants to z = (1, 0, 1)".into()],
    })
}

/// Span of the restrictions of all product invariants of bidegree `(a, d)`, `a ≤ max_a`.
pub fn restricted_invariants(n: usize, d: u32, max_a: u32, bound: u32) -> Result<GradedInvariantSpace, Error> {
    let mut all = Vec::new();
    for a in 0..=max_a {
        let space = product_sl2_invariants(n, (a, d), bound)?;
        all.extend(restriction_to_slice(&space)?.basis);
    }
    Ok(GradedInvariantSpace {
        degree: d,
        bidegree: None,
        num_vars: n + 1,
        basis: span_of(&all, n + 1, d),
        constraints: vec![format!("restrictions of bidegree (a, {d}) invariants, a ≤ {max_a}")],
    })
}

/// Unipotent invariant spaces of degrees `1..=max_degree`.
pub fn unipotent_invariant_family(
    u: &UnipotentData,
    max_degree: u32,
    bound: u32,
) -> Result<Vec<GradedInvariantSpace>, Error> {
    (1..=max_degree).map(|d| unipotent_invariants(u, d, bound)).collect()
}

/// `SL(2)`-invariant spaces of binary `n`-forms in degrees `1..=max_degree`.
pub fn sl2_invariant_family(n: usize, max_degree: u32, bound: u32) -> Result<Vec<GradedInvariantSpace>, Error> {
    (1..=max_degree).map(|d| sl2_invariants_binary_form(n, d, bound)).collect()
}

/// Rank of a family of degree-`d` polynomials in `num_vars` variables.
pub fn span_rank(polys: &[MultiPoly], num_vars: usize, d: u32) -> usize {
    let monos = monomials(num_vars, d);
    let vecs: Vec<Vec<Rational>> = polys.iter().map(|p| p.coefficients_on(&monos)).collect();
    crate::exact::matrix::span_rank(&vecs)
}

fn span_of(polys: &[MultiPoly], num_vars: usize, d: u32) -> Vec<MultiPoly> {
    let monos = monomials(num_vars, d);
    let vecs: Vec<Vec<Rational>> = polys.iter().map(|p| p.coefficients_on(&monos)).collect();
    span_basis(&vecs, monos.len())
        .iter()
        .map(|v| primitive(&MultiPoly::from_coefficients(num_vars, &monos, v)))
        .collect()
}
