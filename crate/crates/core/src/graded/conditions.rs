//! Stabiliser dimensions in `U`, conditions (C*) and (C̃*), and the first
//! blow-up centre.
//!
//! For `x ∈ k^{n+1}` let `L(x)` be the matrix with columns `B_j·x` over a basis
//! `B_j` of `Lie(U)`. Every element of `Lie(U)` is nilpotent, so `B·x ∈ span(x)`
//! forces `B·x = 0` and `dim Stab_U(x) = dim Lie(U) − rank L(x)`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::lie::LieBasis;
use super::v_min_indices;
use crate::action::{ProjectivePoint, UnipotentData, WeightedAction};
use crate::error::Error;
use crate::exact::matrix::span_basis;
use crate::exact::poly::uni_gcd;
use crate::exact::rational::{self, Rational};
use crate::exact::{determinant, MultiPoly, RatMatrix};
use crate::torus::check_len;

pub const DEFAULT_SAMPLES: usize = 24;

/// Symbolic minors are only expanded when there are at most this many.
const MINOR_LIMIT: usize = 4000;
const MINOR_SIZE_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabDimReport {
    pub point: ProjectivePoint,
    pub dim: usize,
    /// Coefficient vectors in the Lie basis of the stabilising elements.
    #[serde(with = "rational::serde_text_vecs")]
    pub kernel_basis: Vec<Vec<Rational>>,
}

fn l_matrix(lie: &LieBasis, x: &[Rational]) -> RatMatrix {
    let cols: Vec<Vec<Rational>> = lie.elements.iter().map(|b| b.mul_vec(x)).collect();
    RatMatrix::from_columns(&cols, x.len())
}

fn l_rank(lie: &LieBasis, x: &[Rational]) -> usize {
    if lie.is_empty() {
        0
    } else {
        l_matrix(lie, x).rank()
    }
}

pub(crate) fn stab_dim_lie(lie: &LieBasis, x: &ProjectivePoint) -> StabDimReport {
    let kernel_basis = if lie.is_empty() {
        Vec::new()
    } else {
        // columns B_j x and x itself, so N·x ∈ span(x) is tested literally
        let mut cols: Vec<Vec<Rational>> = lie.elements.iter().map(|b| b.mul_vec(x.coords())).collect();
        cols.push(x.coords().to_vec());
        let m = RatMatrix::from_columns(&cols, x.len());
        m.kernel().into_iter().map(|mut v| {
            v.pop();
            v
        }).collect()
    };
    StabDimReport {
        point: x.clone(),
        dim: kernel_basis.len(),
        kernel_basis,
    }
}

/// Dimension of `{Σ c_j N_j : (Σ c_j N_j)·x ∈ span(x)}` in `Lie(U)`.
pub fn stab_dim_u(u: &UnipotentData, x: &ProjectivePoint) -> Result<StabDimReport, Error> {
    if let Some(n) = u.generators().first() {
        check_len("point coordinates", n.rows(), x.len())?;
    }
    Ok(stab_dim_lie(&LieBasis::new(u), x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConditionWitness {
    Point {
        point: ProjectivePoint,
    },
    /// The rank drops at `s·first + second` for every root `s` of `gcd`.
    Pencil {
        first: ProjectivePoint,
        second: ProjectivePoint,
        #[serde(with = "rational::serde_text_vec")]
        gcd: Vec<Rational>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConditionVerdict {
    Holds,
    Fails { witness: ConditionWitness },
    ProbablyHolds { heuristic: bool, seed: u64, samples: usize },
}

impl ConditionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionVerdict::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: String,
    pub lie_dim: usize,
    pub z_min_dim: usize,
    /// Rank of `L(z)` that must be kept on all of `Z_min`.
    pub required_rank: usize,
    pub generic_stab_dim: usize,
    pub generic_exact: bool,
    pub verdict: ConditionVerdict,
}

enum Drop {
    Never,
    At(Vec<Rational>),
    Along { first: Vec<Rational>, second: Vec<Rational>, gcd: Vec<Rational> },
    Unknown,
}

fn unit(len: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[i] = rational::one();
    v
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    crate::exact::convex::any_combination(n, k, &mut |c| {
        out.push(c.to_vec());
        false
    });
    out
}

/// All `r×r` minors of a matrix of polynomials.
fn minors(m: &[Vec<MultiPoly>], r: usize, num_vars: usize) -> Vec<MultiPoly> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for rs in combinations(rows, r) {
        for cs in combinations(cols, r) {
            let sub: Vec<Vec<MultiPoly>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            out.push(determinant(&sub, num_vars));
        }
    }
    out
}

fn sample_point(rng: &mut ChaCha8Rng, len: usize, vars: &[usize]) -> Vec<Rational> {
    loop {
        let mut v = vec![Rational::zero(); len];
        for &a in vars {
            v[a] = rational::int(rng.gen_range(-9..=9));
        }
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

/// Looks for a nonzero `z` supported on `vars` with `rank L(z) < r`.
fn rank_drop(lie: &LieBasis, len: usize, vars: &[usize], r: usize, seed: u64, samples: usize) -> Drop {
    if r == 0 || vars.is_empty() {
        return Drop::Never;
    }
    if r > len {
        return Drop::At(unit(len, vars[0]));
    }
    for &a in vars {
        if l_rank(lie, &unit(len, a)) < r {
            return Drop::At(unit(len, a));
        }
    }
    let d = vars.len();
    if d == 1 {
        return Drop::Never;
    }
    let m = lie.dim();
    if r == 1 {
        // L(z) = 0 is linear in z
        let mut rows = Vec::new();
        for b in &lie.elements {
            for i in 0..len {
                rows.push(vars.iter().map(|&a| b[(i, a)].clone()).collect());
            }
        }
        let kernel = RatMatrix::from_rows(rows).kernel();
        return match kernel.first() {
            Some(k) => {
                let mut v = vec![Rational::zero(); len];
                for (&a, c) in vars.iter().zip(k) {
                    v[a] = c.clone();
                }
                Drop::At(v)
            }
            None => Drop::Never,
        };
    }
    if d == 2 && r <= MINOR_SIZE_LIMIT && binomial(len, r).saturating_mul(binomial(m, r)) <= MINOR_LIMIT {
        // z = s·e_{v0} + e_{v1}; s = ∞ was covered by the unit vectors
        let (v0, v1) = (vars[0], vars[1]);
        let entries: Vec<Vec<MultiPoly>> = (0..len)
            .map(|i| {
                lie.elements
                    .iter()
                    .map(|b| MultiPoly::from_dense(&[b[(i, v1)].clone(), b[(i, v0)].clone()]))
                    .collect()
            })
            .collect();
        let mut g: Vec<Rational> = Vec::new();
        for minor in minors(&entries, r, 1) {
            g = uni_gcd(&g, &minor.to_dense().expect("univariate"));
            if g.len() == 1 {
                return Drop::Never;
            }
        }
        let (first, second) = (unit(len, v0), unit(len, v1));
        if g.len() == 2 {
            let s = -&g[0] / &g[1];
            let mut v = second.clone();
            v[v0] = s;
            return Drop::At(v);
        }
        return Drop::Along { first, second, gcd: g };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let z = sample_point(&mut rng, len, vars);
        if l_rank(lie, &z) < r {
            return Drop::At(z);
        }
    }
    Drop::Unknown
}

fn point(v: Vec<Rational>) -> ProjectivePoint {
    ProjectivePoint::new(v).expect("witness vectors are nonzero")
}

fn verdict_from(drop: Drop, exact: bool, seed: u64, samples: usize) -> ConditionVerdict {
    match drop {
        Drop::Never if exact => ConditionVerdict::Holds,
        Drop::At(z) => ConditionVerdict::Fails {
            witness: ConditionWitness::Point { point: point(z) },
        },
        Drop::Along { first, second, gcd } => ConditionVerdict::Fails {
            witness: ConditionWitness::Pencil {
                first: point(first),
                second: point(second),
                gcd,
            },
        },
        Drop::Never | Drop::Unknown => ConditionVerdict::ProbablyHolds {
            heuristic: true,
            seed,
            samples,
        },
    }
}

/// Exact generic rank of `L(x)` over all of `k^{n+1}` when the minors are small
/// enough to expand, otherwise the best sampled rank.
fn generic_rank(lie: &LieBasis, len: usize, seed: u64, samples: usize) -> (usize, bool) {
    let m = lie.dim();
    let upper = m.min(len);
    let all: Vec<usize> = (0..len).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut r = 0;
    for _ in 0..samples.max(1) {
        r = r.max(l_rank(lie, &sample_point(&mut rng, len, &all)));
        if r == upper {
            return (r, true);
        }
    }
    let entries: Vec<Vec<MultiPoly>> = (0..len)
        .map(|i| lie.elements.iter().map(|b| MultiPoly::linear(b.row(i))).collect())
        .collect();
    while r < upper {
        let k = r + 1;
        if k > MINOR_SIZE_LIMIT || binomial(len, k).saturating_mul(binomial(m, k)) > MINOR_LIMIT {
            return (r, false);
        }
        if minors(&entries, k, len).iter().all(MultiPoly::is_zero) {
            return (r, true);
        }
        r = k;
    }
    (r, true)
}

/// (C*): `Stab_U(z)` is trivial for every `z ∈ Z_min`, i.e. `L(z)` has full column rank on `V_min \ 0`.
pub fn check_condition_cstar(action: &WeightedAction, seed: u64, samples: usize) -> Result<ConditionReport, Error> {
    let g = action.require_grading()?;
    let lie = LieBasis::of_action(action);
    let len = g.len();
    let vars = v_min_indices(g);
    let (r_gen, generic_exact) = generic_rank(&lie, len, seed, samples);
    let drop = rank_drop(&lie, len, &vars, lie.dim(), seed, samples);
    Ok(ConditionReport {
        condition: "C*".into(),
        lie_dim: lie.dim(),
        z_min_dim: vars.len(),
        required_rank: lie.dim(),
        generic_stab_dim: lie.dim() - r_gen,
        generic_exact,
        verdict: verdict_from(drop, true, seed, samples),
    })
}

/// (C̃*): the stabiliser dimension on `Z_min` never exceeds its generic value on `X`.
pub fn check_condition_cstar_tilde(
    action: &WeightedAction,
    seed: u64,
    samples: usize,
) -> Result<ConditionReport, Error> {
    let g = action.require_grading()?;
    let lie = LieBasis::of_action(action);
    let len = g.len();
    let vars = v_min_indices(g);
    let (r_gen, generic_exact) = generic_rank(&lie, len, seed, samples);
    let drop = rank_drop(&lie, len, &vars, r_gen, seed, samples);
    Ok(ConditionReport {
        condition: "C~*".into(),
        lie_dim: lie.dim(),
        z_min_dim: vars.len(),
        required_rank: r_gen,
        generic_stab_dim: lie.dim() - r_gen,
        generic_exact,
        verdict: verdict_from(drop, generic_exact, seed, samples),
    })
}

/// Locus of maximal stabiliser dimension for a one-dimensional `U`: the fixed
/// locus `N·x = 0`, cut out by the 2×2 minors of `[N·x | x]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupCentre {
    pub lie_dim: usize,
    pub max_stab_dim_x: usize,
    pub max_stab_dim_x0_min: usize,
    pub meets_x0_min: bool,
    /// Basis of `ker N`; the centre is its projectivisation.
    pub fixed_locus: Vec<ProjectivePoint>,
    pub equations: Vec<MultiPoly>,
    pub linear_equations: Vec<MultiPoly>,
}

impl BlowupCentre {
    /// True iff every minor equation vanishes at `x`.
    pub fn contains(&self, x: &ProjectivePoint) -> bool {
        self.equations.iter().all(|e| e.eval(x.coords()).is_zero())
    }
}

fn normalise(p: MultiPoly) -> MultiPoly {
    let lead = p.terms().last().map(|(_, c)| c.clone()).expect("nonzero");
    p.scale(&lead.recip())
}

pub fn blowup_centre(action: &WeightedAction) -> Result<BlowupCentre, Error> {
    let g = action.require_grading()?;
    let lie = LieBasis::of_action(action);
    let len = g.len();
    match lie.dim() {
        0 => {
            return Ok(BlowupCentre {
                lie_dim: 0,
                max_stab_dim_x: 0,
                max_stab_dim_x0_min: 0,
                meets_x0_min: false,
                fixed_locus: Vec::new(),
                equations: Vec::new(),
                linear_equations: Vec::new(),
            })
        }
        1 => {}
        dim => return Err(Error::UnsupportedUnipotentDimension { dim }),
    }
    let n = &lie.elements[0];
    let kernel = n.kernel();
    let vmin = v_min_indices(g);
    let meets = kernel.iter().any(|k| vmin.iter().any(|&i| !k[i].is_zero()));

    let nx: Vec<MultiPoly> = (0..len).map(|i| MultiPoly::linear(n.row(i))).collect();
    let xs: Vec<MultiPoly> = (0..len).map(|i| MultiPoly::var(len, i)).collect();
    let mut equations: Vec<MultiPoly> = Vec::new();
    for i in 0..len {
        for k in (i + 1)..len {
            let minor = nx[i].mul(&xs[k]).sub(&nx[k].mul(&xs[i]));
            if !minor.is_zero() {
                let minor = normalise(minor);
                if !equations.contains(&minor) {
                    equations.push(minor);
                }
            }
        }
    }
    let linear_equations = span_basis(&n.row_vecs(), len)
        .iter()
        .map(|row| MultiPoly::linear(row))
        .collect();
    Ok(BlowupCentre {
        lie_dim: 1,
        max_stab_dim_x: 1,
        max_stab_dim_x0_min: usize::from(meets),
        meets_x0_min: meets,
        fixed_locus: kernel.into_iter().map(point).collect(),
        equations,
        linear_equations,
    })
}
