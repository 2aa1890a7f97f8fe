//! Built-in actions: `G_a ⊂ SL(2)` via Jordan blocks, the unipotent radical of
//! `Aut(P(1,1,2))`, and the jet reparametrisation groups `G_(k)`.

use num_traits::Zero;

use super::{GradingData, TorusWeights, UnipotentData, WeightedAction};
use crate::exact::rational::{self, Rational};
use crate::exact::RatMatrix;

/// Weights `(k, k-2, ..., -k)` of the diagonal torus of `SL(2)` on `Sym^k(k^2)`.
pub fn sym_weights(k: usize) -> Vec<i64> {
    (0..=k).map(|i| k as i64 - 2 * i as i64).collect()
}

/// `Sym^k` of the raising operator `e = [[0,1],[0,0]]` in the basis
/// `X^{k-i} Y^i`: `e·X^{k-i}Y^i = i·X^{k-i+1}Y^{i-1}`.
pub fn sym_power_e(k: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(k + 1, k + 1);
    for i in 1..=k {
        m[(i - 1, i)] = rational::int(i as i64);
    }
    m
}

/// `Sym^k` of the lowering operator `f = [[0,0],[1,0]]`: `f·X^{k-i}Y^i = (k-i)·X^{k-i-1}Y^{i+1}`.
pub fn sym_power_f(k: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(k + 1, k + 1);
    for i in 0..k {
        m[(i + 1, i)] = rational::int((k - i) as i64);
    }
    m
}

/// Midpoint of the two lowest distinct weights, or the common weight for a trivial grading.
fn midpoint_chi(weights: &[i64]) -> Rational {
    let mut w = weights.to_vec();
    w.sort_unstable();
    w.dedup();
    match w.as_slice() {
        [a, b, ..] => rational::frac(a + b, 2),
        [a] => rational::int(*a),
        [] => Rational::zero(),
    }
}

/// `G_a ⊂ SL(2)` acting on `P^n`, `k^{n+1} = ⊕ Sym^{k_i}(k^2)`, graded by the
/// diagonal torus of `SL(2)`. The grading twist is the midpoint of the adapted window.
pub fn jordan_embed_ga(block_sizes: &[usize]) -> WeightedAction {
    assert!(!block_sizes.is_empty(), "need at least one Jordan block");
    let weights: Vec<i64> = block_sizes.iter().flat_map(|&k| sym_weights(k)).collect();
    let n = RatMatrix::direct_sum(&block_sizes.iter().map(|&k| sym_power_e(k)).collect::<Vec<_>>());
    let label = format!(
        "G_a in SL(2) via Sym^({})",
        block_sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    let chi = midpoint_chi(&weights);
    WeightedAction::new(
        label,
        TorusWeights::rank_one(&weights),
        vec![Rational::zero()],
        Some(GradingData::new(weights, chi)),
        Some(UnipotentData::new(vec![n], vec![2]).expect("Sym^k(e) is nilpotent")),
    )
    .expect("Jordan embedding satisfies [h, e] = 2e")
}

/// Unipotent radical `U ≅ (k^+)^3` of `Aut(P(1,1,2))`, `z ↦ z + λx² + μxy + νy²`,
/// acting on the degree-2 space with basis `(x², xy, y², z)`. The torus is the
/// diagonal torus of `GL(2)`; the grading is its central `G_m`.
pub fn aut_p112_example() -> WeightedAction {
    let torus = TorusWeights::new(2, vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![0, 0]])
        .expect("rank-2 weights");
    let gm = vec![2, 2, 2, 0];
    let generators = (0..3)
        .map(|target| {
            let mut m = RatMatrix::zeros(4, 4);
            m[(target, 3)] = rational::one();
            m
        })
        .collect();
    let chi = midpoint_chi(&gm);
    WeightedAction::new(
        "Aut(P(1,1,2)) unipotent radical on (x^2, xy, y^2, z)",
        torus,
        vec![Rational::zero(); 2],
        Some(GradingData::new(gm, chi)),
        Some(UnipotentData::new(generators, vec![2, 2, 2]).expect("square-zero generators")),
    )
    .expect("central G_m grades U with weight 2")
}

/// Jet group `G_(k)` acting on `k^k` by its matrix model, written for column
/// vectors (the transpose of the displayed upper-triangular matrices). The
/// grading is the `a_1`-circle with weights `(1, ..., k)`; the generators are the
/// derivatives in the `a_m` directions, `m = 2..=k`, with adjoint weight `m - 1`.
pub fn jet_group_example(k: usize) -> WeightedAction {
    assert!(k >= 2, "jet order must be at least 2");
    let weights: Vec<i64> = (1..=k as i64).collect();
    let mut generators = Vec::new();
    let mut adjoint = Vec::new();
    for m in 2..=k {
        // ∂/∂a_m of the coefficient of t^j in φ(t)^i at φ = t is i·[j = i + m - 1]
        let mut g = RatMatrix::zeros(k, k);
        for i in 1..=k {
            let j = i + m - 1;
            if j <= k {
                g[(j - 1, i - 1)] = rational::int(i as i64);
            }
        }
        generators.push(g);
        adjoint.push(m as i64 - 1);
    }
    let chi = midpoint_chi(&weights);
    WeightedAction::new(
        format!("jet group G_({k})"),
        TorusWeights::rank_one(&weights),
        vec![Rational::zero()],
        Some(GradingData::new(weights, chi)),
        Some(UnipotentData::new(generators, adjoint).expect("strictly triangular generators")),
    )
    .expect("jet generators are graded")
}
