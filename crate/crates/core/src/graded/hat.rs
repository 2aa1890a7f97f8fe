//! The hat construction: stability of `(x, [1:1])` on `X × P¹` for the
//! linearisation `L ⊠ O(m)` with the `P¹` factor twisted by `q`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{omega_sequence, require_adapted, require_trivial_u};
use crate::action::{ProjectivePoint, WeightedAction};
use crate::error::Error;
use crate::exact::rational::{self, Rational};
use crate::torus::StabilityVerdict;

/// Lower bound `2·(⌈ω_max − ω_min⌉ + 1)·den(q)` on `m`.
pub fn m0(action: &WeightedAction, q: &Rational) -> u64 {
    let spread = match action.grading() {
        Some(g) if !g.is_trivial() => {
            let w = omega_sequence(g);
            rational::ceil_int(&(w.max() - w.min()))
        }
        _ => BigInt::zero(),
    };
    let bound: BigInt = BigInt::from(2) * (spread + BigInt::from(1)) * q.denom();
    bound.to_u64().unwrap_or(u64::MAX)
}

/// Decides whether `(x, [1:1])` is stable on `X × P¹`.
///
/// With a trivial (or absent) grading the group is `T × G_m` and the test is the
/// hull of `(α_i − τ, a − q·m)`, `a ∈ {0, m}`, over the support. With a nontrivial
/// grading `U` acts trivially on `P¹`, so `(x, [1:1])` never meets the sweep of
/// the product's `Z_min`, and only the `G_m`-weights `(r_i − χ) + a − q·m` matter.
pub fn q_hat_stable(action: &WeightedAction, q: &Rational, m: u64, x: &ProjectivePoint) -> Result<StabilityVerdict, Error> {
    action.check_point(x)?;
    let need = m0(action, q);
    if m < need {
        return Err(Error::MTooSmall { m, m0: need });
    }
    let m_r = Rational::from_integer(BigInt::from(m));
    let low = -(q * &m_r);
    let high = &m_r - q * &m_r;
    let support = x.support();
    let mut weights = Vec::with_capacity(2 * support.len());
    match action.grading() {
        Some(g) if !g.is_trivial() => {
            require_adapted(g)?;
            for &i in &support {
                let w = g.twisted_weight(i);
                weights.push(vec![&w + &low]);
                weights.push(vec![&w + &high]);
            }
        }
        _ => {
            require_trivial_u(action)?;
            let twisted = action.torus().twisted(action.torus_twist())?;
            for &i in &support {
                for extra in [&low, &high] {
                    let mut w = twisted[i].clone();
                    w.push(extra.clone());
                    weights.push(w);
                }
            }
        }
    }
    let doubled = support.iter().flat_map(|&i| [i, i]).collect();
    Ok(StabilityVerdict::from_hull(doubled, weights))
}
