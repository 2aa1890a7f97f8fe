//! Binary forms: roots at the `G_a`-fixed point and evaluation of invariants.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::GradedInvariantSpace;
use crate::action::ProjectivePoint;
use crate::error::Error;
use crate::exact::poly::{trim, uni_derivative, uni_gcd};
use crate::torus::check_len;

/// Root multiplicities of `Σ a_i X^{n−i} Y^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtInfinity {
    /// Power of `X` dividing the form: the multiplicity of the `G_a`-fixed root.
    pub multiplicity_at_infinity: usize,
    pub max_multiplicity: usize,
}

impl AtInfinity {
    /// At most one root at the fixed point.
    pub fn at_most_one_at_infinity(&self) -> bool {
        self.multiplicity_at_infinity <= 1
    }
}

/// Largest root multiplicity of a nonzero univariate polynomial, counted by
/// the chain `p, gcd(p, p'), …` until it reaches a constant.
fn max_finite_multiplicity(p: &[crate::exact::Rational]) -> usize {
    let mut g = trim(p.to_vec());
    let mut k = 0;
    while g.len() > 1 {
        g = uni_gcd(&g, &uni_derivative(&g));
        k += 1;
    }
    k
}

/// Classifies a binary `n`-form given by its coefficients `(a_0, …, a_n)`.
pub fn points_at_infinity_classifier(n: usize, x: &ProjectivePoint) -> Result<AtInfinity, Error> {
    check_len("binary form coefficients", n + 1, x.len())?;
    let a = x.coords();
    if a.iter().all(Zero::is_zero) {
        return Err(Error::ZeroForm);
    }
    let at_inf = a.iter().rev().take_while(|c| c.is_zero()).count();
    // F(1, Y) = Σ a_i Y^i carries every root away from X = 0
    let finite = max_finite_multiplicity(a);
    Ok(AtInfinity {
        multiplicity_at_infinity: at_inf,
        max_multiplicity: finite.max(at_inf),
    })
}

/// One-sided test: `nonvanishing` certifies an invariant of positive degree
/// that is nonzero at the point; `false` only means none was found up to
/// `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonvanishingVerdict {
    pub nonvanishing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_index: Option<usize>,
    pub max_degree: u32,
    pub one_sided: bool,
}

pub fn invariant_nonvanishing_verdict(family: &[GradedInvariantSpace], x: &ProjectivePoint) -> NonvanishingVerdict {
    let max_degree = family.iter().map(|s| s.degree).max().unwrap_or(0);
    let mut spaces: Vec<&GradedInvariantSpace> = family.iter().filter(|s| s.degree > 0).collect();
    spaces.sort_by_key(|s| s.degree);
    for s in spaces {
        if s.num_vars != x.len() {
            continue;
        }
        if let Some(k) = s.basis.iter().position(|f| !f.eval(x.coords()).is_zero()) {
            return NonvanishingVerdict {
                nonvanishing: true,
                witness_degree: Some(s.degree),
                witness_index: Some(k),
                max_degree,
                one_sided: true,
            };
        }
    }
    NonvanishingVerdict {
        nonvanishing: false,
        witness_degree: None,
        witness_index: None,
        max_degree,
        one_sided: true,
    }
}
