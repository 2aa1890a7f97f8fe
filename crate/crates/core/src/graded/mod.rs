//! Graded unipotent groups `Û = U ⋊ G_m`: minimal weight data, the U-sweep of
//! `Z_min`, stabiliser dimensions, conditions (C*) and (C̃*), blow-up centres
//! and the hat construction on `X × P¹`.

mod conditions;
mod hat;
mod lie;
mod sweep;

pub use conditions::{
    blowup_centre, check_condition_cstar, check_condition_cstar_tilde, stab_dim_u, BlowupCentre, ConditionReport,
    ConditionVerdict, ConditionWitness, StabDimReport, DEFAULT_SAMPLES,
};
pub use hat::{m0, q_hat_stable};
pub use lie::LieBasis;
pub use sweep::{sweep_membership, u_sweep_membership, SweepCertificate, SweepMethod};

use serde::{Deserialize, Serialize};

use crate::action::{GradingData, ProjectivePoint, WeightedAction};
use crate::error::Error;
use crate::exact::rational::{self, Rational};
use crate::torus::{check_len, torus_verdict, StabilityVerdict, Status, Witness};

/// Distinct twisted grading weights `ω_min < ω_{min+1} < … < ω_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSequence {
    #[serde(with = "rational::serde_text_vec")]
    pub values: Vec<Rational>,
}

impl OmegaSequence {
    pub fn min(&self) -> &Rational {
        &self.values[0]
    }

    pub fn max(&self) -> &Rational {
        self.values.last().expect("nonempty")
    }
}

/// The distinct values of `r_i − χ`, ascending.
pub fn omega_sequence(g: &GradingData) -> OmegaSequence {
    let mut w: Vec<i64> = g.sorted_weights().to_vec();
    w.dedup();
    OmegaSequence {
        values: w.into_iter().map(|r| rational::int(r) - g.chi()).collect(),
    }
}

/// Open window `(lo, hi)` of adapted characters, plus the default well-adapted bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdaptedWindow {
    #[serde(with = "rational::serde_text")]
    pub lo: Rational,
    #[serde(with = "rational::serde_text")]
    pub hi: Rational,
    #[serde(with = "rational::serde_text")]
    pub well_adapted_hi: Rational,
}

impl AdaptedWindow {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    pub fn classify(&self, chi: &Rational) -> ChiClass {
        if chi == &self.lo {
            ChiClass::Borderline
        } else if &self.lo < chi && chi < &self.hi {
            ChiClass::Adapted
        } else {
            ChiClass::NotAdapted
        }
    }
}

pub fn adapted_window(omega: &OmegaSequence) -> Result<AdaptedWindow, Error> {
    if omega.values.len() < 2 {
        return Err(Error::TrivialAction);
    }
    let lo = omega.values[0].clone();
    let hi = omega.values[1].clone();
    let well_adapted_hi = &lo + (&hi - &lo) / rational::int(2);
    Ok(AdaptedWindow { lo, hi, well_adapted_hi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChiClass {
    Adapted,
    Borderline,
    NotAdapted,
}

/// Window of the grading in untwisted weights, in which `χ` itself is judged.
pub fn chi_window(g: &GradingData) -> Result<AdaptedWindow, Error> {
    adapted_window(&omega_sequence(&g.with_chi(rational::zero())))
}

pub fn classify_chi(g: &GradingData) -> Result<ChiClass, Error> {
    Ok(chi_window(g)?.classify(g.chi()))
}

pub(crate) fn require_adapted(g: &GradingData) -> Result<(), Error> {
    let w = chi_window(g)?;
    if w.classify(g.chi()) != ChiClass::Adapted {
        return Err(Error::NotAdapted {
            chi: rational::to_text(g.chi()),
            lo: rational::to_text(&w.lo),
            hi: rational::to_text(&w.hi),
        });
    }
    Ok(())
}

/// Smallest twisted weight `r_i − χ` over the support of `x`.
pub fn min_support_weight(g: &GradingData, x: &ProjectivePoint) -> Result<Rational, Error> {
    check_len("point coordinates", g.len(), x.len())?;
    let r = x.support().into_iter().map(|i| g.weights()[i]).min().expect("nonempty support");
    Ok(rational::int(r) - g.chi())
}

/// Every supported coordinate has the minimal weight.
pub fn in_z_min(g: &GradingData, x: &ProjectivePoint) -> Result<bool, Error> {
    check_len("point coordinates", g.len(), x.len())?;
    let rmin = g.sorted_weights()[0];
    Ok(x.support().into_iter().all(|i| g.weights()[i] == rmin))
}

/// The minimal supported weight is `ω_min`, i.e. the `t → 0` limit lies in `Z_min`.
pub fn in_x0_min(g: &GradingData, x: &ProjectivePoint) -> Result<bool, Error> {
    check_len("point coordinates", g.len(), x.len())?;
    let rmin = g.sorted_weights()[0];
    Ok(x.support().into_iter().any(|i| g.weights()[i] == rmin))
}

/// Coordinates carrying the minimal grading weight (a basis of `V_min`).
pub fn v_min_indices(g: &GradingData) -> Vec<usize> {
    let rmin = g.sorted_weights()[0];
    (0..g.len()).filter(|&i| g.weights()[i] == rmin).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedWitness {
    #[serde(with = "rational::serde_text")]
    pub omega_min: Rational,
    #[serde(with = "rational::serde_text")]
    pub min_support_weight: Rational,
    pub in_z_min: bool,
    pub in_x0_min: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepCertificate>,
}

/// `Stable` on `X⁰_min \ U·Z_min`, `Unstable` elsewhere. A trivial grading forces
/// `U` to act trivially and falls back to plain torus stability.
pub fn hat_stable_minplus(action: &WeightedAction, x: &ProjectivePoint) -> Result<StabilityVerdict, Error> {
    let g = action.require_grading()?;
    action.check_point(x)?;
    if g.is_trivial() {
        require_trivial_u(action)?;
        return torus_verdict(action.torus(), action.torus_twist(), x);
    }
    require_adapted(g)?;
    let lie = LieBasis::of_action(action);
    let in_x0 = in_x0_min(g, x)?;
    let sweep = if in_x0 { Some(sweep_membership(&lie, g, x)?) } else { None };
    let stable = in_x0 && !sweep.as_ref().is_some_and(|s| s.in_sweep);
    Ok(StabilityVerdict {
        status: if stable { Status::Stable } else { Status::Unstable },
        witness: Witness::Graded(GradedWitness {
            omega_min: omega_sequence(g).min().clone(),
            min_support_weight: min_support_weight(g, x)?,
            in_z_min: in_z_min(g, x)?,
            in_x0_min: in_x0,
            sweep,
        }),
    })
}

pub(crate) fn require_trivial_u(action: &WeightedAction) -> Result<(), Error> {
    if action.unipotent().is_some_and(|u| !u.acts_trivially()) {
        return Err(Error::Precondition(
            "the grading G_m acts trivially, so U must act trivially as well".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::jordan_embed_ga;
    use crate::exact::rational::{frac, int, ints};

    fn g(ws: &[i64], chi: Rational) -> GradingData {
        GradingData::new(ws.to_vec(), chi)
    }

    fn p(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(c)
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_sequence(&g(&[0, 0, 1, 2], int(0))).values, ints(&[0, 1, 2]));
        assert_eq!(
            omega_sequence(&g(&[0, 0, 1, 2], frac(1, 2))).values,
            vec![frac(-1, 2), frac(1, 2), frac(3, 2)]
        );
        assert_eq!(omega_sequence(&g(&[3, 1, -1, -3], int(0))).values, ints(&[-3, -1, 1, 3]));
    }

    #[test]
    fn windows() {
        let w = adapted_window(&omega_sequence(&g(&[3, 1, -1, -3], int(0)))).unwrap();
        assert_eq!((w.lo.clone(), w.hi.clone()), (int(-3), int(-1)));
        assert_eq!(w.classify(&int(-3)), ChiClass::Borderline);
        assert_eq!(w.classify(&int(-2)), ChiClass::Adapted);
        assert_eq!(w.classify(&int(-1)), ChiClass::NotAdapted);
        assert_eq!(w.well_adapted_hi, int(-2));
        assert_eq!(
            adapted_window(&omega_sequence(&g(&[4, 4], int(0)))),
            Err(Error::TrivialAction)
        );
    }

    #[test]
    fn z_min_and_x0_min() {
        let a = g(&[0, 1, 2], int(0));
        assert!(in_z_min(&a, &p(&[1, 0, 0])).unwrap());
        assert!(!in_z_min(&a, &p(&[1, 1, 0])).unwrap());
        assert!(in_z_min(&g(&[0, 0, 2], int(0)), &p(&[1, 5, 0])).unwrap());
        assert!(in_x0_min(&a, &p(&[1, 1, 1])).unwrap());
        assert!(!in_x0_min(&a, &p(&[0, 1, 1])).unwrap());
    }

    #[test]
    fn hat_stable_on_cubics() {
        let a = jordan_embed_ga(&[3]);
        let v = |c: &[i64]| hat_stable_minplus(&a, &p(c)).unwrap().status;
        // coordinates ordered by weight (3, 1, -1, -3); Z_min is e_3
        assert_eq!(v(&[0, 0, 0, 1]), Status::Unstable);
        assert_eq!(v(&[1, 1, 1, 0]), Status::Unstable);
        // X^3 - XY^2 is divisible by X, so it has a root at the fixed point
        assert_eq!(v(&[1, 0, -1, 0]), Status::Unstable);
        // (X + Y)^3 lies in the U-sweep of Y^3
        assert_eq!(v(&[1, 3, 3, 1]), Status::Unstable);
        assert_eq!(v(&[0, 1, 0, -1]), Status::Stable);
        let borderline = a.with_chi(int(-3)).unwrap();
        assert!(matches!(
            hat_stable_minplus(&borderline, &p(&[0, 1, 0, -1])),
            Err(Error::NotAdapted { .. })
        ));
    }
}
