//! Exact membership in the U-sweep `U·Z_min`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::lie::LieBasis;
use super::v_min_indices;
use crate::action::{GradingData, ProjectivePoint, UnipotentData};
use crate::error::Error;
use crate::exact::poly::{trim, uni_gcd};
use crate::exact::rational::{self, Rational};
use crate::exact::RatMatrix;
use crate::torus::check_len;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMethod {
    /// gcd of the coordinate polynomials of `exp(−sN)·x` above `ω_min`
    CoordinateGcd,
    /// weight-by-weight solve of `exp(A)·x_min = x` for `A ∈ Lie(U)`
    GradedSolve,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCertificate {
    pub in_sweep: bool,
    pub method: SweepMethod,
    /// Monic gcd (coefficients in `s`, constant term first); its roots are the
    /// parameters `s` with `exp(−sN)·x ∈ Z_min`. Empty when every `s` works.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_vec")]
    pub gcd: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rat")]
    pub parameter: Option<Rational>,
    /// Coefficients of `A` in the Lie basis with `exp(A)·x_min = x`.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_vec")]
    pub lie_coefficients: Option<Vec<Rational>>,
}

mod opt_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => rational::serde_text_vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        rational::serde_text_vec::deserialize(d).map(Some)
    }
}

mod opt_rat {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => rational::serde_text::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        rational::serde_text::deserialize(d).map(Some)
    }
}

/// `exp(M)·v` for nilpotent `M`.
pub(crate) fn exp_apply(m: &RatMatrix, v: &[Rational]) -> Vec<Rational> {
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    let mut k = 1i64;
    loop {
        term = m.mul_vec(&term);
        if term.iter().all(Zero::is_zero) {
            return out;
        }
        let inv = rational::frac(1, k);
        for (o, t) in out.iter_mut().zip(term.iter_mut()) {
            *t *= &inv;
            *o += &*t;
        }
        k += 1;
    }
}

/// Decides `∃ s: exp(−sN)·x ∈ Z_min` for a single generator `N`.
pub fn u_sweep_membership(u: &UnipotentData, g: &GradingData, x: &ProjectivePoint) -> Result<SweepCertificate, Error> {
    if u.dim() != 1 {
        return Err(Error::UnsupportedUnipotentDimension { dim: u.dim() });
    }
    check_len("point coordinates", g.len(), x.len())?;
    let n = &u.generators()[0];
    check_len("unipotent generator", g.len(), n.rows())?;

    // v_k = (−1)^k N^k x / k!, so exp(−sN)x = Σ s^k v_k
    let mut series = vec![x.coords().to_vec()];
    loop {
        let last = series.last().expect("nonempty");
        let k = series.len() as i64;
        let next: Vec<Rational> = n.mul_vec(last).iter().map(|c| -c / rational::int(k)).collect();
        if next.iter().all(Zero::is_zero) {
            break;
        }
        series.push(next);
    }
    let rmin = g.sorted_weights()[0];
    let mut gcd: Vec<Rational> = Vec::new();
    for i in (0..g.len()).filter(|&i| g.weights()[i] > rmin) {
        let p = trim(series.iter().map(|v| v[i].clone()).collect());
        gcd = uni_gcd(&gcd, &p);
    }
    // gcd of nothing (all p_i ≡ 0) is the zero polynomial: every s works
    let (in_sweep, parameter) = match gcd.len() {
        0 => (true, Some(Rational::zero())),
        1 => (false, None),
        2 => (true, Some(-&gcd[0] / &gcd[1])),
        _ => (true, None),
    };
    Ok(SweepCertificate {
        in_sweep,
        method: SweepMethod::CoordinateGcd,
        gcd: Some(gcd),
        parameter,
        lie_coefficients: None,
    })
}

/// Exact sweep membership for a unipotent group of any dimension.
///
/// Writes `u = exp(A)` with `A = Σ_w A_w` graded. Since every element of
/// `Lie(U)` raises weight, `u·z` for `z ∈ V_min` has `V_min`-part `z`, so `z = x_min`
/// is forced. The weight-`w` part of `exp(A)·z` is `A_w·z` plus terms in the `A_v`,
/// `v < w`, so the `A_w` are found level by level from linear systems. The
/// solutions at each level form a coset of the graded stabiliser of `z`, and any
/// choice extends, so the greedy solve is exact.
pub fn sweep_membership(lie: &LieBasis, g: &GradingData, x: &ProjectivePoint) -> Result<SweepCertificate, Error> {
    check_len("point coordinates", g.len(), x.len())?;
    let len = g.len();
    if let Some(b) = lie.elements.first() {
        check_len("unipotent generator", len, b.rows())?;
    }
    let rmin = g.sorted_weights()[0];
    let mut z = vec![Rational::zero(); len];
    for i in v_min_indices(g) {
        z[i] = x.coords()[i].clone();
    }
    let not_in = SweepCertificate {
        in_sweep: false,
        method: SweepMethod::GradedSolve,
        gcd: None,
        parameter: None,
        lie_coefficients: None,
    };
    if z.iter().all(Zero::is_zero) {
        return Ok(not_in);
    }

    let offset = |i: usize| g.weights()[i] - rmin;
    let mut levels: Vec<i64> = (0..len).map(offset).filter(|&o| o > 0).collect();
    levels.extend(lie.weights.iter().copied());
    levels.sort_unstable();
    levels.dedup();

    let mut coeffs = vec![Rational::zero(); lie.dim()];
    for &t in &levels {
        let rows: Vec<usize> = (0..len).filter(|&i| offset(i) == t).collect();
        if rows.is_empty() {
            continue;
        }
        let a = lie.combination(&coeffs);
        let y = if lie.is_empty() { z.clone() } else { exp_apply(&a, &z) };
        let residual: Vec<Rational> = rows.iter().map(|&i| &x.coords()[i] - &y[i]).collect();
        let cols: Vec<usize> = (0..lie.dim()).filter(|&j| lie.weights[j] == t).collect();
        if cols.is_empty() {
            if residual.iter().any(|r| !r.is_zero()) {
                return Ok(not_in);
            }
            continue;
        }
        let images: Vec<Vec<Rational>> = cols.iter().map(|&j| lie.elements[j].mul_vec(&z)).collect();
        let m = RatMatrix::from_rows(
            rows.iter()
                .map(|&i| images.iter().map(|v| v[i].clone()).collect())
                .collect(),
        );
        match m.solve(&residual) {
            Some(c) => {
                for (&j, cj) in cols.iter().zip(c) {
                    coeffs[j] = cj;
                }
            }
            None => return Ok(not_in),
        }
    }
    let a = lie.combination(&coeffs);
    let image = if lie.is_empty() { z } else { exp_apply(&a, &z) };
    debug_assert_eq!(image.as_slice(), x.coords());
    Ok(SweepCertificate {
        in_sweep: true,
        method: SweepMethod::GradedSolve,
        gcd: None,
        parameter: None,
        lie_coefficients: Some(coeffs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{aut_p112_example, jordan_embed_ga};
    use crate::exact::rational::{frac, int};

    fn p(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(c)
    }

    fn parts(a: &crate::action::WeightedAction) -> (UnipotentData, GradingData) {
        (a.unipotent().unwrap().clone(), a.grading().unwrap().clone())
    }

    #[test]
    fn z_min_is_in_its_sweep() {
        let (u, g) = parts(&jordan_embed_ga(&[3]));
        let c = u_sweep_membership(&u, &g, &p(&[0, 0, 0, 1])).unwrap();
        assert!(c.in_sweep);
        assert_eq!(c.parameter, Some(int(0)));
    }

    #[test]
    fn cubes_are_swept_and_others_not() {
        let (u, g) = parts(&jordan_embed_ga(&[3]));
        let lie = LieBasis::new(&u);
        // binomial coefficients times s^k: exp(sN)·e_3
        let cube = p(&[8, 12, 6, 1]);
        let c = u_sweep_membership(&u, &g, &cube).unwrap();
        assert!(c.in_sweep);
        assert_eq!(c.gcd.as_ref().unwrap().len(), 2);
        assert!(sweep_membership(&lie, &g, &cube).unwrap().in_sweep);
        // a double root away from the fixed point is not a cube
        let double = p(&[0, 0, 1, 1]);
        let c = u_sweep_membership(&u, &g, &double).unwrap();
        assert!(!c.in_sweep);
        assert!(!sweep_membership(&lie, &g, &double).unwrap().in_sweep);
    }

    #[test]
    fn graded_solve_recovers_the_group_element() {
        let a = aut_p112_example();
        let (u, g) = parts(&a);
        let lie = LieBasis::new(&u);
        // z ↦ z + 2x² − xy + y²/3
        let x = ProjectivePoint::new(vec![int(2), int(-1), frac(1, 3), int(1)]).unwrap();
        let c = sweep_membership(&lie, &g, &x).unwrap();
        assert!(c.in_sweep);
        assert_eq!(c.lie_coefficients, Some(vec![int(2), int(-1), frac(1, 3)]));
        assert!(!sweep_membership(&lie, &g, &p(&[1, 0, 0, 0])).unwrap().in_sweep);
        assert!(matches!(
            u_sweep_membership(&u, &g, &x),
            Err(Error::UnsupportedUnipotentDimension { dim: 3 })
        ));
    }

    #[test]
    fn trivial_u_sweeps_only_z_min() {
        let g = GradingData::new(vec![0, 1], int(0));
        let u = UnipotentData::new(vec![RatMatrix::zeros(2, 2)], vec![1]).unwrap();
        assert!(!u_sweep_membership(&u, &g, &p(&[1, 1])).unwrap().in_sweep);
        assert!(u_sweep_membership(&u, &g, &p(&[1, 0])).unwrap().in_sweep);
        let lie = LieBasis::new(&u);
        assert!(!sweep_membership(&lie, &g, &p(&[1, 1])).unwrap().in_sweep);
    }
}
