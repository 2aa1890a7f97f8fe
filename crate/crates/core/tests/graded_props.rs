use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::graded::{
    chi_window, hat_stable_minplus, in_x0_min, m0, q_hat_stable, stab_dim_u, sweep_membership, u_sweep_membership,
    LieBasis,
};
use nrgit_core::torus::Status;
use nrgit_core::{aut_p112_example, jet_group_example, jordan_embed_ga, ProjectivePoint, RatMatrix, WeightedAction};
use num_traits::Zero;
use proptest::prelude::*;

/// `exp(M)·v` by the truncated series.
fn exp_series(m: &RatMatrix, v: &[Rational]) -> Vec<Rational> {
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    for k in 1..=v.len() as i64 {
        term = m.mul_vec(&term).into_iter().map(|t| t / rational::int(k)).collect();
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
    }
    out
}

fn actions() -> Vec<WeightedAction> {
    vec![
        jordan_embed_ga(&[1]),
        jordan_embed_ga(&[2]),
        jordan_embed_ga(&[3]),
        jordan_embed_ga(&[4]),
        jordan_embed_ga(&[2, 1]),
        aut_p112_example(),
        jet_group_example(3),
        jet_group_example(4),
    ]
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rational::frac(n, d))
}

/// A random point of `U·Z_min`: `exp(Σ c_j B_j)·z` with `z` supported on `V_min`.
fn swept_point(a: &WeightedAction, coeffs: &[Rational], z_coeffs: &[Rational]) -> Option<ProjectivePoint> {
    let g = a.grading().unwrap();
    let lie = LieBasis::of_action(a);
    let mut z = vec![Rational::zero(); g.len()];
    for (&i, c) in nrgit_core::graded::v_min_indices(g).iter().zip(z_coeffs) {
        z[i] = c.clone();
    }
    if z.iter().all(Zero::is_zero) {
        return None;
    }
    let c: Vec<Rational> = coeffs.iter().take(lie.dim()).cloned().collect();
    let m = lie.combination(&c);
    ProjectivePoint::new(exp_series(&m, &z)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn swept_points_are_recognised(
        which in 0usize..8,
        coeffs in prop::collection::vec(small_rational(), 6),
        z in prop::collection::vec(small_rational(), 2),
    ) {
        let a = &actions()[which];
        if let Some(x) = swept_point(a, &coeffs, &z) {
            let g = a.grading().unwrap();
            let lie = LieBasis::of_action(a);
            let cert = sweep_membership(&lie, g, &x).unwrap();
            prop_assert!(cert.in_sweep);
            let recovered = lie.combination(cert.lie_coefficients.as_ref().unwrap());
            let mut zmin = vec![Rational::zero(); g.len()];
            for i in nrgit_core::graded::v_min_indices(g) {
                zmin[i] = x.coords()[i].clone();
            }
            prop_assert_eq!(exp_series(&recovered, &zmin), x.coords().to_vec());
            prop_assert_eq!(hat_stable_minplus(a, &x).unwrap().status, Status::Unstable);
        }
    }

    #[test]
    fn one_generator_methods_agree(
        which in 0usize..5,
        coords in prop::collection::vec(-2i64..=2, 6),
    ) {
        let a = &actions()[which];
        let len = a.n() + 1;
        let c = &coords[..len];
        prop_assume!(c.iter().any(|&v| v != 0));
        let x = ProjectivePoint::from_ints(c);
        let g = a.grading().unwrap();
        let u = a.unipotent().unwrap();
        let gcd = u_sweep_membership(u, g, &x).unwrap();
        let solve = sweep_membership(&LieBasis::new(u), g, &x).unwrap();
        prop_assert_eq!(gcd.in_sweep, solve.in_sweep);
    }

    #[test]
    fn stable_set_ignores_the_adapted_twist(
        which in 0usize..8,
        t1 in 1i64..=9,
        t2 in 1i64..=9,
        coords in prop::collection::vec(-2i64..=2, 6),
    ) {
        let a = &actions()[which];
        let len = a.n() + 1;
        let c = &coords[..len];
        prop_assume!(c.iter().any(|&v| v != 0));
        let x = ProjectivePoint::from_ints(c);
        let w = chi_window(a.grading().unwrap()).unwrap();
        let at = |t: i64| &w.lo + (&w.hi - &w.lo) * rational::frac(t, 10);
        let v1 = hat_stable_minplus(&a.with_chi(at(t1)).unwrap(), &x).unwrap().status;
        let v2 = hat_stable_minplus(&a.with_chi(at(t2)).unwrap(), &x).unwrap().status;
        prop_assert_eq!(v1, v2);
    }

    #[test]
    fn hat_stable_lies_in_zero_hat_stable(
        which in 0usize..8,
        coords in prop::collection::vec(-2i64..=2, 6),
    ) {
        let a = &actions()[which];
        let len = a.n() + 1;
        let c = &coords[..len];
        prop_assume!(c.iter().any(|&v| v != 0));
        let x = ProjectivePoint::from_ints(c);
        let q = Rational::zero();
        let zero_hat = q_hat_stable(a, &q, m0(a, &q), &x).unwrap().status;
        prop_assert_eq!(zero_hat == Status::Stable, in_x0_min(a.grading().unwrap(), &x).unwrap());
        if hat_stable_minplus(a, &x).unwrap().status == Status::Stable {
            prop_assert_eq!(zero_hat, Status::Stable);
        }
    }
}

#[test]
fn minimal_weight_points_have_trivial_stabiliser_for_cubics() {
    let a = jordan_embed_ga(&[3]);
    let u = a.unipotent().unwrap();
    assert_eq!(stab_dim_u(u, &ProjectivePoint::coordinate(4, 3)).unwrap().dim, 0);
    assert_eq!(stab_dim_u(u, &ProjectivePoint::coordinate(4, 0)).unwrap().dim, 1);
}
