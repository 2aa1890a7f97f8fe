//! Built-in documents with their point panels.

use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::{
    aut_p112_example, jet_group_example, jordan_embed_ga, ActionDocument, Bounds, GradingData, NamedPoint,
    ProjectivePoint, TorusWeights, WeightedAction,
};

fn named(name: &str, coords: Vec<Rational>) -> NamedPoint {
    NamedPoint {
        name: name.into(),
        point: ProjectivePoint::new(coords).expect("panel points are nonzero"),
    }
}

fn ints(name: &str, c: &[i64]) -> NamedPoint {
    named(name, rational::ints(c))
}

/// Coefficients of `X^m · Π (X − r·Y)`, low `Y`-degree first.
fn from_roots(roots: &[Rational], at_infinity: usize) -> Vec<Rational> {
    let mut c = vec![rational::one()];
    for r in roots {
        let mut next = vec![rational::zero(); c.len() + 1];
        for (i, v) in c.iter().enumerate() {
            next[i] += v;
            next[i + 1] -= v * r;
        }
        c = next;
    }
    c.extend(std::iter::repeat_n(rational::zero(), at_infinity));
    c
}

/// Binary cubics `Σ a_i X^{3−i} Y^i` covering every root pattern, with the
/// `G_a`-fixed root `X = 0` ("∞") taken 0 to 3 times. The root `r = 0` of
/// `from_roots` is that fixed root; forms divisible by `Y` are given directly.
pub fn cubic_panel() -> Vec<NamedPoint> {
    let r = |v: &[i64]| rational::ints(v);
    vec![
        named("distinct_123", from_roots(&r(&[1, 2, 3]), 0)),
        ints("distinct_with_y", &[0, 1, 0, -1]),
        named("distinct_rational", from_roots(&[rational::frac(1, 2), rational::frac(-3, 2), rational::int(4)], 0)),
        ints("irreducible", &[1, 0, 0, -2]),
        ints("conic_times_line", &[1, -1, 1, -1]),
        named("inf1_distinct", from_roots(&r(&[1, 2]), 1)),
        ints("inf1_with_y", &[0, 1, -1, 0]),
        ints("inf1_conic", &[1, 0, 1, 0]),
        named("double_finite", from_roots(&r(&[1, 1, 2]), 0)),
        ints("double_y", &[0, 0, 1, -1]),
        ints("double_finite_with_y", &[0, 1, -2, 1]),
        named("inf1_double_finite", from_roots(&r(&[1, 1]), 1)),
        named("inf2_simple", from_roots(&r(&[1]), 2)),
        ints("inf2_with_y", &[0, 1, 0, 0]),
        named("triple_finite", from_roots(&r(&[1, 1, 1]), 0)),
        named("triple_rational", from_roots(&vec![rational::frac(-2, 3); 3], 0)),
        named("triple_at_infinity", from_roots(&[], 3)),
        ints("triple_y", &[0, 0, 0, 1]),
        ints("sum_of_extremes", &[1, 0, 0, 1]),
        ints("middle_terms", &[0, 1, 1, 0]),
        ints("all_ones", &[1, 1, 1, 1]),
        ints("cube_of_shift", &[8, 12, 6, 1]),
        ints("generic", &[3, -1, 4, 2]),
    ]
}

pub fn quartic_panel() -> Vec<NamedPoint> {
    let r = |v: &[i64]| rational::ints(v);
    vec![
        named("distinct", from_roots(&r(&[-2, -1, 1, 2]), 0)),
        ints("x4_minus_y4", &[1, 0, 0, 0, -1]),
        named("one_double", from_roots(&r(&[1, 1, 2, 3]), 0)),
        named("two_doubles", from_roots(&r(&[1, 1, -1, -1]), 0)),
        named("triple", from_roots(&r(&[2, 2, 2, -1]), 0)),
        named("triple_at_infinity", from_roots(&r(&[1]), 3)),
        named("quadruple", from_roots(&r(&[1, 1, 1, 1]), 0)),
        ints("x3y", &[0, 1, 0, 0, 0]),
    ]
}

pub fn cubics() -> ActionDocument {
    ActionDocument {
        action: jordan_embed_ga(&[3]).relabel("binary cubics"),
        points: cubic_panel(),
        bounds: Bounds {
            max_degree: Some(4),
            product_m: None,
        },
    }
}

pub fn quartics() -> ActionDocument {
    ActionDocument {
        action: jordan_embed_ga(&[4]).relabel("binary quartics"),
        points: quartic_panel(),
        bounds: Bounds {
            max_degree: Some(6),
            product_m: None,
        },
    }
}

pub fn p112() -> ActionDocument {
    ActionDocument {
        action: aut_p112_example(),
        points: vec![
            ints("z_only", &[0, 0, 0, 1]),
            ints("z_plus_x2", &[1, 0, 0, 1]),
            ints("z_plus_quadric", &[2, -1, 0, 3]),
            ints("no_z", &[1, 1, 1, 0]),
            ints("x2_only", &[1, 0, 0, 0]),
            ints("all_ones", &[1, 1, 1, 1]),
        ],
        bounds: Bounds {
            max_degree: Some(3),
            product_m: None,
        },
    }
}

pub fn jet3() -> ActionDocument {
    ActionDocument {
        action: jet_group_example(3),
        points: vec![
            ints("lowest", &[1, 0, 0]),
            ints("lowest_plus_middle", &[1, 1, 0]),
            ints("all_ones", &[1, 1, 1]),
            ints("generic", &[2, -1, 5]),
            ints("no_lowest", &[0, 1, 1]),
            ints("top_only", &[0, 0, 1]),
        ],
        bounds: Bounds {
            max_degree: Some(4),
            product_m: None,
        },
    }
}

/// A torus action with the trivial grading and no unipotent part.
fn torus_only(label: &str, rank: usize, weights: Vec<Vec<i64>>) -> WeightedAction {
    let len = weights.len();
    WeightedAction::new(
        label,
        TorusWeights::new(rank, weights).expect("consistent rank"),
        vec![rational::zero(); rank],
        Some(GradingData::new(vec![0; len], rational::zero())),
        None,
    )
    .expect("torus-only action")
}

pub fn weights_m1_0_2() -> ActionDocument {
    ActionDocument {
        action: torus_only("G_m with weights (-1, 0, 2)", 1, vec![vec![-1], vec![0], vec![2]]),
        points: vec![
            ints("all_ones", &[1, 1, 1]),
            ints("middle", &[0, 1, 0]),
            ints("negative", &[1, 0, 0]),
            ints("ends", &[1, 0, 1]),
            ints("middle_and_top", &[0, 1, 1]),
            ints("middle_and_bottom", &[1, 1, 0]),
        ],
        bounds: Bounds {
            max_degree: Some(6),
            product_m: None,
        },
    }
}

pub fn plane_rank2() -> ActionDocument {
    ActionDocument {
        action: torus_only(
            "diagonal torus of SL(3) on P^2",
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        ),
        points: vec![
            ints("all_ones", &[1, 1, 1]),
            ints("two_coords", &[1, 1, 0]),
            ints("vertex", &[0, 0, 1]),
            named("rational", vec![rational::frac(1, 2), rational::int(-3), rational::int(5)]),
        ],
        bounds: Bounds {
            max_degree: Some(6),
            product_m: None,
        },
    }
}

pub fn two_blocks() -> ActionDocument {
    ActionDocument {
        action: jordan_embed_ga(&[2, 1]),
        points: vec![
            ints("lowest_pair", &[0, 0, 1, 0, 1]),
            ints("generic", &[1, 2, 3, 4, 5]),
            ints("first_block", &[1, 1, 1, 0, 0]),
            ints("second_block_low", &[0, 0, 0, 0, 1]),
            ints("tops", &[1, 0, 0, 1, 0]),
        ],
        bounds: Bounds {
            max_degree: Some(3),
            product_m: None,
        },
    }
}

/// The documents regenerated by the `examples` command, by file name.
pub fn builtin_documents() -> Vec<(&'static str, ActionDocument)> {
    vec![
        ("binary_cubics.json", cubics()),
        ("binary_quartics.json", quartics()),
        ("aut_p112.json", p112()),
        ("jet_3.json", jet3()),
        ("sym2_plus_sym1.json", two_blocks()),
        ("weights_m1_0_2.json", weights_m1_0_2()),
        ("plane_rank2.json", plane_rank2()),
    ]
}
