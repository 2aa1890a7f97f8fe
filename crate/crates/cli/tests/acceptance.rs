//! Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

#[path = "../../core/tests/common/oracles.rs"]
mod oracles;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nrgit_cli::{corpus, run, Command, JobSpec};
use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::graded::{blowup_centre, check_condition_cstar, chi_window, hat_stable_minplus, m0, q_hat_stable};
use nrgit_core::invariants::{
    invariant_nonvanishing_verdict, points_at_infinity_classifier, restricted_invariants, sl2_invariants_binary_form,
    span_rank, unipotent_invariant_family, unipotent_invariants, DEFAULT_MAX_BIDEGREE, DEFAULT_MAX_DEGREE,
};
use nrgit_core::torus::{kirwan_indices, stratum_of, torus_verdict, Status, DEFAULT_SUBSET_CAP};
use nrgit_core::{
    jordan_embed_ga, parse_document, serialize_document, ActionDocument, HullPosition, ProjectivePoint, TorusWeights,
};
use num_traits::Zero;
use oracles::{closest_point_oracle, hull_position_oracle, sl2_weight_count};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
}

fn corpus_documents() -> Vec<(String, ActionDocument)> {
    corpus_files()
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, parse_document(&text).expect("corpus parses"))
        })
        .collect()
}

fn random_point(rng: &mut ChaCha8Rng, len: usize) -> ProjectivePoint {
    loop {
        let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-2..=2)).collect();
        if c.iter().any(|&v| v != 0) {
            return ProjectivePoint::from_ints(&c);
        }
    }
}

fn random_weights(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> Vec<Vec<i64>> {
    (0..len).map(|_| (0..rank).map(|_| rng.gen_range(-3..=3)).collect()).collect()
}

fn expected_status(p: HullPosition) -> Status {
    Status::from_position(p)
}

fn hull_oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut disagreements = 0;
    for _ in 0..1000 {
        let rank = rng.gen_range(1..=3);
        let len = rng.gen_range(1..=6);
        let w = random_weights(&mut rng, rank, len);
        let twist: Vec<Rational> = (0..rank).map(|_| rational::frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))).collect();
        let a = TorusWeights::new(rank, w.clone()).map_err(|e| e.to_string())?;
        let x = random_point(&mut rng, len);
        let got = torus_verdict(&a, &twist, &x).map_err(|e| e.to_string())?.status;
        let support: Vec<Vec<Rational>> = x
            .support()
            .iter()
            .map(|&i| rational::sub_vec(&rational::ints(&w[i]), &twist))
            .collect();
        if got != expected_status(hull_position_oracle(&support)) {
            disagreements += 1;
        }
    }
    ensure(disagreements == 0, || format!("{disagreements} disagreements"))?;
    Ok("1000 instances, 0 disagreements".into())
}

fn cubic_panel_reproduction() -> Check {
    let a = jordan_embed_ga(&[3]);
    let family = unipotent_invariant_family(a.unipotent().unwrap(), 4, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    let panel = corpus::cubic_panel();
    ensure(panel.len() >= 20, || "panel too small".into())?;
    let mut patterns = std::collections::BTreeSet::new();
    for p in &panel {
        let c = points_at_infinity_classifier(3, &p.point).map_err(|e| e.to_string())?;
        patterns.insert((c.multiplicity_at_infinity, c.max_multiplicity));
        let v = invariant_nonvanishing_verdict(&family, &p.point);
        ensure(v.nonvanishing == c.at_most_one_at_infinity(), || {
            format!("{} disagrees: classifier {c:?}, nonvanishing {}", p.name, v.nonvanishing)
        })?;
    }
    // (mult at ∞, max mult) pairs realisable by a cubic
    let all = [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 2), (3, 3)];
    ensure(all.iter().all(|k| patterns.contains(k)), || format!("missing patterns, saw {patterns:?}"))?;
    Ok(format!("{} cubics, {} root patterns", panel.len(), patterns.len()))
}

fn restriction_witness() -> Check {
    let u = jordan_embed_ga(&[3]);
    let u = u.unipotent().unwrap();
    let mut dims = Vec::new();
    for d in 1..=4u32 {
        let target = unipotent_invariants(u, d, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        let r = restricted_invariants(3, d, DEFAULT_MAX_BIDEGREE - d, DEFAULT_MAX_BIDEGREE).map_err(|e| e.to_string())?;
        let mut stacked = target.basis.clone();
        stacked.extend(r.basis.iter().cloned());
        let rank_r = span_rank(&r.basis, 4, d);
        let rank_all = span_rank(&stacked, 4, d);
        ensure(rank_r == target.dim() && rank_all == target.dim(), || {
            format!("d = {d}: restriction rank {rank_r}, joint rank {rank_all}, target {}", target.dim())
        })?;
        dims.push(target.dim());
    }
    Ok(format!("ranks {dims:?} for d = 1..4"))
}

fn quartic_dimensions() -> Check {
    for n in 1..=4 {
        for d in 1..=6 {
            let dim = sl2_invariants_binary_form(n, d, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?.dim() as i64;
            let oracle = sl2_weight_count(n, d);
            ensure(dim == oracle, || format!("n = {n}, d = {d}: {dim} vs oracle {oracle}"))?;
        }
    }
    let q: Vec<usize> = (1..=3)
        .map(|d| sl2_invariants_binary_form(4, d, DEFAULT_MAX_DEGREE).unwrap().dim())
        .collect();
    ensure(q == [0, 1, 1], || format!("quartic degrees 1..3: {q:?}"))?;
    Ok("n ≤ 4, d ≤ 6 match; quartics (0, 1, 1) in degrees 1..3".into())
}

fn twist_invariance() -> Check {
    let mut tested = 0;
    for (name, doc) in corpus_documents() {
        let g = match doc.action.grading() {
            Some(g) if !g.is_trivial() => g,
            _ => continue,
        };
        let w = chi_window(g).map_err(|e| e.to_string())?;
        let at = |t: i64| &w.lo + (&w.hi - &w.lo) * rational::frac(t, 4);
        let table = |chi: Rational| -> Result<Vec<Status>, String> {
            let a = doc.action.with_chi(chi).map_err(|e| e.to_string())?;
            doc.points
                .iter()
                .map(|p| hat_stable_minplus(&a, &p.point).map(|v| v.status).map_err(|e| e.to_string()))
                .collect()
        };
        let (t1, t3) = (table(at(1))?, table(at(3))?);
        ensure(t1 == t3, || format!("{name}: tables differ"))?;
        tested += 1;
    }
    ensure(tested >= 4, || format!("only {tested} graded corpus actions"))?;
    Ok(format!("{tested} graded corpus actions"))
}

fn trivial_extension() -> Check {
    let mut rows = 0;
    for (name, doc) in corpus_documents() {
        if !doc.action.grading().is_some_and(|g| g.is_trivial()) {
            continue;
        }
        let a = &doc.action;
        for p in &doc.points {
            let plain = torus_verdict(a.torus(), a.torus_twist(), &p.point).map_err(|e| e.to_string())?.status;
            for (n, d) in [(1, 4), (1, 2), (3, 4)] {
                let q = rational::frac(n, d);
                let v = q_hat_stable(a, &q, m0(a, &q), &p.point).map_err(|e| e.to_string())?.status;
                ensure(v == plain, || format!("{name}/{}: q = {n}/{d} gives {v:?}, torus {plain:?}", p.name))?;
            }
            for q in [rational::int(-1), rational::int(2)] {
                let v = q_hat_stable(a, &q, m0(a, &q), &p.point).map_err(|e| e.to_string())?.status;
                ensure(v == Status::Unstable, || format!("{name}/{}: q = {q} gives {v:?}", p.name))?;
            }
            rows += 1;
        }
    }
    ensure(rows > 0, || "no trivial-grading corpus points".into())?;
    Ok(format!("{rows} points, 5 values of q"))
}

fn stratification_axioms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut sets, mut pairs) = (0, 0u64);
    for _ in 0..400 {
        let rank = rng.gen_range(1..=2);
        let len = rng.gen_range(1..=8);
        let w = random_weights(&mut rng, rank, len);
        let a = TorusWeights::new(rank, w.clone()).map_err(|e| e.to_string())?;
        let zero = vec![Rational::zero(); rank];
        let strat = kirwan_indices(&a, &zero, DEFAULT_SUBSET_CAP).map_err(|e| e.to_string())?;
        let pts: Vec<Vec<Rational>> = w.iter().map(|v| rational::ints(v)).collect();
        let full = 1usize << len;
        let mut norm = vec![Rational::zero(); full];
        let mut counted = 0;
        for (mask, slot) in norm.iter_mut().enumerate().skip(1) {
            let s: Vec<usize> = (0..len).filter(|&i| mask >> i & 1 == 1).collect();
            let sub: Vec<Vec<Rational>> = s.iter().map(|&i| pts[i].clone()).collect();
            let beta = closest_point_oracle(&sub);
            *slot = rational::norm_sq(&beta);
            let pos = strat.position(&beta).ok_or_else(|| format!("{w:?}: index {beta:?} missing"))?;
            ensure(strat.supports[pos].contains(&s), || format!("{w:?}: support {s:?} misfiled"))?;
            counted += 1;
        }
        let listed: usize = strat.supports.iter().map(Vec::len).sum();
        ensure(listed == counted, || format!("{w:?}: {listed} supports listed, {counted} expected"))?;
        // closure on supports: shrinking a support never lowers |β|²
        for s in 1..full {
            let mut t = s;
            while t > 0 {
                ensure(norm[t] >= norm[s], || format!("{w:?}: closure violated for {t:b} ⊆ {s:b}"))?;
                pairs += 1;
                t = (t - 1) & s;
            }
        }
        for _ in 0..4 {
            let x = random_point(&mut rng, len);
            let beta = stratum_of(&a, &zero, &x).map_err(|e| e.to_string())?;
            let status = torus_verdict(&a, &zero, &x).map_err(|e| e.to_string())?.status;
            ensure(beta.is_zero() == (status != Status::Unstable), || format!("{w:?}: stratum 0 mismatch at {x}"))?;
        }
        sets += 1;
    }
    Ok(format!("{sets} weight sets, {pairs} closure pairs, 0 violations"))
}

fn cubic_conditions() -> Check {
    let a = jordan_embed_ga(&[3]);
    let c = check_condition_cstar(&a, 0, 24).map_err(|e| e.to_string())?;
    ensure(c.verdict.holds(), || format!("C* verdict {:?}", c.verdict))?;
    let b = blowup_centre(&a).map_err(|e| e.to_string())?;
    ensure(b.fixed_locus == vec![ProjectivePoint::coordinate(4, 0)], || {
        format!("fixed locus {:?}", b.fixed_locus)
    })?;
    let n = &a.unipotent().unwrap().generators()[0];
    for s in [rational::int(1), rational::int(-3), rational::frac(5, 2)] {
        let x = ProjectivePoint::new(vec![s, Rational::zero(), Rational::zero(), Rational::zero()]).unwrap();
        ensure(n.mul_vec(x.coords()).iter().all(Zero::is_zero), || "constructed point not fixed".into())?;
        ensure(b.contains(&x), || format!("equations do not vanish at {x}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let x = ProjectivePoint::new((0..4).map(|_| rational::frac(rng.gen_range(1..=9), rng.gen_range(1..=5))).collect())
            .unwrap();
        ensure(!b.contains(&x), || format!("equations vanish at generic {x}"))?;
    }
    Ok(format!("C* holds; {} equations cut out [1:0:0:0]", b.equations.len()))
}

fn determinism_and_roundtrip() -> Check {
    let files = corpus_files();
    let commands = [Command::Stability, Command::Chamber, Command::Strata, Command::Graded, Command::Invariants];
    let mut runs = 0;
    for path in &files {
        for cmd in commands {
            let mut job = JobSpec::new(cmd);
            job.action = Some(path.clone());
            job.seed = 11;
            let first = run(&job).map_err(|e| e.to_string())?;
            let second = run(&job).map_err(|e| e.to_string())?;
            ensure(first == second, || format!("{}: {:?} output differs", path.display(), cmd))?;
            runs += 1;
        }
        let text = std::fs::read_to_string(path).unwrap();
        let doc = parse_document(&text).map_err(|e| e.to_string())?;
        ensure(serialize_document(&doc) == text, || format!("{} does not round-trip", path.display()))?;
        let again = parse_document(&serialize_document(&doc)).map_err(|e| e.to_string())?;
        ensure(again == doc, || format!("{} parse∘serialize differs", path.display()))?;
    }
    Ok(format!("{runs} repeated runs, {} documents round-trip", files.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "convex-hull oracle equivalence", Duration::from_secs(10), hull_oracle_equivalence),
        (2, "binary cubic panel: at most one root at ∞ ⇔ nonvanishing", Duration::from_secs(5), cubic_panel_reproduction),
        (3, "restrictions span the cubic semi-invariants", Duration::from_secs(60), restriction_witness),
        (4, "SL(2) invariant dimensions vs weight count", Duration::from_secs(30), quartic_dimensions),
        (5, "adapted-twist invariance over the corpus", Duration::from_secs(5), twist_invariance),
        (6, "trivial-grading hat stability", Duration::from_secs(5), trivial_extension),
        (7, "stratification axioms", Duration::from_secs(60), stratification_axioms),
        (8, "C* and blowup centre for binary cubics", Duration::from_secs(5), cubic_conditions),
        (9, "determinism and round trip", Duration::from_secs(5), determinism_and_roundtrip),
    ];
    let mut failed = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (tag, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {:.0} s limit", limit.as_secs_f64())),
            Err(e) => ("FAIL", e),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} criterion {id}: {title}: {detail} ({:.3} s)", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
