use std::fmt::Write;

use nrgit_core::exact::rational;
use nrgit_core::graded::{ChiClass, ConditionReport, ConditionVerdict};
use nrgit_core::torus::{Chamber, Status};
use nrgit_core::Rational;

use crate::reports::*;

fn status(s: Status) -> &'static str {
    match s {
        Status::Stable => "stable",
        Status::StrictlySemistable => "strictly semistable",
        Status::Unstable => "unstable",
    }
}

fn vec_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rational::to_text).collect();
    format!("({})", parts.join(", "))
}

fn chamber(c: &Chamber) -> String {
    format!("[{}, {}]", rational::to_text(&c.lo), rational::to_text(&c.hi))
}

fn section<T>(s: &Section<T>, show: impl Fn(&T) -> String) -> String {
    match s {
        Section::Ok(v) => show(v),
        Section::Unavailable { error } => format!("unavailable ({error})"),
    }
}

fn chi_class(c: &ChiClass) -> String {
    format!("{c:?}").to_lowercase()
}

fn condition(out: &mut String, c: &ConditionReport) {
    let verdict = match &c.verdict {
        ConditionVerdict::Holds => "holds".to_string(),
        ConditionVerdict::Fails { .. } => "fails".to_string(),
        ConditionVerdict::ProbablyHolds { seed, samples, .. } => {
            format!("probably holds (seed {seed}, {samples} samples)")
        }
    };
    let _ = writeln!(
        out,
        "condition {}: {verdict} (lie dim {}, Z_min dim {}, generic stabiliser dim {})",
        c.condition, c.lie_dim, c.z_min_dim, c.generic_stab_dim
    );
}

fn table(out: &mut String, t: &InvariantTable) {
    let _ = writeln!(out, "{} invariants", t.group);
    for p in &t.pieces {
        let _ = writeln!(out, "  degree {:>2}: dimension {}", p.degree, p.dimension);
    }
    let _ = writeln!(out, "  generator degrees: {:?}", t.generators.generator_degrees());
}

pub(crate) fn render(report: &Report) -> String {
    let mut out = String::new();
    let o = &mut out;
    match report {
        Report::Stability(r) => {
            let _ = writeln!(o, "{}: torus stability, twist {}", r.action, vec_text(&r.torus_twist));
            for row in &r.rows {
                let _ = writeln!(o, "  {:<20} {:<24} {}", row.name, row.point.to_string(), status(row.verdict.status));
            }
        }
        Report::Chamber(r) => {
            let _ = writeln!(o, "{}: chi = {}", r.action, rational::to_text(&r.chi));
            let _ = writeln!(o, "lowest bounded chamber {}", chamber(&r.lowest_bounded_chamber));
            let _ = writeln!(
                o,
                "twisted chamber {}, 0 in interior: {}",
                chamber(&r.twisted_chamber),
                r.zero_interior
            );
            let _ = writeln!(o, "omega {}", vec_text(&r.omega.values));
            let _ = writeln!(
                o,
                "adapted window {}",
                section(&r.window, |w| format!("({}, {})", rational::to_text(&w.lo), rational::to_text(&w.hi)))
            );
            let _ = writeln!(o, "chi is {}", section(&r.chi_class, chi_class));
        }
        Report::Strata(r) => {
            let _ = writeln!(o, "{}: {} strata", r.action, r.strata.len());
            for s in &r.strata {
                let _ = writeln!(
                    o,
                    "  beta {:<16} |beta|^2 = {:<8} {} supports",
                    vec_text(&s.index.beta),
                    rational::to_text(&s.index.norm_sq),
                    s.supports.len()
                );
            }
            for row in &r.rows {
                let _ = writeln!(
                    o,
                    "  {:<20} {:<24} beta {} ({})",
                    row.name,
                    row.point.to_string(),
                    vec_text(&row.beta),
                    status(row.status)
                );
            }
        }
        Report::Graded(r) => {
            let _ = writeln!(o, "{}: chi = {}, dim U = {}", r.action, rational::to_text(&r.chi), r.unipotent_dim);
            let _ = writeln!(o, "omega {}", vec_text(&r.omega.values));
            let _ = writeln!(o, "chi is {}", section(&r.chi_class, chi_class));
            condition(o, &r.condition_cstar);
            condition(o, &r.condition_cstar_tilde);
            let _ = writeln!(
                o,
                "blowup centre: {}",
                section(&r.blowup_centre, |b| {
                    if b.lie_dim == 0 {
                        return "none, U is trivial".to_string();
                    }
                    let eqs: Vec<String> = b.linear_equations.iter().map(ToString::to_string).collect();
                    format!("{} = 0, meets X0_min: {}", eqs.join(" = "), b.meets_x0_min)
                })
            );
            for row in &r.rows {
                let _ = writeln!(
                    o,
                    "  {:<20} {:<24} Z_min {:<5} X0_min {:<5} stab {} {}",
                    row.name,
                    row.point.to_string(),
                    row.in_z_min,
                    row.in_x0_min,
                    row.stab_dim,
                    status(row.verdict.status)
                );
            }
        }
        Report::Hatstable(r) => {
            let _ = writeln!(o, "{}: q = {}, m = {} (m0 = {})", r.action, rational::to_text(&r.q), r.m, r.m0);
            for row in &r.rows {
                let _ = writeln!(o, "  {:<20} {:<24} {}", row.name, row.point.to_string(), status(row.verdict.status));
            }
        }
        Report::Invariants(r) => {
            let _ = writeln!(o, "{}: degrees up to {}", r.action, r.max_degree);
            table(o, &r.invariants);
            if let Some(t) = &r.sl2 {
                table(o, t);
            }
            for row in &r.rows {
                let mut line = format!("  {:<20} {:<24} nonvanishing {}", row.name, row.point.to_string(), row.nonvanishing.nonvanishing);
                if let Some(v) = &row.sl2_nonvanishing {
                    let _ = write!(line, ", SL(2) {}", v.nonvanishing);
                }
                if let Some(inf) = &row.at_infinity {
                    let _ = write!(
                        line,
                        ", roots at infinity {}, max multiplicity {}",
                        inf.multiplicity_at_infinity, inf.max_multiplicity
                    );
                }
                let _ = writeln!(o, "{line}");
            }
        }
        Report::Examples(r) => {
            for f in &r.files {
                let _ = writeln!(o, "wrote {} ({}, {} points)", f.file, f.label, f.points);
            }
        }
    }
    out
}
