//! Browser bindings: torus verdicts with their weight hull, Kirwan strata, and
//! the binary cubic classifier. Every entry point takes text and returns JSON.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::graded::hat_stable_minplus;
use nrgit_core::invariants::{
    invariant_nonvanishing_verdict, points_at_infinity_classifier, sl2_invariant_family, unipotent_invariant_family,
    DEFAULT_MAX_DEGREE,
};
use nrgit_core::torus::{kirwan_indices, stratum_of, torus_verdict, DEFAULT_SUBSET_CAP};
use nrgit_core::{closest_point_to_origin, jordan_embed_ga, PolytopeQuery, ProjectivePoint, TorusWeights};

fn parse_row(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|c| rational::parse(c.trim()).map_err(|e| e.to_string()))
        .collect()
}

/// Weights as `a,b; c,d; …` (one integer vector per coordinate).
fn parse_weights(text: &str) -> Result<TorusWeights, String> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|e| format!("weight {c:?}: {e}")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let rank = rows.first().map_or(0, Vec::len);
    TorusWeights::new(rank, rows).map_err(|e| e.to_string())
}

fn texts(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::to_text).collect()
}

fn respond<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("serialisable"),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn hull_verdict(weights: &str, point: &str) -> String {
    respond((|| {
        let a = parse_weights(weights)?;
        let x = ProjectivePoint::new(parse_row(point)?).map_err(|e| e.to_string())?;
        let zero = vec![rational::zero(); a.rank()];
        let v = torus_verdict(&a, &zero, &x).map_err(|e| e.to_string())?;
        let support = x.support();
        let q = PolytopeQuery::new(support.iter().map(|&i| a.rational_weight(i)).collect()).map_err(|e| e.to_string())?;
        let beta = stratum_of(&a, &zero, &x).map_err(|e| e.to_string())?;
        Ok(json!({
            "weights": a.weights(),
            "support": support,
            "verdict": v,
            "closest_point": texts(&closest_point_to_origin(&q)),
            "stratum": texts(&beta.beta),
        }))
    })())
}

pub fn strata(weights: &str) -> String {
    respond((|| {
        let a = parse_weights(weights)?;
        let zero = vec![rational::zero(); a.rank()];
        let s = kirwan_indices(&a, &zero, DEFAULT_SUBSET_CAP).map_err(|e| e.to_string())?;
        Ok(json!({ "weights": a.weights(), "stratification": s }))
    })())
}

/// Coefficients `a_0, …, a_3` of `Σ a_i X^{3−i} Y^i`.
pub fn classify_cubic(coeffs: &str) -> String {
    respond((|| {
        let x = ProjectivePoint::new(parse_row(coeffs)?).map_err(|e| e.to_string())?;
        let roots = points_at_infinity_classifier(3, &x).map_err(|e| e.to_string())?;
        let action = jordan_embed_ga(&[3]);
        let ga = unipotent_invariant_family(action.unipotent().unwrap(), 4, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        let sl2 = sl2_invariant_family(3, 4, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        let torus = torus_verdict(action.torus(), action.torus_twist(), &x).map_err(|e| e.to_string())?;
        let hat = hat_stable_minplus(&action, &x).map_err(|e| e.to_string())?;
        Ok(json!({
            "roots": roots,
            "at_most_one_at_infinity": roots.at_most_one_at_infinity(),
            "ga_nonvanishing": invariant_nonvanishing_verdict(&ga, &x),
            "sl2_nonvanishing": invariant_nonvanishing_verdict(&sl2, &x),
            "torus_status": torus.status,
            "hat_status": hat.status,
        }))
    })())
}

#[wasm_bindgen(js_name = hullVerdict)]
pub fn hull_verdict_js(weights: &str, point: &str) -> String {
    hull_verdict(weights, point)
}

#[wasm_bindgen(js_name = strata)]
pub fn strata_js(weights: &str) -> String {
    strata(weights)
}

#[wasm_bindgen(js_name = classifyCubic)]
pub fn classify_cubic_js(coeffs: &str) -> String {
    classify_cubic(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn hull_of_a_triangle() {
        let v = parse(&hull_verdict("1,0; 0,1; -1,-1", "1,1,1"));
        assert_eq!(v["verdict"]["status"], "Stable");
        assert_eq!(v["closest_point"], json!(["0", "0"]));
        let v = parse(&hull_verdict("1,0; 0,1; -1,-1", "1,1,0"));
        assert_eq!(v["verdict"]["status"], "Unstable");
        assert_eq!(v["closest_point"], json!(["1/2", "1/2"]));
        assert_eq!(v["stratum"], json!(["1/2", "1/2"]));
    }

    #[test]
    fn strata_of_three_weights() {
        let v = parse(&strata("-1; 0; 1"));
        let idx = v["stratification"]["indices"].as_array().unwrap();
        assert_eq!(idx.len(), 3);
        assert_eq!(idx[0]["beta"], json!(["0"]));
    }

    #[test]
    fn cubic_classification() {
        let v = parse(&classify_cubic("1,0,0,1"));
        assert_eq!(v["at_most_one_at_infinity"], true);
        assert_eq!(v["ga_nonvanishing"]["nonvanishing"], true);
        assert_eq!(v["hat_status"], "Stable");
        let v = parse(&classify_cubic("1,0,0,0"));
        assert_eq!(v["roots"]["multiplicity_at_infinity"], 3);
        assert_eq!(v["ga_nonvanishing"]["nonvanishing"], false);
    }

    #[test]
    fn errors_are_reported_as_json() {
        assert!(parse(&hull_verdict("1;2", "0,0"))["error"].is_string());
        assert!(parse(&strata("x"))["error"].is_string());
        assert!(parse(&classify_cubic("1,2"))["error"].is_string());
    }
}
