use serde::Serialize;

use nrgit_core::action::{sym_power_e, sym_weights};
use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::graded::{
    blowup_centre, check_condition_cstar, check_condition_cstar_tilde, chi_window, hat_stable_minplus, in_x0_min,
    in_z_min, m0, omega_sequence, q_hat_stable, stab_dim_u, AdaptedWindow, BlowupCentre, ChiClass, ConditionReport,
    OmegaSequence, DEFAULT_SAMPLES,
};
use nrgit_core::invariants::{
    generator_report, invariant_nonvanishing_verdict, points_at_infinity_classifier, sl2_invariant_family,
    unipotent_invariant_family, weighted_unipotent_invariants, AtInfinity, GeneratorReport, GradedInvariantSpace,
    NonvanishingVerdict, DEFAULT_MAX_DEGREE,
};
use nrgit_core::torus::{
    chamber_contains_zero_interior, kirwan_indices, lowest_bounded_chamber, stratum_of, stratum_quotient_data,
    torus_verdict, twisted_chamber, Chamber, StabilityVerdict, Status, StratumIndex, StratumQuotientData,
};
use nrgit_core::{ActionDocument, Error, ProjectivePoint, UnipotentData, WeightedAction};

use crate::CliError;

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Stability(StabilityReport),
    Chamber(ChamberReport),
    Strata(StrataReport),
    Graded(GradedReport),
    Hatstable(HatstableReport),
    Invariants(InvariantsReport),
    Examples(ExamplesReport),
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }
}

/// A section that may be unavailable for the action at hand.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Ok(T),
    Unavailable { error: String },
}

impl<T> Section<T> {
    fn from_result(r: Result<T, Error>) -> Result<Self, CliError> {
        match r {
            Ok(v) => Ok(Section::Ok(v)),
            Err(e @ (Error::TrivialAction | Error::UnsupportedUnipotentDimension { .. } | Error::MissingGrading)) => {
                Ok(Section::Unavailable { error: e.to_string() })
            }
            Err(e) => Err(e.into()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictRow {
    pub name: String,
    pub point: ProjectivePoint,
    pub verdict: StabilityVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub command: &'static str,
    pub action: String,
    #[serde(with = "rational::serde_text_vec")]
    pub torus_twist: Vec<Rational>,
    pub rows: Vec<VerdictRow>,
}

pub fn stability_report(doc: &ActionDocument) -> Result<StabilityReport, CliError> {
    let a = &doc.action;
    let rows = doc
        .points
        .iter()
        .map(|p| {
            Ok(VerdictRow {
                name: p.name.clone(),
                point: p.point.clone(),
                verdict: torus_verdict(a.torus(), a.torus_twist(), &p.point)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(StabilityReport {
        command: "stability",
        action: a.label().to_string(),
        torus_twist: a.torus_twist().to_vec(),
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ChamberReport {
    pub command: &'static str,
    pub action: String,
    #[serde(with = "rational::serde_text")]
    pub chi: Rational,
    pub lowest_bounded_chamber: Chamber,
    pub twisted_chamber: Chamber,
    pub zero_interior: bool,
    pub omega: OmegaSequence,
    pub window: Section<AdaptedWindow>,
    pub chi_class: Section<ChiClass>,
}

pub fn chamber_report(doc: &ActionDocument) -> Result<ChamberReport, CliError> {
    let a = &doc.action;
    let g = a.require_grading()?;
    let twisted = twisted_chamber(g);
    let window = chi_window(g);
    let chi_class = window.clone().map(|w| w.classify(g.chi()));
    Ok(ChamberReport {
        command: "chamber",
        action: a.label().to_string(),
        chi: g.chi().clone(),
        lowest_bounded_chamber: lowest_bounded_chamber(g),
        zero_interior: chamber_contains_zero_interior(&twisted),
        twisted_chamber: twisted,
        omega: omega_sequence(g),
        window: Section::from_result(window)?,
        chi_class: Section::from_result(chi_class)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumEntry {
    #[serde(flatten)]
    pub index: StratumIndex,
    pub supports: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<StratumQuotientData>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumRow {
    pub name: String,
    pub point: ProjectivePoint,
    #[serde(with = "rational::serde_text_vec")]
    pub beta: Vec<Rational>,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct StrataReport {
    pub command: &'static str,
    pub action: String,
    pub subset_cap: usize,
    pub strata: Vec<StratumEntry>,
    pub rows: Vec<StratumRow>,
}

pub fn strata_report(doc: &ActionDocument, cap: usize) -> Result<StrataReport, CliError> {
    let a = &doc.action;
    let (t, tw) = (a.torus(), a.torus_twist());
    let strat = kirwan_indices(t, tw, cap)?;
    let mut strata = Vec::new();
    for (index, supports) in strat.indices.iter().zip(&strat.supports) {
        let quotient = if index.is_zero() {
            None
        } else {
            Some(stratum_quotient_data(t, tw, &index.beta, cap)?)
        };
        strata.push(StratumEntry {
            index: index.clone(),
            supports: supports.clone(),
            quotient,
        });
    }
    let rows = doc
        .points
        .iter()
        .map(|p| {
            Ok(StratumRow {
                name: p.name.clone(),
                point: p.point.clone(),
                beta: stratum_of(t, tw, &p.point)?.beta,
                status: torus_verdict(t, tw, &p.point)?.status,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(StrataReport {
        command: "strata",
        action: a.label().to_string(),
        subset_cap: cap,
        strata,
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedRow {
    pub name: String,
    pub point: ProjectivePoint,
    pub in_z_min: bool,
    pub in_x0_min: bool,
    pub stab_dim: usize,
    pub verdict: StabilityVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedReport {
    pub command: &'static str,
    pub action: String,
    #[serde(with = "rational::serde_text")]
    pub chi: Rational,
    pub omega: OmegaSequence,
    pub window: Section<AdaptedWindow>,
    pub chi_class: Section<ChiClass>,
    pub unipotent_dim: usize,
    pub condition_cstar: ConditionReport,
    pub condition_cstar_tilde: ConditionReport,
    pub blowup_centre: Section<BlowupCentre>,
    pub rows: Vec<GradedRow>,
}

fn stab_dim(a: &WeightedAction, x: &ProjectivePoint) -> Result<usize, Error> {
    match a.unipotent() {
        Some(u) => Ok(stab_dim_u(u, x)?.dim),
        None => Ok(0),
    }
}

pub fn graded_report(doc: &ActionDocument, seed: u64) -> Result<GradedReport, CliError> {
    let a = &doc.action;
    let g = a.require_grading()?;
    let window = chi_window(g);
    let chi_class = window.clone().map(|w| w.classify(g.chi()));
    let rows = doc
        .points
        .iter()
        .map(|p| {
            Ok(GradedRow {
                name: p.name.clone(),
                point: p.point.clone(),
                in_z_min: in_z_min(g, &p.point)?,
                in_x0_min: in_x0_min(g, &p.point)?,
                stab_dim: stab_dim(a, &p.point)?,
                verdict: hat_stable_minplus(a, &p.point)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(GradedReport {
        command: "graded",
        action: a.label().to_string(),
        chi: g.chi().clone(),
        omega: omega_sequence(g),
        window: Section::from_result(window)?,
        chi_class: Section::from_result(chi_class)?,
        unipotent_dim: a.unipotent_dim(),
        condition_cstar: check_condition_cstar(a, seed, DEFAULT_SAMPLES)?,
        condition_cstar_tilde: check_condition_cstar_tilde(a, seed, DEFAULT_SAMPLES)?,
        blowup_centre: Section::from_result(blowup_centre(a))?,
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HatstableReport {
    pub command: &'static str,
    pub action: String,
    #[serde(with = "rational::serde_text")]
    pub q: Rational,
    pub m: u64,
    pub m0: u64,
    pub rows: Vec<VerdictRow>,
}

pub fn hatstable_report(doc: &ActionDocument, q: &Rational, m: Option<u64>) -> Result<HatstableReport, CliError> {
    let a = &doc.action;
    let lower = m0(a, q);
    let m = m.unwrap_or(lower);
    let rows = doc
        .points
        .iter()
        .map(|p| {
            Ok(VerdictRow {
                name: p.name.clone(),
                point: p.point.clone(),
                verdict: q_hat_stable(a, q, m, &p.point)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(HatstableReport {
        command: "hatstable",
        action: a.label().to_string(),
        q: q.clone(),
        m,
        m0: lower,
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantPiece {
    pub degree: u32,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantTable {
    pub group: String,
    pub pieces: Vec<InvariantPiece>,
    pub generators: GeneratorReport,
}

impl InvariantTable {
    fn new(group: impl Into<String>, family: &[GradedInvariantSpace]) -> Self {
        Self {
            group: group.into(),
            pieces: family
                .iter()
                .map(|s| InvariantPiece {
                    degree: s.degree,
                    dimension: s.dim(),
                    basis: s.basis.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            generators: generator_report(family),
        }
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dimension).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantRow {
    pub name: String,
    pub point: ProjectivePoint,
    pub nonvanishing: NonvanishingVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl2_nonvanishing: Option<NonvanishingVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_infinity: Option<AtInfinity>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub command: &'static str,
    pub action: String,
    pub max_degree: u32,
    /// Degree `n` when the action is `G_a` on binary `n`-forms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub binary_form_degree: Option<usize>,
    pub invariants: InvariantTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl2: Option<InvariantTable>,
    pub rows: Vec<InvariantRow>,
}

/// `n` when the action is `Sym^n(e)` with the diagonal `SL(2)` torus weights.
pub fn binary_form_degree(a: &WeightedAction) -> Option<usize> {
    let n = a.n();
    let u = a.unipotent()?;
    let t = a.torus();
    let weights: Vec<i64> = t.weights().iter().map(|w| w[0]).collect();
    (n >= 1 && u.dim() == 1 && u.generators()[0] == sym_power_e(n) && t.rank() == 1 && weights == sym_weights(n))
        .then_some(n)
}

/// `G_a`-invariants for a unipotent action; otherwise torus invariants of
/// weight `d·τ` for the torus twist `τ`.
fn base_family(a: &WeightedAction, max_degree: u32) -> Result<(String, Vec<GradedInvariantSpace>), Error> {
    if let Some(u) = a.unipotent() {
        return Ok(("U".into(), unipotent_invariant_family(u, max_degree, DEFAULT_MAX_DEGREE)?));
    }
    if max_degree > DEFAULT_MAX_DEGREE {
        return Err(Error::DegreeBoundExceeded {
            degree: max_degree,
            bound: DEFAULT_MAX_DEGREE,
        });
    }
    let trivial = UnipotentData::new(Vec::new(), Vec::new())?;
    let weights = a.torus().weights();
    let mut family = Vec::new();
    for d in 1..=max_degree {
        let scaled: Vec<Rational> = a.torus_twist().iter().map(|t| t * rational::int(d as i64)).collect();
        let space = if scaled.iter().all(|t| t.is_integer()) {
            let target: Vec<i64> = scaled.iter().map(|t| i64::try_from(t.to_integer()).unwrap_or(i64::MAX)).collect();
            weighted_unipotent_invariants(&trivial, weights, &target, d, DEFAULT_MAX_DEGREE)?
        } else {
            GradedInvariantSpace {
                degree: d,
                bidegree: None,
                num_vars: weights.len(),
                basis: Vec::new(),
                constraints: vec!["twist times degree is not integral".into()],
            }
        };
        family.push(space);
    }
    Ok(("T".into(), family))
}

pub fn invariants_report(doc: &ActionDocument, max_degree: u32) -> Result<InvariantsReport, CliError> {
    let a = &doc.action;
    let (group, family) = base_family(a, max_degree)?;
    let n = binary_form_degree(a);
    let sl2_family = match n {
        Some(n) => Some(sl2_invariant_family(n, max_degree, DEFAULT_MAX_DEGREE)?),
        None => None,
    };
    let rows = doc
        .points
        .iter()
        .map(|p| {
            Ok(InvariantRow {
                name: p.name.clone(),
                point: p.point.clone(),
                nonvanishing: invariant_nonvanishing_verdict(&family, &p.point),
                sl2_nonvanishing: sl2_family.as_ref().map(|f| invariant_nonvanishing_verdict(f, &p.point)),
                at_infinity: n.map(|n| points_at_infinity_classifier(n, &p.point)).transpose()?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(InvariantsReport {
        command: "invariants",
        action: a.label().to_string(),
        max_degree,
        binary_form_degree: n,
        invariants: InvariantTable::new(group, &family),
        sl2: sl2_family.map(|f| InvariantTable::new("SL(2)", &f)),
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleFile {
    pub file: String,
    pub label: String,
    pub points: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExamplesReport {
    pub command: &'static str,
    pub files: Vec<ExampleFile>,
}
