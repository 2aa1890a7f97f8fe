//! JSON action documents. All rationals are "p/q" strings; integer weights are
//! JSON numbers. Serialisation is canonical so documents round-trip bit-exactly.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{GradingData, ProjectivePoint, TorusWeights, UnipotentData, WeightedAction};
use crate::error::Error;
use crate::exact::rational::{self, Rational};
use crate::exact::RatMatrix;

/// A named point of the document's test panel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPoint {
    pub name: String,
    pub point: ProjectivePoint,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product_m: Option<u64>,
}

impl Bounds {
    fn is_empty(&self) -> bool {
        self.max_degree.is_none() && self.product_m.is_none()
    }
}

/// An action together with its point panel and computation bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionDocument {
    pub action: WeightedAction,
    pub points: Vec<NamedPoint>,
    pub bounds: Bounds,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTorus {
    rank: usize,
    weights: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rat_vec")]
    twist: Option<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrading {
    gm_weights: Vec<i64>,
    #[serde(with = "rational::serde_text")]
    chi: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawUnipotent {
    generators: Vec<Vec<Vec<String>>>,
    adjoint_weights: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    name: String,
    #[serde(with = "rational::serde_text_vec")]
    coords: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    label: String,
    n: usize,
    torus: RawTorus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grading: Option<RawGrading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unipotent: Option<RawUnipotent>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    points: Vec<RawPoint>,
    #[serde(default, skip_serializing_if = "Bounds::is_empty")]
    bounds: Bounds,
}

mod opt_rat_vec {
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

fn matrix_from_raw(j: usize, raw: &[Vec<String>], dim: usize) -> Result<RatMatrix, Error> {
    if raw.len() != dim {
        return Err(Error::DimensionMismatch {
            what: format!("unipotent generator {j} rows"),
            expected: dim,
            found: raw.len(),
        });
    }
    let mut rows = Vec::with_capacity(dim);
    for row in raw {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                what: format!("unipotent generator {j} columns"),
                expected: dim,
                found: row.len(),
            });
        }
        rows.push(row.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(RatMatrix::from_rows(rows))
}

fn matrix_to_raw(m: &RatMatrix) -> Vec<Vec<String>> {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(rational::to_text).collect())
        .collect()
}

impl RawDocument {
    fn into_document(self) -> Result<ActionDocument, Error> {
        let dim = self.n + 1;
        if self.torus.weights.len() != dim {
            return Err(Error::DimensionMismatch {
                what: "torus weights".into(),
                expected: dim,
                found: self.torus.weights.len(),
            });
        }
        let torus = TorusWeights::new(self.torus.rank, self.torus.weights)?;
        let twist = self
            .torus
            .twist
            .unwrap_or_else(|| vec![Rational::zero(); torus.rank()]);
        let grading = self.grading.map(|g| GradingData::new(g.gm_weights, g.chi));
        let unipotent = match self.unipotent {
            None => None,
            Some(u) => {
                let gens = u
                    .generators
                    .iter()
                    .enumerate()
                    .map(|(j, g)| matrix_from_raw(j, g, dim))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(UnipotentData::new(gens, u.adjoint_weights)?)
            }
        };
        let action = WeightedAction::new(self.label, torus, twist, grading, unipotent)?;
        let points = self
            .points
            .into_iter()
            .map(|p| {
                if p.coords.len() != dim {
                    return Err(Error::DimensionMismatch {
                        what: format!("coordinates of point {:?}", p.name),
                        expected: dim,
                        found: p.coords.len(),
                    });
                }
                let point = ProjectivePoint::new(p.coords)
                    .map_err(|_| Error::MalformedDocument(format!("point {:?} is all zero", p.name)))?;
                Ok(NamedPoint { name: p.name, point })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(ActionDocument {
            action,
            points,
            bounds: self.bounds,
        })
    }

    fn from_document(doc: &ActionDocument) -> Self {
        let a = &doc.action;
        let twist = a.torus_twist();
        RawDocument {
            label: a.label().to_string(),
            n: a.n(),
            torus: RawTorus {
                rank: a.torus().rank(),
                weights: a.torus().weights().to_vec(),
                twist: (!twist.iter().all(Zero::is_zero)).then(|| twist.to_vec()),
            },
            grading: a.grading().map(|g| RawGrading {
                gm_weights: g.weights().to_vec(),
                chi: g.chi().clone(),
            }),
            unipotent: a.unipotent().map(|u| RawUnipotent {
                generators: u.generators().iter().map(matrix_to_raw).collect(),
                adjoint_weights: u.adjoint_weights().to_vec(),
            }),
            points: doc
                .points
                .iter()
                .map(|p| RawPoint {
                    name: p.name.clone(),
                    coords: p.point.coords().to_vec(),
                })
                .collect(),
            bounds: doc.bounds.clone(),
        }
    }
}

/// Parses and fully validates an action document.
pub fn parse_document(text: &str) -> Result<ActionDocument, Error> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    raw.into_document()
}

/// Parses a document and returns only its action.
pub fn parse_action(text: &str) -> Result<WeightedAction, Error> {
    parse_document(text).map(|d| d.action)
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn serialize_document(doc: &ActionDocument) -> String {
    let mut s = serde_json::to_string_pretty(&RawDocument::from_document(doc))
        .expect("document serialisation cannot fail");
    s.push('\n');
    s
}

pub fn serialize_action(action: &WeightedAction) -> String {
    serialize_document(&ActionDocument {
        action: action.clone(),
        points: Vec::new(),
        bounds: Bounds::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{aut_p112_example, jet_group_example, jordan_embed_ga};

    #[test]
    fn parses_plain_gm_action() {
        let doc = r#"{"label": "Gm on P2", "n": 2,
            "torus": {"rank": 1, "weights": [[0], [1], [2]]},
            "grading": {"gm_weights": [0, 1, 2], "chi": "1/2"}}"#;
        let a = parse_action(doc).unwrap();
        assert_eq!(a.torus().rank(), 1);
        assert!(a.unipotent().is_none());
        assert_eq!(a.grading().unwrap().chi(), &rational::frac(1, 2));
    }

    #[test]
    fn accepts_binary_cubics() {
        let doc = r#"{"label": "cubics", "n": 3,
            "torus": {"rank": 1, "weights": [[3], [1], [-1], [-3]]},
            "grading": {"gm_weights": [3, 1, -1, -3], "chi": "-2"},
            "unipotent": {"generators": [[["0","1","0","0"],["0","0","2","0"],["0","0","0","3"],["0","0","0","0"]]],
                          "adjoint_weights": [2]}}"#;
        let a = parse_action(doc).unwrap();
        assert_eq!(a, jordan_embed_ga(&[3]).with_chi(rational::int(-2)).unwrap().relabel("cubics"));
    }

    #[test]
    fn rejects_bad_documents() {
        let not_nil = r#"{"label": "x", "n": 1, "torus": {"rank": 1, "weights": [[1], [-1]]},
            "unipotent": {"generators": [[["1","0"],["0","0"]]], "adjoint_weights": [2]}}"#;
        assert_eq!(parse_action(not_nil), Err(Error::NotNilpotent { generator: 0 }));

        let dims = r#"{"label": "x", "n": 2, "torus": {"rank": 1, "weights": [[1], [-1]]}}"#;
        assert!(matches!(parse_action(dims), Err(Error::DimensionMismatch { .. })));

        let neg = r#"{"label": "x", "n": 1, "torus": {"rank": 1, "weights": [[1], [-1]]},
            "unipotent": {"generators": [[["0","1"],["0","0"]]], "adjoint_weights": [-2]}}"#;
        assert!(matches!(parse_action(neg), Err(Error::NonPositiveGradingWeight { .. })));

        let comm = r#"{"label": "x", "n": 1, "torus": {"rank": 1, "weights": [[1], [-1]]},
            "grading": {"gm_weights": [1, -1], "chi": "0"},
            "unipotent": {"generators": [[["0","1"],["0","0"]]], "adjoint_weights": [3]}}"#;
        assert_eq!(parse_action(comm), Err(Error::GradingCommutationFailure { generator: 0 }));

        assert!(matches!(parse_action("{"), Err(Error::MalformedDocument(_))));
        let extra = r#"{"label": "x", "n": 0, "torus": {"rank": 1, "weights": [[0]]}, "bogus": 1}"#;
        assert!(matches!(parse_action(extra), Err(Error::MalformedDocument(_))));
    }

    #[test]
    fn builtins_round_trip() {
        for a in [
            jordan_embed_ga(&[3]),
            jordan_embed_ga(&[1, 2]),
            aut_p112_example(),
            jet_group_example(3),
        ] {
            let text = serialize_action(&a);
            assert_eq!(parse_action(&text).unwrap(), a);
            assert_eq!(serialize_action(&parse_action(&text).unwrap()), text);
        }
    }
}
