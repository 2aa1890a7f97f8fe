//! Batch jobs over action documents. Each command builds a typed report that
//! renders as canonical JSON or as plain text.

pub mod corpus;
mod reports;
mod text;

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use nrgit_core::exact::rational::{self, Rational};
use nrgit_core::{parse_document, ActionDocument, Error, ErrorKind, NamedPoint, ProjectivePoint};

pub use reports::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Stability,
    Chamber,
    Strata,
    Graded,
    Hatstable,
    Invariants,
    Examples,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Stability => "stability",
            Command::Chamber => "chamber",
            Command::Strata => "strata",
            Command::Graded => "graded",
            Command::Hatstable => "hatstable",
            Command::Invariants => "invariants",
            Command::Examples => "examples",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: Command,
    pub action: Option<PathBuf>,
    /// A JSON file of `[{name, coords}]`, or inline `name=1,2,3;4,5,6`.
    pub points: Option<String>,
    pub chi: Option<String>,
    pub q: Option<String>,
    pub m: Option<u64>,
    pub max_degree: Option<u32>,
    pub subset_cap: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            action: None,
            points: None,
            chi: None,
            q: None,
            m: None,
            max_degree: None,
            subset_cap: nrgit_core::torus::DEFAULT_SUBSET_CAP,
            seed: 0,
            format: Format::Json,
            out: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    Parse,
    Precondition,
    Bound,
    Io,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: FailureKind,
    pub message: String,
}

impl CliError {
    fn new(kind: FailureKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(FailureKind::Parse, message)
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self::new(FailureKind::Precondition, message)
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Self::new(FailureKind::Io, format!("{}: {e}", path.display()))
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            FailureKind::Parse => 2,
            FailureKind::Precondition => 3,
            FailureKind::Bound => 4,
            FailureKind::Io => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e.kind() {
            ErrorKind::Parse => FailureKind::Parse,
            ErrorKind::Precondition => FailureKind::Precondition,
            ErrorKind::Bound => FailureKind::Bound,
        };
        Self::new(kind, e.to_string())
    }
}

/// Errors met while reading inputs are parse failures whatever their core kind.
fn input(e: Error) -> CliError {
    CliError::parse(e.to_string())
}

pub fn load_document(path: &Path) -> Result<ActionDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_document(&text).map_err(input)
}

fn parse_coords(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|c| rational::parse(c.trim()).map_err(input))
        .collect()
}

fn point_of(name: String, coords: Vec<Rational>, len: usize) -> Result<NamedPoint, CliError> {
    if coords.len() != len {
        return Err(CliError::parse(format!(
            "point {name:?} has {} coordinates, expected {len}",
            coords.len()
        )));
    }
    let point = ProjectivePoint::new(coords).map_err(|_| CliError::parse(format!("point {name:?} is all zero")))?;
    Ok(NamedPoint { name, point })
}

fn json_coord(v: &serde_json::Value) -> Result<Rational, CliError> {
    match v {
        serde_json::Value::String(s) => rational::parse(s).map_err(input),
        serde_json::Value::Number(n) => rational::parse(&n.to_string()).map_err(input),
        other => Err(CliError::parse(format!("bad coordinate {other}"))),
    }
}

/// Reads `--points`: an existing file holding `[{name, coords}]`, otherwise an
/// inline list `name=1,2,3;4,5,6` where unnamed points become `p0`, `p1`, ….
pub fn load_points(arg: &str, len: usize) -> Result<Vec<NamedPoint>, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
        let items = value
            .as_array()
            .ok_or_else(|| CliError::parse("points file must hold a JSON array"))?;
        return items
            .iter()
            .enumerate()
            .map(|(i, item)| {
                let name = item
                    .get("name")
                    .and_then(|n| n.as_str())
                    .map_or_else(|| format!("p{i}"), str::to_string);
                let coords = item
                    .get("coords")
                    .and_then(|c| c.as_array())
                    .ok_or_else(|| CliError::parse(format!("point {name:?} lacks a coords array")))?
                    .iter()
                    .map(json_coord)
                    .collect::<Result<Vec<_>, _>>()?;
                point_of(name, coords, len)
            })
            .collect();
    }
    arg.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(i, item)| {
            let (name, coords) = match item.split_once('=') {
                Some((n, c)) => (n.trim().to_string(), c),
                None => (format!("p{i}"), item),
            };
            point_of(name, parse_coords(coords)?, len)
        })
        .collect()
}

/// The document named by the job with its `--chi` and `--points` overrides applied.
pub fn resolve_document(job: &JobSpec) -> Result<ActionDocument, CliError> {
    let path = job
        .action
        .as_deref()
        .ok_or_else(|| CliError::precondition(format!("{} needs --action", job.command.name())))?;
    let mut doc = load_document(path)?;
    if let Some(chi) = &job.chi {
        let chi = rational::parse(chi).map_err(input)?;
        doc.action = doc.action.with_chi(chi)?;
    }
    if let Some(arg) = &job.points {
        doc.points = load_points(arg, doc.action.n() + 1)?;
    }
    Ok(doc)
}

/// Runs one job and returns its rendered output. JSON output carries no timing
/// and is byte-identical across runs with the same inputs and seed.
pub fn run(job: &JobSpec) -> Result<String, CliError> {
    let start = Instant::now();
    let report = match job.command {
        Command::Examples => Report::Examples(write_examples(job)?),
        cmd => {
            let doc = resolve_document(job)?;
            match cmd {
                Command::Stability => Report::Stability(stability_report(&doc)?),
                Command::Chamber => Report::Chamber(chamber_report(&doc)?),
                Command::Strata => Report::Strata(strata_report(&doc, job.subset_cap)?),
                Command::Graded => Report::Graded(graded_report(&doc, job.seed)?),
                Command::Hatstable => {
                    let q = match &job.q {
                        Some(q) => rational::parse(q).map_err(input)?,
                        None => return Err(CliError::precondition("hatstable needs --q")),
                    };
                    Report::Hatstable(hatstable_report(&doc, &q, job.m)?)
                }
                Command::Invariants => {
                    let d = job.max_degree.or(doc.bounds.max_degree).unwrap_or(4);
                    Report::Invariants(invariants_report(&doc, d)?)
                }
                Command::Examples => unreachable!(),
            }
        }
    };
    Ok(match job.format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut s = text::render(&report);
            s.push_str(&format!("elapsed: {:.3} s\n", start.elapsed().as_secs_f64()));
            s
        }
    })
}

fn write_examples(job: &JobSpec) -> Result<ExamplesReport, CliError> {
    let dir = job
        .out
        .as_deref()
        .ok_or_else(|| CliError::precondition("examples needs --out DIR"))?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for (name, doc) in corpus::builtin_documents() {
        let path = dir.join(name);
        std::fs::write(&path, nrgit_core::serialize_document(&doc)).map_err(|e| CliError::io(&path, e))?;
        files.push(ExampleFile {
            file: name.to_string(),
            label: doc.action.label().to_string(),
            points: doc.points.len(),
        });
    }
    Ok(ExamplesReport {
        command: "examples",
        files,
    })
}
