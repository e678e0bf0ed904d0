//! JSON point and trace files.
//!
//! Coordinates and parameters are always strings in canonical rational form,
//! never JSON numbers. Serialization is canonical: parsing a file this module
//! wrote and writing it again reproduces the same bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construction::{InsertionRecord, OrdinaryPair};
use crate::geometry::Point;
use crate::pointset::{PointSet, PointSetError};
use crate::rational::{Rational, RationalParseError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Rational {
        path: String,
        source: RationalParseError,
    },
    #[error("unsupported format_version {0}, expected {FORMAT_VERSION}")]
    Version(u32),
    #[error("invalid point set: {0}")]
    Points(#[from] PointSetError),
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFile {
    pub points: Vec<Point>,
    pub metadata: Option<Metadata>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    x: String,
    y: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPointFile {
    format_version: u32,
    points: Vec<RawPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
}

fn parse_rational(text: &str, path: impl FnOnce() -> String) -> Result<Rational, FormatError> {
    text.parse().map_err(|source| FormatError::Rational { path: path(), source })
}

fn parse_point(raw: &RawPoint, path: &str) -> Result<Point, FormatError> {
    Ok(Point {
        x: parse_rational(&raw.x, || format!("{path}.x"))?,
        y: parse_rational(&raw.y, || format!("{path}.y"))?,
    })
}

fn raw_point(p: &Point) -> RawPoint {
    RawPoint {
        x: p.x.to_string(),
        y: p.y.to_string(),
    }
}

fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

impl PointFile {
    pub fn new(points: Vec<Point>) -> Self {
        PointFile {
            points,
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: Metadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let raw: RawPointFile = serde_json::from_str(text)?;
        if raw.format_version != FORMAT_VERSION {
            return Err(FormatError::Version(raw.format_version));
        }
        let points = raw
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| parse_point(p, &format!("points[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PointFile {
            points,
            metadata: raw.metadata,
        })
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(&RawPointFile {
            format_version: FORMAT_VERSION,
            points: self.points.iter().map(raw_point).collect(),
            metadata: self.metadata.clone(),
        })
    }

    /// The points as a validated set (pairwise distinct).
    pub fn point_set(&self) -> Result<PointSet, FormatError> {
        Ok(PointSet::new(self.points.clone())?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    n: usize,
    i: usize,
    j: usize,
    excluded_count: usize,
    t: String,
    point: RawPoint,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTraceFile {
    format_version: u32,
    records: Vec<RawRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFile {
    pub records: Vec<InsertionRecord>,
}

impl TraceFile {
    pub fn new(records: Vec<InsertionRecord>) -> Self {
        TraceFile { records }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let raw: RawTraceFile = serde_json::from_str(text)?;
        if raw.format_version != FORMAT_VERSION {
            return Err(FormatError::Version(raw.format_version));
        }
        let mut records = Vec::with_capacity(raw.records.len());
        for (pos, r) in raw.records.iter().enumerate() {
            let path = format!("records[{pos}]");
            if r.n != pos + 4 {
                return Err(FormatError::Field {
                    path: format!("{path}.n"),
                    message: format!("expected {}, found {}", pos + 4, r.n),
                });
            }
            if !(1 <= r.i && r.i < r.j && r.j < r.n) {
                return Err(FormatError::Field {
                    path: format!("{path}.i"),
                    message: format!("pair ({}, {}) must satisfy 1 <= i < j < n = {}", r.i, r.j, r.n),
                });
            }
            let t = parse_rational(&r.t, || format!("{path}.t"))?;
            if !t.is_positive() || t >= Rational::one() {
                return Err(FormatError::Field {
                    path: format!("{path}.t"),
                    message: format!("{t} is outside (0, 1)"),
                });
            }
            records.push(InsertionRecord {
                n: r.n,
                pair: OrdinaryPair::new(r.i, r.j),
                excluded_count: r.excluded_count,
                t,
                point: parse_point(&r.point, &format!("{path}.point"))?,
            });
        }
        Ok(TraceFile { records })
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(&RawTraceFile {
            format_version: FORMAT_VERSION,
            records: self
                .records
                .iter()
                .map(|r| RawRecord {
                    n: r.n,
                    i: r.pair.i,
                    j: r.pair.j,
                    excluded_count: r.excluded_count,
                    t: r.t.to_string(),
                    point: raw_point(&r.point),
                })
                .collect(),
        })
    }
}
