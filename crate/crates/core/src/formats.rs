//! JSON documents for fans, complexes, realizations and reports.
//!
//! Every document carries `schema_version`. Integers are written as decimal
//! strings and rationals as `"p/q"` (or `"p"`), so no value is limited to 64
//! bits.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::certify::{CertError, Realization};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::fan::{Fan, FanError};
use crate::linalg::{IntVector, RatVector};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    SchemaVersion(u32),
    #[error("not an integer: {0:?}")]
    BadInteger(String),
    #[error("not a rational: {0:?}")]
    BadRational(String),
    #[error("vector of length {found} for {label:?}, expected {expected}")]
    BadLength { label: String, expected: usize, found: usize },
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cert(#[from] CertError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl Metadata {
    pub fn named(name: &str, provenance: &str) -> Self {
        Self { name: Some(name.into()), provenance: Some(provenance.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayEntry {
    pub label: String,
    pub vector: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Ray labels; the order fixes the determinant sign.
    pub rays: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDocument {
    pub schema_version: u32,
    pub ambient_dim: usize,
    pub rays: Vec<RayEntry>,
    pub max_cones: Vec<ConeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl FanDocument {
    pub fn from_fan(fan: &Fan, metadata: Option<Metadata>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            ambient_dim: fan.ambient_dim(),
            rays: fan
                .rays()
                .iter()
                .map(|r| RayEntry {
                    label: r.label.clone(),
                    vector: r.vector.entries().iter().map(BigInt::to_string).collect(),
                })
                .collect(),
            max_cones: (0..fan.cones().len())
                .map(|i| ConeEntry {
                    name: fan.cones()[i].name.clone(),
                    rays: fan.cone_labels(i).into_iter().map(str::to_string).collect(),
                })
                .collect(),
            metadata,
        }
    }

    pub fn to_fan(&self) -> Result<Fan, FormatError> {
        check_version(self.schema_version)?;
        let rays = self
            .rays
            .iter()
            .map(|r| {
                if r.vector.len() != self.ambient_dim {
                    return Err(FormatError::BadLength {
                        label: r.label.clone(),
                        expected: self.ambient_dim,
                        found: r.vector.len(),
                    });
                }
                Ok((r.label.clone(), parse_int_vector(&r.vector)?))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let cones = self.max_cones.iter().map(|c| (c.name.clone(), c.rays.clone())).collect();
        Ok(Fan::from_labels(self.ambient_dim, rays, cones)?)
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical serialization: pretty JSON with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fan documents serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema_version: u32,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl ComplexDocument {
    pub fn from_complex(c: &SimplicialComplex, metadata: Option<Metadata>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            vertices: c.labels().to_vec(),
            facets: (0..c.facets().len())
                .map(|i| c.facet_labels(i).into_iter().map(str::to_string).collect())
                .collect(),
            metadata,
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, FormatError> {
        check_version(self.schema_version)?;
        let index: BTreeMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| index.get(l.as_str()).copied().ok_or_else(|| ComplexError::MissingLabel(l.clone())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SimplicialComplex::new(self.vertices.clone(), facets)?)
    }

    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("complex documents serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDocument {
    pub schema_version: u32,
    /// Vertex label to coordinates as `"p/q"` strings.
    pub coordinates: BTreeMap<String, Vec<String>>,
}

impl RealizationDocument {
    pub fn from_realization(r: &Realization) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            coordinates: r
                .coords
                .iter()
                .map(|(l, v)| (l.clone(), v.entries().iter().map(BigRational::to_string).collect()))
                .collect(),
        }
    }

    pub fn to_realization(&self) -> Result<Realization, FormatError> {
        check_version(self.schema_version)?;
        let coords = self
            .coordinates
            .iter()
            .map(|(l, v)| Ok((l.clone(), parse_rat_vector(v)?)))
            .collect::<Result<BTreeMap<_, _>, FormatError>>()?;
        Ok(Realization::new(coords)?)
    }

    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("realization documents serialize");
        s.push('\n');
        s
    }
}

/// One named result block of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportSection {
    pub name: String,
    pub passed: bool,
    pub details: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    /// SHA-256 over the input documents, in argument order.
    pub inputs_digest: String,
    pub sections: Vec<ReportSection>,
    pub verdict: bool,
    pub timing_ms: u64,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: &[&[u8]]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs_digest: digest(inputs),
            sections: Vec::new(),
            verdict: true,
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, name: &str, passed: bool, details: serde_json::Value) {
        self.sections.push(ReportSection { name: name.into(), passed, details });
        self.verdict = self.sections.iter().all(|s| s.passed);
    }

    pub fn section(&self, name: &str) -> Option<&ReportSection> {
        self.sections.iter().find(|s| s.name == name)
    }
}

pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.len() as u64).to_le_bytes());
        h.update(i);
    }
    hex::encode(h.finalize())
}

fn check_version(v: u32) -> Result<(), FormatError> {
    if v != SCHEMA_VERSION {
        return Err(FormatError::SchemaVersion(v));
    }
    Ok(())
}

pub fn parse_int(s: &str) -> Result<BigInt, FormatError> {
    BigInt::from_str(s.trim()).map_err(|_| FormatError::BadInteger(s.to_string()))
}

pub fn parse_int_vector(v: &[String]) -> Result<IntVector, FormatError> {
    let entries = v.iter().map(|s| parse_int(s)).collect::<Result<Vec<_>, _>>()?;
    IntVector::new(entries).map_err(|_| FormatError::BadInteger(String::new()))
}

pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let t = s.trim();
    let bad = || FormatError::BadRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

pub fn parse_rat_vector(v: &[String]) -> Result<RatVector, FormatError> {
    let entries = v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    RatVector::new(entries).map_err(|_| FormatError::BadRational(String::new()))
}

/// Parses `"1,-2,0,3"` into an integer vector.
pub fn parse_int_list(s: &str) -> Result<IntVector, FormatError> {
    let parts: Vec<String> = s.split(',').map(str::to_string).collect();
    parse_int_vector(&parts)
}
