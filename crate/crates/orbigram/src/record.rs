//! Structured JSON output records.
//!
//! Every float leaves the crate through [`Sig17`], which serializes as a JSON
//! number with 17 significant digits: enough to round-trip any double exactly,
//! and byte-deterministic for a fixed value.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::equivalence::{DistanceKind, GroupTag};
use crate::invariants::NormalizationScheme;
use crate::linalg::MultiplicityBlocks;
use crate::tol::{TOL_EQ, TOL_RANK_REL};

/// A finite double rendered with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig17(pub f64);

impl fmt::Display for Sig17 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.16e}", self.0)
    }
}

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom("non-finite value in output"));
        }
        let number = serde_json::Number::from_str(&format!("{:.16e}", self.0))
            .map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Sig17 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        f64::deserialize(deserializer).map(Sig17)
    }
}

pub fn sig17_vec(values: &[f64]) -> Vec<Sig17> {
    values.iter().copied().map(Sig17).collect()
}

pub fn sig17_matrix(m: &nalgebra::DMatrix<f64>) -> Vec<Vec<Sig17>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| Sig17(m[(i, j)])).collect())
        .collect()
}

/// The tolerances a command actually decided with.
#[derive(Debug, Clone, Serialize)]
pub struct ToleranceReport {
    pub tol_eq: Sig17,
    pub tol_rank: Sig17,
}

impl Default for ToleranceReport {
    fn default() -> Self {
        Self {
            tol_eq: Sig17(TOL_EQ),
            tol_rank: Sig17(TOL_RANK_REL),
        }
    }
}

/// Envelope emitted (one JSON object on stdout) by every subcommand.
#[derive(Debug, Serialize)]
pub struct ResultRecord<T: Serialize> {
    pub command: &'static str,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<NormalizationScheme>,
    pub tolerances: ToleranceReport,
    pub results: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<BTreeMap<&'static str, bool>>,
}

impl<T: Serialize> ResultRecord<T> {
    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }
}

#[derive(Debug, Serialize)]
pub struct BlockOut {
    pub value: Sig17,
    pub multiplicity: usize,
}

pub fn blocks_out(blocks: &MultiplicityBlocks) -> Vec<BlockOut> {
    blocks
        .blocks
        .iter()
        .map(|b| BlockOut {
            value: Sig17(b.value),
            multiplicity: b.multiplicity,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct InvariantResults {
    pub n: usize,
    pub k: usize,
    pub centroid: Vec<Sig17>,
    pub axis_lengths: Vec<Sig17>,
    pub blocks: Vec<BlockOut>,
    pub zero_count: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<Sig17>>>,
}

#[derive(Debug, Serialize)]
pub struct CompareResults {
    pub equivalent: bool,
    pub gram_distance: Sig17,
    pub procrustes_distance: Sig17,
    /// Distance between scale-normalized invariants; similarity group only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized_gram_distance: Option<Sig17>,
}

#[derive(Debug, Serialize)]
pub struct AlignResults {
    pub rotation: Vec<Vec<Sig17>>,
    pub translation: Vec<Sig17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<Sig17>,
    pub proper: bool,
    pub residual: Sig17,
}

#[derive(Debug, Serialize)]
pub struct DistMatrixResults {
    pub metric: DistanceKind,
    pub files: Vec<String>,
    pub matrix: Vec<Vec<Sig17>>,
}

#[derive(Debug, Serialize)]
pub struct GenResults {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub transform: String,
    pub noise: Sig17,
    pub files: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PropertyOut {
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
}

#[derive(Debug, Serialize)]
pub struct SelftestResults {
    pub trials: usize,
    pub seed: u64,
    pub properties: Vec<PropertyOut>,
    pub all_passed: bool,
}

/// Ground-truth transform written next to generated fixture pairs.
#[derive(Debug, Serialize, Deserialize)]
pub struct TransformFile {
    pub rotation: Vec<Vec<Sig17>>,
    pub translation: Vec<Sig17>,
    pub scale: Sig17,
    pub proper: bool,
    pub noise: Sig17,
}
