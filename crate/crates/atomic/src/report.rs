//! Serializable report formats. Derived fields (`max`, `missing`) can be
//! recomputed from the primary data, which is how round trips are checked.

use std::collections::{BTreeMap, BTreeSet};

use atomic_core::affine::{ProbeReport, ShiVector};
use atomic_core::atomiclen::{missing_values, ImageReport};
use atomic_core::perms::PermStats;
use atomic_core::{Error, RootSystem};
use serde::{Deserialize, Serialize};

/// Image of `L_λ` on a finite Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageJson {
    #[serde(rename = "type")]
    pub type_label: String,
    /// Fundamental-weight coordinates of `λ`.
    pub weight: Vec<i64>,
    pub max: u64,
    pub values: Vec<u64>,
    pub missing: Vec<u64>,
    pub orbit_size: u64,
}

impl ImageJson {
    pub fn new(type_label: String, weight: Vec<i64>, report: &ImageReport) -> Self {
        ImageJson {
            type_label,
            weight,
            max: report.max_value,
            values: report.values.clone(),
            missing: report.missing.clone(),
            orbit_size: report.orbit_size,
        }
    }

    /// Copy with `max` and `missing` rebuilt from `values`.
    pub fn recomputed(&self) -> Self {
        let values: BTreeSet<u64> = self.values.iter().copied().collect();
        let max = values.last().copied().unwrap_or(0);
        ImageJson { max, missing: missing_values(&values, max), ..self.clone() }
    }
}

/// Bounded image of `L_λ` on an affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineJson {
    #[serde(rename = "type")]
    pub type_label: String,
    /// Affine fundamental coordinates `m_0, …, m_n`.
    pub weight: Vec<i64>,
    pub radius: u64,
    pub values: Vec<u64>,
    pub missing: Vec<u64>,
    pub orbit_size: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lattice_agrees: Option<bool>,
}

impl AffineJson {
    pub fn new(type_label: String, weight: Vec<i64>, radius: u64, report: &ProbeReport) -> Self {
        AffineJson {
            type_label,
            weight,
            radius,
            values: report.values.clone(),
            missing: report.missing.clone(),
            orbit_size: report.orbit_size,
            lattice_agrees: report.lattice_agrees,
        }
    }

    pub fn recomputed(&self) -> Self {
        let values: BTreeSet<u64> = self.values.iter().copied().collect();
        AffineJson { missing: missing_values(&values, self.radius), ..self.clone() }
    }
}

/// Number of `(n+1)`-cores of each size up to `max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoresJson {
    pub n: usize,
    pub max: usize,
    pub sizes: BTreeMap<usize, u64>,
    pub missing: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cores: Option<BTreeMap<usize, Vec<String>>>,
}

impl CoresJson {
    pub fn recomputed(&self) -> Self {
        let missing = (0..=self.max).filter(|s| !self.sizes.contains_key(s)).collect();
        CoresJson { missing, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct W0Json {
    #[serde(rename = "type")]
    pub type_label: String,
    /// `⟨2ρ, ρ∨⟩`.
    pub value: i64,
    /// `L(w_0)` from the action of `w_0` on `ρ`.
    pub via_w0: i64,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: Vec<i64>,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SusanfeJson {
    #[serde(rename = "type")]
    pub type_label: String,
    /// Labels of `I = {s_2, …, s_n}`.
    pub parabolic: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub special: Option<SpecialJson>,
    /// Every Susanfe reflection with `L(t, I)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reflections: Option<Vec<RootEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialJson {
    pub root: Vec<i64>,
    pub word: Vec<usize>,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub word: Vec<usize>,
    /// Entries grouped by root height, lowest first.
    pub rows: Vec<Vec<RootEntry>>,
    pub admissible: bool,
}

impl ShiJson {
    pub fn new(type_label: String, word: Vec<usize>, fin: &RootSystem, shi: &ShiVector) -> Self {
        let rows = shi
            .rows_by_height(fin)
            .into_iter()
            .map(|row| row.into_iter().map(|(r, k)| RootEntry { root: r.0, value: k }).collect())
            .collect();
        ShiJson { type_label, word, rows, admissible: shi.is_admissible(fin) }
    }

    /// Rows centred under each other, highest root on top.
    pub fn pyramid(&self) -> String {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let pad = 2 * (width - row.len().min(width));
            let cells: Vec<String> = row.iter().map(|e| format!("{:>3}", e.value)).collect();
            out.push_str(&" ".repeat(pad));
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// One row of the permutation statistics table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRow {
    pub one_line: String,
    pub length: usize,
    pub invsum: u64,
    pub ninvsum: u64,
    pub entropy: u64,
    pub cosine: u64,
}

impl From<PermStats> for StatsRow {
    fn from(s: PermStats) -> Self {
        StatsRow {
            one_line: s.one_line,
            length: s.length,
            invsum: s.invsum,
            ninvsum: s.ninvsum,
            entropy: s.entropy,
            cosine: s.cosine,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckJson>,
}

/// Structured message for a computation that hit a configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapErrorJson {
    pub error: String,
    pub kind: String,
    pub message: String,
    pub cap: u64,
    pub hint: String,
}

impl CapErrorJson {
    pub fn from_error(e: &Error) -> Option<Self> {
        let (kind, cap) = match *e {
            Error::SubgroupTooLarge { cap } => ("subgroup_too_large", cap as u64),
            Error::OrbitTooLarge { cap } => ("orbit_too_large", cap as u64),
            Error::SizeTooLarge { cap, .. } => ("size_too_large", cap as u64),
            Error::RadiusTooLarge { cap, .. } => ("radius_too_large", cap),
            _ => return None,
        };
        Some(CapErrorJson {
            error: "cap_exceeded".into(),
            kind: kind.into(),
            message: e.to_string(),
            cap,
            hint: "rerun with --stress to raise the caps".into(),
        })
    }
}
