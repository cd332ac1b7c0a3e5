//! Reference tables and their comparison with the enumeration. Both sides
//! are compared through canonical forms.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gkcheck::CertifyConfig;
use crate::weights::{derive_params, WeightVector};

use super::{canonical_params, enumerate_components, ComponentDescriptor};

const COR48_D2: &str = include_str!("../../tables/cor48_d2.txt");
const COR48_D3: &str = include_str!("../../tables/cor48_d3.txt");
const COR411: &str = include_str!("../../tables/cor411.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableId {
    #[serde(rename = "cor48_d2")]
    Cor48D2,
    #[serde(rename = "cor48_d3")]
    Cor48D3,
    #[serde(rename = "cor410")]
    Cor410,
    #[serde(rename = "cor411")]
    Cor411,
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cor48_d2" => Ok(TableId::Cor48D2),
            "cor48_d3" => Ok(TableId::Cor48D3),
            "cor410" => Ok(TableId::Cor410),
            "cor411" => Ok(TableId::Cor411),
            _ => Err(Error::Parse(format!("unknown table {s:?}"))),
        }
    }
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TableId::Cor48D2 => "cor48_d2",
            TableId::Cor48D3 => "cor48_d3",
            TableId::Cor410 => "cor410",
            TableId::Cor411 => "cor411",
        })
    }
}

impl TableId {
    /// `(n, d)` of the enumeration the table is compared with; the
    /// parametric table takes `d` from the caller.
    pub fn shape(self, d: i64) -> (usize, i64) {
        match self {
            TableId::Cor48D2 => (3, 2),
            TableId::Cor48D3 => (3, 3),
            TableId::Cor410 => (3, d),
            TableId::Cor411 => (4, 2),
        }
    }

    /// Rows as printed (not canonicalized).
    pub fn rows(self, d: i64) -> Result<Vec<(Vec<i64>, i64)>> {
        match self {
            TableId::Cor48D2 => parse_table(COR48_D2),
            TableId::Cor48D3 => parse_table(COR48_D3),
            TableId::Cor411 => parse_table(COR411),
            TableId::Cor410 => Ok(parametric_rows(d)),
        }
    }
}

/// Whitespace-separated integers per line, `λ` last; `#` starts a comment.
pub fn parse_table(text: &str) -> Result<Vec<(Vec<i64>, i64)>> {
    let mut rows = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
        if nums.len() < 4 {
            return Err(Error::Parse(format!("line {}: expected weights and λ", no + 1)));
        }
        let (w, l) = nums.split_at(nums.len() - 1);
        rows.push((w.to_vec(), l[0]));
    }
    Ok(rows)
}

/// The seven families in `d` for three weights.
pub fn parametric_rows(d: i64) -> Vec<(Vec<i64>, i64)> {
    let d2 = d * d;
    vec![
        (vec![d2 + d + 1, d + 1, 1], -1),
        (vec![d2 + d + 1, d + 1, d], d2),
        (vec![d2 + d, 2 * d + 1, d], d2),
        (vec![d2, d + 1, d], d2),
        (vec![d2, d, 1], 0),
        (vec![d2, d, d - 1], d2 - d),
        (vec![d2 - 1, d, d - 1], d2 - d),
    ]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableReport {
    pub table: TableId,
    pub n: usize,
    pub d: i64,
    /// Canonical forms of the table rows, as `p q r [s] λ`.
    pub expected: Vec<String>,
    pub matched: usize,
    pub missing: Vec<String>,
    /// Enumerated components absent from the table; not counted against
    /// the parametric table, which lists only some families.
    pub extra: Vec<String>,
    pub uncertified: Vec<String>,
    pub components: Vec<ComponentDescriptor>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
            && self.uncertified.is_empty()
            && (self.table == TableId::Cor410 || self.extra.is_empty())
    }
}

fn line(w: &WeightVector, l: i64) -> String {
    let mut s: Vec<String> = w.as_slice().iter().map(|x| x.to_string()).collect();
    s.push(l.to_string());
    s.join(" ")
}

pub fn verify_table(
    table: TableId,
    d: i64,
    certify: Option<&CertifyConfig>,
) -> Result<TableReport> {
    let (n, d) = table.shape(d);
    let mut expected = BTreeSet::new();
    for (w, l) in table.rows(d)? {
        let ps = derive_params(&WeightVector::new(w)?, l, d)?;
        let c = canonical_params(&ps);
        expected.insert(line(&c.weights, c.lambda));
    }
    let components = enumerate_components(n, d, certify)?;
    let found: BTreeSet<String> = components.iter().map(|c| c.table_line()).collect();
    let uncertified = if certify.is_some() {
        components
            .iter()
            .filter(|c| expected.contains(&c.table_line()) && !c.is_certified())
            .map(|c| c.table_line())
            .collect()
    } else {
        Vec::new()
    };
    Ok(TableReport {
        table,
        n,
        d,
        matched: expected.intersection(&found).count(),
        missing: expected.difference(&found).cloned().collect(),
        extra: found.difference(&expected).cloned().collect(),
        expected: expected.into_iter().collect(),
        uncertified,
        components,
    })
}
