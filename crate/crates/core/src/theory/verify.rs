use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{gcd_with_det, lcpd_with_det, predicted_mincol, prime_factors, Prediction, Verdict};
use crate::coloring::{min_palette_diagram, prime_search_size, ColoringError};
use crate::diagram::{Diagram, LinkTableEntry};
use crate::intlinalg::link_determinant;

pub(crate) const HYPOTHESIS: &str =
    "predictions are conditioned on det != 0, standing in for non-splitness";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordStatus {
    Consistent,
    Inconsistent,
    /// The computed value respects the lower bound but does not reach the
    /// predicted exact value on this diagram.
    BoundOnly,
    /// The search was too large; only the prediction is recorded.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub r: u64,
    pub lcpd: u64,
    pub prediction: Option<Prediction>,
    /// Least palette size over non-trivial r-colorings of this diagram.
    pub min_palette: Option<u64>,
    pub status: RecordStatus,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub link: String,
    #[serde(with = "crate::json::big_uint")]
    pub det: BigUint,
    /// `Some(false)` when the bundled determinant disagrees with the
    /// computed one.
    pub det_matches_table: Option<bool>,
    pub hypothesis: String,
    pub skipped_reason: Option<String>,
    pub records: Vec<VerifyRecord>,
}

impl VerifyReport {
    pub fn is_consistent(&self) -> bool {
        self.det_matches_table != Some(false)
            && self
                .records
                .iter()
                .all(|r| r.status != RecordStatus::Inconsistent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest number of orbit representatives to scan per record.
    pub max_search: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_search: 1 << 22,
        }
    }
}

fn search_size(d: &Diagram, r: u64, det: &BigUint) -> Result<u128, ColoringError> {
    prime_factors(gcd_with_det(r, det))
        .into_iter()
        .try_fold(0u128, |acc, p| {
            Ok(acc.saturating_add(prime_search_size(d, p)?))
        })
}

fn judge(verdict: Verdict, n: Option<u64>) -> (RecordStatus, String) {
    use RecordStatus::*;
    match (verdict, n) {
        (Verdict::NoNontrivial, None) => (Consistent, "only trivial colorings".into()),
        (Verdict::NoNontrivial, Some(n)) => (
            Inconsistent,
            format!("found a non-trivial coloring with {n} colors"),
        ),
        (_, None) => (Inconsistent, "no non-trivial coloring found".into()),
        (Verdict::Exact(e), Some(n)) if n < e as u64 => (
            Inconsistent,
            format!("{n} colors is below the exact value {e}"),
        ),
        (Verdict::Exact(e), Some(n)) if n == e as u64 => (Consistent, format!("equals {e}")),
        (Verdict::Exact(e @ (2 | 3)), Some(n)) => (
            Inconsistent,
            format!("{n} colors, but a {e}-color lift always exists"),
        ),
        (Verdict::Exact(e), Some(n)) => (
            BoundOnly,
            format!("{n} >= {e}; reaching {e} needs other diagrams of the link"),
        ),
        (Verdict::AtLeast(b), Some(n)) if n < b as u64 => {
            (Inconsistent, format!("{n} colors is below the bound {b}"))
        }
        (Verdict::AtLeast(b), Some(n)) => (Consistent, format!("{n} >= {b}")),
    }
}

/// [`verify_link_with`] under default options.
pub fn verify_link(entry: &LinkTableEntry, r_values: &[u64]) -> VerifyReport {
    verify_link_with(entry, r_values, VerifyOptions::default())
}

/// Checks the per-diagram palette minimum of `entry` against the predicted
/// minimum number of colors for every modulus in `r_values`. Moduli are
/// reported in increasing order; values below 2 are ignored.
pub fn verify_link_with(
    entry: &LinkTableEntry,
    r_values: &[u64],
    opts: VerifyOptions,
) -> VerifyReport {
    let d = &entry.diagram;
    let det = link_determinant(&d.coloring_matrix()).expect("coloring matrices have zero row sums");
    let det_matches_table = entry.expected_det.map(|e| BigUint::from(e) == det);
    let mut rs: Vec<u64> = r_values.iter().copied().filter(|&r| r >= 2).collect();
    rs.sort_unstable();
    rs.dedup();

    let mut report = VerifyReport {
        link: d.name().to_string(),
        det: det.clone(),
        det_matches_table,
        hypothesis: HYPOTHESIS.to_string(),
        skipped_reason: None,
        records: Vec::new(),
    };
    if det.is_zero() {
        report.skipped_reason = Some("null determinant; outside the prediction's scope".into());
        return report;
    }

    for r in rs {
        let prediction = predicted_mincol(r, &det).expect("r >= 2 and det != 0");
        let lcpd = lcpd_with_det(r, &det);
        let record = match search_size(d, r, &det) {
            Ok(size) if size <= opts.max_search => {
                let n = min_palette_diagram(d, r)
                    .expect("search inputs already validated")
                    .map(|n| n as u64);
                let (status, note) = judge(prediction.verdict, n);
                VerifyRecord {
                    r,
                    lcpd,
                    prediction: Some(prediction),
                    min_palette: n,
                    status,
                    note,
                }
            }
            Ok(size) => VerifyRecord {
                r,
                lcpd,
                prediction: Some(prediction),
                min_palette: None,
                status: RecordStatus::Skipped,
                note: format!("search over {size} representatives exceeds the limit"),
            },
            Err(e) => VerifyRecord {
                r,
                lcpd,
                prediction: Some(prediction),
                min_palette: None,
                status: RecordStatus::Skipped,
                note: e.to_string(),
            },
        };
        report.records.push(record);
    }
    report
}
