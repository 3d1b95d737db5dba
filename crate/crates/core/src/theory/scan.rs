use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{lcpd_with_det, predicted_mincol, TheoryError};
use crate::coloring::min_palette_diagram;
use crate::diagram::LinkTableEntry;
use crate::intlinalg::link_determinant;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanMember {
    pub link: String,
    pub r: u64,
    pub min_palette: Option<u64>,
}

/// All (link, r) pairs sharing one value of `lcpd(r, det)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanGroup {
    pub lcpd: u64,
    /// Lower bound from the prediction; `None` for the coprime group.
    pub lower_bound: Option<u32>,
    /// Least per-diagram minimum seen in the group, an upper bound on the
    /// group's minimum number of colors.
    pub best_upper: Option<u64>,
    pub members: Vec<ScanMember>,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub r_max: u64,
    pub groups: Vec<ScanGroup>,
    pub note: String,
}

impl ScanReport {
    pub fn flags(&self) -> impl Iterator<Item = &str> {
        self.groups
            .iter()
            .flat_map(|g| g.flags.iter().map(String::as_str))
    }
}

/// Groups the per-diagram minima over `2 <= r <= r_max` by `lcpd(r, det)`
/// and flags groups whose bounds are already in tension: an upper bound
/// below the predicted lower bound, or a smaller prime whose lower bound
/// exceeds a larger prime's upper bound. Only bounds are reported.
pub fn conjecture_scan(entries: &[LinkTableEntry], r_max: u64) -> Result<ScanReport, TheoryError> {
    let mut groups: BTreeMap<u64, ScanGroup> = BTreeMap::new();
    let mut sorted: Vec<&LinkTableEntry> = entries.iter().collect();
    sorted.sort_by(|a, b| a.diagram.name().cmp(b.diagram.name()));

    for e in sorted {
        let d = &e.diagram;
        let det =
            link_determinant(&d.coloring_matrix()).expect("coloring matrices have zero row sums");
        if det.is_zero() {
            return Err(TheoryError::NullDeterminantEntry(d.name().to_string()));
        }
        for r in 2..=r_max {
            let p = lcpd_with_det(r, &det);
            let n = min_palette_diagram(d, r).expect("r >= 2").map(|n| n as u64);
            let g = groups.entry(p).or_insert_with(|| ScanGroup {
                lcpd: p,
                lower_bound: predicted_mincol(r, &det)
                    .expect("r >= 2 and det != 0")
                    .verdict
                    .lower_bound(),
                best_upper: None,
                members: Vec::new(),
                flags: Vec::new(),
            });
            if let Some(n) = n {
                g.best_upper = Some(g.best_upper.map_or(n, |b| b.min(n)));
            }
            g.members.push(ScanMember {
                link: d.name().to_string(),
                r,
                min_palette: n,
            });
        }
    }

    for g in groups.values_mut() {
        if let (Some(lb), Some(ub)) = (g.lower_bound, g.best_upper) {
            if ub < lb as u64 {
                g.flags.push(format!(
                    "lcpd {}: upper bound {ub} is below the lower bound {lb}",
                    g.lcpd
                ));
            }
        }
    }
    let bounds: Vec<(u64, Option<u32>, Option<u64>)> = groups
        .values()
        .map(|g| (g.lcpd, g.lower_bound, g.best_upper))
        .collect();
    for (i, &(p, lb, _)) in bounds.iter().enumerate() {
        for &(q, _, ub) in &bounds[i + 1..] {
            if let (Some(lb), Some(ub)) = (lb, ub) {
                if lb as u64 > ub {
                    let flag = format!(
                        "lower bound {lb} at lcpd {p} exceeds upper bound {ub} at lcpd {q}"
                    );
                    groups.get_mut(&p).unwrap().flags.push(flag);
                }
            }
        }
    }

    Ok(ScanReport {
        r_max,
        groups: groups.into_values().collect(),
        note: "bounds from single diagrams; no group value is established here".into(),
    })
}
