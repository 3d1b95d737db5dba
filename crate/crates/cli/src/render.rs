//! Plain-text layouts of the reports.

use foxcol_core::theory::{RecordStatus, VerifyRecord};
use foxcol_core::{Coloring, Prediction};

use crate::report::*;

/// Left-aligned columns separated by two spaces; the last column is not
/// padded.
fn columns(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j + 1 < row.len() {
                line.push_str(&format!("{cell:<w$}  ", w = widths[j]));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn kv(pairs: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    columns(&rows)
}

fn coloring(c: &Coloring) -> String {
    let vals: Vec<String> = c.values().iter().map(u64::to_string).collect();
    format!("({}) mod {}", vals.join(","), c.modulus())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn prediction(p: Option<&Prediction>) -> String {
    match p {
        Some(p) => format!("{} (lcpd {})", p.verdict, p.lcpd),
        None => "n/a (null determinant)".into(),
    }
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn det(r: &DetReport) -> String {
    let mut out = kv(&[
        ("link", r.link.clone()),
        ("arcs", r.arcs.to_string()),
        ("crossings", r.crossings.to_string()),
        ("free loops", r.free_loops.to_string()),
        ("det", r.det.to_string()),
        ("factors", joined(&r.invariant_factors)),
    ]);
    if !r.matrix.is_empty() && !r.matrix[0].is_empty() {
        out.push_str("matrix\n");
        let rows: Vec<Vec<String>> = r
            .matrix
            .iter()
            .map(|row| {
                let mut cells = vec![String::new()];
                cells.extend(row.iter().map(|v| format!("{:>3}", v.to_string())));
                cells
            })
            .collect();
        out.push_str(&columns(&rows));
    }
    out
}

pub fn count(r: &CountReport) -> String {
    kv(&[
        ("link", r.link.clone()),
        ("r", r.r.to_string()),
        ("count", r.count.to_string()),
        ("kernel rank", r.kernel_rank.to_string()),
        ("orders", joined(&r.orders)),
    ])
}

pub fn mincol(r: &MincolReport) -> String {
    kv(&[
        ("link", r.link.clone()),
        ("r", r.r.to_string()),
        ("det", r.det.to_string()),
        ("mode", r.mode.clone()),
        (
            "min palette",
            r.min_palette
                .map_or("no non-trivial colorings".into(), |n| n.to_string()),
        ),
        ("witness", r.witness.as_ref().map_or("-".into(), coloring)),
        ("prediction", prediction(r.prediction.as_ref())),
    ])
}

pub fn reduce(r: &ReduceReport) -> String {
    let red = &r.reduction;
    kv(&[
        ("link", r.link.clone()),
        ("input", coloring(&r.input)),
        ("translated", coloring(&red.translated)),
        ("divisor", red.divisor.to_string()),
        ("divided", coloring(&red.divided)),
        ("prime", red.prime.to_string()),
        ("output", coloring(&red.coloring)),
        (
            "palette",
            format!("{} -> {}", r.input_palette, r.output_palette),
        ),
        ("valid", yes_no(r.output_valid)),
        ("non-trivial", yes_no(r.output_nontrivial)),
    ])
}

pub fn lift(r: &LiftReport) -> String {
    kv(&[
        ("link", r.link.clone()),
        ("input", coloring(&r.input)),
        ("output", coloring(&r.output)),
        (
            "palette",
            format!("{} -> {}", r.input_palette, r.output_palette),
        ),
        ("valid", yes_no(r.output_valid)),
    ])
}

fn status(s: RecordStatus) -> &'static str {
    match s {
        RecordStatus::Consistent => "consistent",
        RecordStatus::Inconsistent => "INCONSISTENT",
        RecordStatus::BoundOnly => "bound-only",
        RecordStatus::Skipped => "skipped",
    }
}

fn record_row(link: &str, rec: &VerifyRecord) -> Vec<String> {
    vec![
        link.to_string(),
        rec.r.to_string(),
        rec.lcpd.to_string(),
        rec.prediction.map_or("-".into(), |p| p.verdict.to_string()),
        rec.min_palette.map_or("-".into(), |n| n.to_string()),
        status(rec.status).into(),
        rec.note.clone(),
    ]
}

pub fn verify(v: &VerifyOutput) -> String {
    let mut rows = vec![["link", "r", "lcpd", "predicted", "min", "status", "note"]
        .map(String::from)
        .to_vec()];
    for rep in &v.reports {
        rows.extend(rep.records.iter().map(|rec| record_row(&rep.link, rec)));
    }
    let mut out = columns(&rows);
    if let Some(h) = v.reports.first().map(|r| &r.hypothesis) {
        out.push_str(&format!("note: {h}\n"));
    }
    out.push_str(&format!(
        "{} records, {}\n",
        v.records,
        if v.consistent {
            "consistent"
        } else {
            "INCONSISTENT"
        }
    ));
    out
}

pub fn scan(s: &ScanOutput) -> String {
    let mut rows = vec![["lcpd", "lower", "best upper", "members", "minima"]
        .map(String::from)
        .to_vec()];
    for g in &s.scan.groups {
        let mut minima: Vec<u64> = g.members.iter().filter_map(|m| m.min_palette).collect();
        minima.sort_unstable();
        minima.dedup();
        rows.push(vec![
            g.lcpd.to_string(),
            g.lower_bound.map_or("-".into(), |b| b.to_string()),
            g.best_upper.map_or("-".into(), |b| b.to_string()),
            g.members.len().to_string(),
            if minima.is_empty() {
                "-".into()
            } else {
                joined(&minima)
            },
        ]);
    }
    let mut out = columns(&rows);
    for flag in s.scan.flags() {
        out.push_str(&format!("flag: {flag}\n"));
    }
    out.push_str(&format!("r <= {}; {}\n", s.scan.r_max, s.scan.note));
    out
}

pub fn table(rows: &[TableRow]) -> String {
    let mut cells = vec![
        ["name", "aliases", "arcs", "crossings", "det", "provenance"]
            .map(String::from)
            .to_vec(),
    ];
    for r in rows {
        cells.push(vec![
            r.name.clone(),
            if r.aliases.is_empty() {
                "-".into()
            } else {
                r.aliases.join(",")
            },
            r.arcs.to_string(),
            r.crossings.to_string(),
            r.expected_det.map_or("-".into(), |d| d.to_string()),
            r.provenance.clone(),
        ]);
    }
    columns(&cells)
}
