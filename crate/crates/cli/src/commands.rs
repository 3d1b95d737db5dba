use std::path::Path;

use foxcol_core::coloring::{
    brute_force_size, is_valid_coloring, lift_coloring, min_palette_witness, reduce_coloring,
};
use foxcol_core::diagram::{builtin_table, import_pd_code, lookup_table, parse_diagram};
use foxcol_core::intlinalg::solve_homogeneous_mod;
use foxcol_core::json::Big;
use foxcol_core::theory::{conjecture_scan, predicted_mincol, verify_link};
use foxcol_core::{
    link_determinant, smith_normal_form, Coloring, ColoringError, Diagram, LinkTableEntry,
    MinPaletteMode,
};
use num_bigint::BigUint;
use serde::Serialize;

use crate::args::{Cli, Command, DiagramSource, Format, Selection};
use crate::report::*;
use crate::{render, CliError, Outcome, EXIT_INCONSISTENT, EXIT_OK};

/// Largest solution module `mincol --brute-force` will scan.
const BRUTE_FORCE_LIMIT: u64 = 1 << 24;

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn looks_like_pd(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("PD") || l.starts_with("X[") || l.starts_with("Loop["))
}

fn load_file(path: &Path) -> Result<LinkTableEntry, CliError> {
    let text = read(path)?;
    let diagram = if looks_like_pd(&text) {
        let stem = path
            .file_stem()
            .map_or("unnamed".into(), |s| s.to_string_lossy().into_owned());
        import_pd_code(&text).map(|d| d.with_name(stem))
    } else {
        parse_diagram(&text)
    }
    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(LinkTableEntry {
        diagram,
        expected_det: None,
        provenance: path.display().to_string(),
        aliases: Vec::new(),
    })
}

fn lookup(name: &str) -> Result<LinkTableEntry, CliError> {
    lookup_table(name).ok_or_else(|| CliError::Input(format!("no bundled diagram named {name:?}")))
}

fn load_source(src: &DiagramSource) -> Result<Diagram, CliError> {
    match (&src.file, &src.table) {
        (Some(path), _) => Ok(load_file(path)?.diagram),
        (None, Some(name)) => Ok(lookup(name)?.diagram),
        (None, None) => Err(CliError::Usage(
            "a diagram file or --table is required".into(),
        )),
    }
}

fn load_selection(sel: &Selection) -> Result<Vec<LinkTableEntry>, CliError> {
    let mut entries = if !sel.files.is_empty() {
        sel.files
            .iter()
            .map(|p| load_file(p))
            .collect::<Result<Vec<_>, _>>()?
    } else if !sel.table.is_empty() {
        sel.table
            .iter()
            .map(|n| lookup(n))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        builtin_table()
    };
    entries.sort_by(|a, b| a.diagram.name().cmp(b.diagram.name()));
    entries.dedup_by(|a, b| a.diagram.name() == b.diagram.name());
    Ok(entries)
}

fn load_coloring(path: &Path) -> Result<Coloring, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn determinant(d: &Diagram) -> Result<BigUint, CliError> {
    link_determinant(&d.coloring_matrix()).map_err(input_err)
}

fn emit<T: Serialize>(format: Format, report: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => text(report),
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        stdout,
        warnings: Vec::new(),
        exit_code: EXIT_OK,
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Det(src) => {
            let d = load_source(src)?;
            let m = d.coloring_matrix();
            let report = DetReport {
                link: d.name().to_string(),
                arcs: d.arcs(),
                crossings: d.crossings().len(),
                free_loops: d.free_loops(),
                det: determinant(&d)?,
                invariant_factors: smith_normal_form(&m, false).factors,
                matrix: (0..m.rows())
                    .map(|i| m.row(i).iter().cloned().map(Big::from).collect())
                    .collect(),
            };
            Ok(ok(emit(f, &report, render::det)))
        }
        Command::Count { source, r } => {
            let d = load_source(source)?;
            let m = d.coloring_matrix();
            let module = solve_homogeneous_mod(&m, *r).map_err(input_err)?;
            let report = CountReport {
                link: d.name().to_string(),
                r: *r,
                count: module.cardinality,
                kernel_rank: smith_normal_form(&m, false).nullity(),
                orders: module.orders.into_iter().filter(|&o| o > 1).collect(),
            };
            Ok(ok(emit(f, &report, render::count)))
        }
        Command::Mincol {
            source,
            r,
            brute_force,
        } => {
            let d = load_source(source)?;
            let det = determinant(&d)?;
            let mode = if *brute_force {
                let size = brute_force_size(&d, *r).map_err(input_err)?;
                if size > BigUint::from(BRUTE_FORCE_LIMIT) {
                    let n = u128::try_from(&size).unwrap_or(u128::MAX);
                    return Err(input_err(ColoringError::TooLarge(n)));
                }
                MinPaletteMode::BruteForce
            } else {
                MinPaletteMode::Reduction
            };
            let found = min_palette_witness(&d, *r, mode).map_err(input_err)?;
            let report = MincolReport {
                link: d.name().to_string(),
                r: *r,
                prediction: predicted_mincol(*r, &det).ok(),
                det,
                mode: match mode {
                    MinPaletteMode::BruteForce => "brute-force",
                    MinPaletteMode::Reduction => "reduction",
                }
                .into(),
                min_palette: found.as_ref().map(|m| m.size),
                witness: found.map(|m| m.witness),
            };
            Ok(ok(emit(f, &report, render::mincol)))
        }
        Command::Reduce { coloring, source } => {
            let d = load_source(source)?;
            let input = load_coloring(coloring)?;
            let reduction = reduce_coloring(&input, &d).map_err(input_err)?;
            let out = &reduction.coloring;
            let report = ReduceReport {
                link: d.name().to_string(),
                input_palette: input.palette().size(),
                output_palette: out.palette().size(),
                output_valid: is_valid_coloring(&d, out).map_err(input_err)?,
                output_nontrivial: !out.is_trivial(),
                input,
                reduction,
            };
            Ok(ok(emit(f, &report, render::reduce)))
        }
        Command::Lift {
            coloring,
            source,
            r,
        } => {
            let d = load_source(source)?;
            let input = load_coloring(coloring)?;
            let output = lift_coloring(&input, *r, &d).map_err(input_err)?;
            let report = LiftReport {
                link: d.name().to_string(),
                input_palette: input.palette().size(),
                output_palette: output.palette().size(),
                output_valid: is_valid_coloring(&d, &output).map_err(input_err)?,
                input,
                output,
            };
            Ok(ok(emit(f, &report, render::lift)))
        }
        Command::Verify {
            selection,
            r,
            r_max,
        } => {
            let entries = load_selection(selection)?;
            let rs: Vec<u64> = match r {
                Some(r) => vec![*r],
                None => (2..=*r_max).collect(),
            };
            let mut warnings = Vec::new();
            let reports: Vec<_> = entries.iter().map(|e| verify_link(e, &rs)).collect();
            for rep in &reports {
                if let Some(reason) = &rep.skipped_reason {
                    warnings.push(format!("{}: skipped: {reason}", rep.link));
                }
                if rep.det_matches_table == Some(false) {
                    warnings.push(format!(
                        "{}: computed det {} differs from the table",
                        rep.link, rep.det
                    ));
                }
            }
            let out = VerifyOutput {
                records: reports.iter().map(|r| r.records.len()).sum(),
                consistent: reports.iter().all(|r| r.is_consistent()),
                reports,
                warnings: warnings.clone(),
            };
            Ok(Outcome {
                exit_code: if out.consistent {
                    EXIT_OK
                } else {
                    EXIT_INCONSISTENT
                },
                stdout: emit(f, &out, render::verify),
                warnings,
            })
        }
        Command::Scan { selection, r_max } => {
            let mut entries = load_selection(selection)?;
            let mut warnings = Vec::new();
            let mut kept = Vec::with_capacity(entries.len());
            for e in entries.drain(..) {
                if determinant(&e.diagram)? == BigUint::ZERO {
                    warnings.push(format!("{}: skipped: null determinant", e.diagram.name()));
                } else {
                    kept.push(e);
                }
            }
            let scan = conjecture_scan(&kept, *r_max).map_err(input_err)?;
            let flagged = scan.flags().next().is_some();
            let out = ScanOutput {
                scan,
                warnings: warnings.clone(),
            };
            Ok(Outcome {
                exit_code: if flagged { EXIT_INCONSISTENT } else { EXIT_OK },
                stdout: emit(f, &out, render::scan),
                warnings,
            })
        }
        Command::Table => {
            let rows: Vec<TableRow> = builtin_table()
                .into_iter()
                .map(|e| TableRow {
                    name: e.diagram.name().to_string(),
                    arcs: e.diagram.arcs(),
                    crossings: e.diagram.crossings().len(),
                    expected_det: e.expected_det,
                    provenance: e.provenance,
                    aliases: e.aliases,
                })
                .collect();
            Ok(ok(emit(f, &rows, |rows| render::table(rows))))
        }
    }
}
