use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;

use foxcol_cli::report::{
    CountReport, DetReport, LiftReport, MincolReport, ReduceReport, ScanOutput, TableRow,
    VerifyOutput,
};
use foxcol_core::coloring::is_valid_coloring;
use foxcol_core::diagram::lookup_table;
use foxcol_core::theory::{RecordStatus, Verdict};
use serde::de::DeserializeOwned;
use serde::Serialize;
use tempfile::NamedTempFile;

const TREFOIL: &str = "link trefoil\nX 0 1 2\nX 1 2 0\nX 2 0 1\n";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn foxcol(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_foxcol"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

/// Parses a JSON report and checks that it serializes back to the same
/// document.
fn json<T: Serialize + DeserializeOwned>(args: &[&str]) -> (i32, T) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let run = foxcol(&full);
    let report: T = serde_json::from_str(&run.stdout)
        .unwrap_or_else(|e| panic!("{e}\nstdout: {}\nstderr: {}", run.stdout, run.stderr));
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, run.stdout, "round trip");
    (run.code, report)
}

fn golden(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn det_torus_seven() {
    let (code, r) = json::<DetReport>(&["det", "--table", "T(2,7)"]);
    assert_eq!(code, 0);
    assert_eq!(r.det, 7u32.into());
    assert_eq!((r.arcs, r.crossings), (7, 7));
}

#[test]
fn det_from_files() {
    let text = file(TREFOIL);
    let (_, r) = json::<DetReport>(&["det", path(&text)]);
    assert_eq!((r.link.as_str(), r.det.clone()), ("trefoil", 3u32.into()));
    let pd = file("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]\n");
    let (_, r) = json::<DetReport>(&["det", path(&pd)]);
    assert_eq!(r.det, 3u32.into());
}

#[test]
fn det_hopf_and_golden() {
    let (_, r) = json::<DetReport>(&["det", "--table", "hopf"]);
    assert_eq!(r.det, 2u32.into());
    let run = foxcol(&["det", "--table", "trefoil", "--format", "json"]);
    assert_eq!(run.stdout, golden("det_trefoil.json"));
}

#[test]
fn counts() {
    for (r, expect) in [("3", 9u32), ("5", 5), ("6", 18)] {
        let (code, rep) = json::<CountReport>(&["count", "--table", "trefoil", "--r", r]);
        assert_eq!(code, 0);
        assert_eq!(rep.count, expect.into(), "r={r}");
    }
    let run = foxcol(&[
        "count", "--table", "trefoil", "--r", "6", "--format", "json",
    ]);
    assert_eq!(run.stdout, golden("count_trefoil_6.json"));
}

#[test]
fn mincol_examples() {
    let run = foxcol(&[
        "mincol", "--table", "trefoil", "--r", "3", "--format", "json",
    ]);
    assert_eq!(run.stdout, golden("mincol_trefoil_3.json"));

    let (_, r) = json::<MincolReport>(&["mincol", "--table", "trefoil", "--r", "5"]);
    assert_eq!((r.min_palette, r.witness), (None, None));
    assert_eq!(r.prediction.unwrap().verdict, Verdict::NoNontrivial);
    let text = foxcol(&["mincol", "--table", "trefoil", "--r", "5"]).stdout;
    assert!(text.contains("no non-trivial colorings"), "{text}");

    let d = lookup_table("figure-eight").unwrap().diagram;
    for extra in [&[][..], &["--brute-force"][..]] {
        let mut args = vec!["mincol", "--table", "figure-eight", "--r", "5"];
        args.extend_from_slice(extra);
        let (_, r) = json::<MincolReport>(&args);
        assert_eq!(r.min_palette, Some(4));
        let w = r.witness.unwrap();
        assert!(is_valid_coloring(&d, &w).unwrap());
        assert_eq!(w.values().iter().min(), Some(&0));
        assert_eq!(w.palette().size(), 4);
    }
}

#[test]
fn mincol_composite_matches_brute_force() {
    for r in ["6", "9", "10", "12", "14"] {
        let (_, a) = json::<MincolReport>(&["mincol", "--table", "5_2", "--r", r]);
        let (_, b) = json::<MincolReport>(&["mincol", "--table", "5_2", "--r", r, "--brute-force"]);
        assert_eq!(a.min_palette, b.min_palette, "r={r}");
    }
}

#[test]
fn reduce_examples() {
    let cases: [(&str, &[u64], u64, u64); 3] = [
        (r#"{"modulus":6,"values":[0,2,4]}"#, &[0, 1, 2], 3, 2),
        (r#"{"modulus":9,"values":[0,3,6]}"#, &[0, 1, 2], 3, 3),
        (r#"{"modulus":3,"values":[0,2,1]}"#, &[0, 2, 1], 3, 1),
    ];
    for (input, out, p, g) in cases {
        let c = file(input);
        let (code, r) = json::<ReduceReport>(&["reduce", path(&c), "--table", "trefoil"]);
        assert_eq!(code, 0);
        assert_eq!(r.reduction.coloring.values(), out);
        assert_eq!((r.reduction.prime, r.reduction.divisor), (p, g));
        assert!(r.output_valid && r.output_nontrivial);
        assert!(r.output_palette <= r.input_palette);
    }
}

#[test]
fn lift_examples() {
    let c = file(r#"{"modulus":3,"values":[0,1,2]}"#);
    for (r, out) in [("6", [0, 2, 4]), ("9", [0, 3, 6]), ("3", [0, 1, 2])] {
        let (code, rep) = json::<LiftReport>(&["lift", path(&c), "--table", "trefoil", "--r", r]);
        assert_eq!(code, 0);
        assert_eq!(rep.output.values(), &out);
        assert!(rep.output_valid);
        assert_eq!(rep.input_palette, rep.output_palette);
    }
    assert_eq!(
        foxcol(&["lift", path(&c), "--table", "trefoil", "--r", "10"]).code,
        2
    );
}

#[test]
fn invalid_colorings_rejected() {
    let bad = file(r#"{"modulus":3,"values":[0,1,1]}"#);
    let run = foxcol(&["reduce", path(&bad), "--table", "trefoil"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("crossing"), "{}", run.stderr);
    let trivial = file(r#"{"modulus":3,"values":[1,1,1]}"#);
    assert_eq!(
        foxcol(&["reduce", path(&trivial), "--table", "trefoil"]).code,
        2
    );
    let garbled = file("{");
    assert_eq!(
        foxcol(&["lift", path(&garbled), "--table", "trefoil", "--r", "6"]).code,
        2
    );
}

#[test]
fn verify_whole_table() {
    let (code, v) = json::<VerifyOutput>(&["verify", "--all", "--r-max", "12"]);
    assert_eq!(code, 0);
    assert!(v.consistent);
    assert!(v.records >= 40, "{} records", v.records);
    let names: Vec<&str> = v.reports.iter().map(|r| r.link.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for rep in &v.reports {
        assert!(rep.records.windows(2).all(|w| w[0].r < w[1].r));
    }
}

#[test]
fn verify_single_modulus() {
    let (code, v) = json::<VerifyOutput>(&["verify", "--table", "trefoil", "--r", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v.records, 1);
    let rec = &v.reports[0].records[0];
    assert_eq!(rec.prediction.unwrap().verdict, Verdict::Exact(3));
    assert_eq!(rec.status, RecordStatus::Consistent);
    assert_eq!(
        foxcol(&["verify", "--table", "trefoil", "--r", "6"]).stdout,
        golden("verify_trefoil_6.txt")
    );
}

#[test]
fn verify_kink() {
    let (code, v) = json::<VerifyOutput>(&["verify", "--table", "unknot-kink"]);
    assert_eq!(code, 0);
    assert_eq!(v.records, 11);
    for rec in &v.reports[0].records {
        assert_eq!(rec.prediction.unwrap().verdict, Verdict::NoNontrivial);
        assert_eq!(rec.status, RecordStatus::Consistent);
    }
}

#[test]
fn verify_null_determinant_warns() {
    let split = file("link split\nX 0 1 2\nX 1 2 0\nX 2 0 1\nloop\n");
    let (code, v) = json::<VerifyOutput>(&["verify", path(&split)]);
    assert_eq!(code, 0);
    assert_eq!(v.records, 0);
    assert_eq!(v.warnings.len(), 1);
    let run = foxcol(&["verify", path(&split)]);
    assert!(run.stderr.contains("warning"), "{}", run.stderr);
}

#[test]
fn scan_table() {
    let (code, s) = json::<ScanOutput>(&["scan"]);
    assert_eq!(code, 0);
    assert_eq!(s.scan.r_max, 15);
    let three = s.scan.groups.iter().find(|g| g.lcpd == 3).unwrap();
    assert!(three.members.iter().all(|m| m.min_palette == Some(3)));
    let text = foxcol(&["scan", "--r-max", "6"]).stdout;
    assert!(text.starts_with("lcpd  lower"), "{text}");
}

#[test]
fn table_listing() {
    let (code, rows) = json::<Vec<TableRow>>(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| !r.provenance.is_empty()));
    let text = foxcol(&["table"]).stdout;
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    let col = lines[0].find("aliases").unwrap();
    for l in &lines {
        let b = l.as_bytes();
        assert!(b[col - 1] == b' ' && b[col] != b' ', "{l}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(foxcol(&["--help"]).code, 0);
    assert_eq!(foxcol(&["--version"]).code, 0);
    assert_eq!(foxcol(&[]).code, 1);
    assert_eq!(foxcol(&["frobnicate"]).code, 1);
    assert_eq!(foxcol(&["count", "--table", "trefoil", "--r", "1"]).code, 1);
    assert_eq!(foxcol(&["count", "--table", "trefoil"]).code, 1);
    let text = file(TREFOIL);
    assert_eq!(foxcol(&["det", path(&text), "--table", "hopf"]).code, 1);
    assert_eq!(foxcol(&["verify", "--all", "--table", "hopf"]).code, 1);

    assert_eq!(foxcol(&["det", "--table", "no-such-link"]).code, 2);
    assert_eq!(foxcol(&["det", "/nonexistent/diagram.txt"]).code, 2);
    let bad = file("X 0 1\n");
    let run = foxcol(&["det", path(&bad)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 1"), "{}", run.stderr);
    let unbalanced = file("X 0 0 1\n");
    assert_eq!(foxcol(&["det", path(&unbalanced)]).code, 2);
}
