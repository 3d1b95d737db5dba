use serde::Serialize;

use super::{Crossing, Diagram, DiagramError};

/// A bundled reference diagram with its known determinant.
#[derive(Debug, Clone, Serialize)]
pub struct LinkTableEntry {
    pub diagram: Diagram,
    pub expected_det: Option<u64>,
    pub provenance: String,
    /// Other accepted lookup names.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
}

/// The standard `n`-crossing diagram of the torus link T(2,n), `n` odd:
/// crossing `i` is `(i+1, i, i+2)` with indices mod `n`.
pub fn builtin_torus_2n(n: usize) -> Result<Diagram, DiagramError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(DiagramError::InvalidTorusParameter(n));
    }
    let crossings = (0..n)
        .map(|i| Crossing::new((i + 1) % n, i, (i + 2) % n))
        .collect();
    Diagram::new(format!("T(2,{n})"), n, crossings, 0)
}

fn entry(diagram: Diagram, det: u64, provenance: &str, aliases: &[&str]) -> LinkTableEntry {
    LinkTableEntry {
        diagram,
        expected_det: Some(det),
        provenance: provenance.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
    }
}

fn fixed(name: &str, crossings: &[(usize, usize, usize)]) -> Diagram {
    Diagram::from_crossings(name, crossings, 0).expect("bundled diagram is valid")
}

/// The bundled reference table, in a fixed order.
pub fn builtin_table() -> Vec<LinkTableEntry> {
    let mut table = Vec::new();
    for n in [3, 5, 7, 9, 11] {
        let aliases: &[&str] = if n == 3 { &["trefoil", "3_1"] } else { &[] };
        table.push(entry(
            builtin_torus_2n(n).unwrap(),
            n as u64,
            "torus knot T(2,n): determinant equals crossing number",
            aliases,
        ));
    }
    // PD X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]
    table.push(entry(
        fixed(
            "figure-eight",
            &[(0, 1, 2), (2, 3, 0), (1, 2, 3), (3, 0, 1)],
        ),
        5,
        "cofactor expansion of a first minor",
        &["4_1"],
    ));
    // PD X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]
    table.push(entry(
        fixed(
            "5_2",
            &[(2, 0, 1), (4, 1, 2), (0, 2, 3), (1, 3, 4), (3, 4, 0)],
        ),
        7,
        "cofactor expansion of a first minor",
        &[],
    ));
    table.push(entry(
        fixed("hopf", &[(0, 1, 1), (1, 0, 0)]),
        2,
        "cofactor expansion of a first minor",
        &["hopf-link", "T(2,2)"],
    ));
    table.push(entry(
        fixed("unknot-kink", &[(0, 0, 0)]),
        1,
        "empty first minor (one Reidemeister I kink)",
        &["kink"],
    ));
    table
}

/// Finds a bundled entry by name or alias, ignoring ASCII case.
pub fn lookup_table(name: &str) -> Option<LinkTableEntry> {
    builtin_table().into_iter().find(|e| {
        e.diagram.name().eq_ignore_ascii_case(name)
            || e.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    })
}
