//! Combinatorial link diagrams.
//!
//! A diagram is stored as its incidence data only: for every crossing the
//! over-arc and the two under-arcs, plus a count of crossing-free loops.
//! Orientation is not recorded; the coloring condition does not see it.

mod pd;
mod table;
mod text;

pub use pd::import_pd_code;
pub use table::{builtin_table, builtin_torus_2n, lookup_table, LinkTableEntry};
pub use text::{parse_diagram, parse_diagrams, serialize_diagram};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlinalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("crossing {crossing} references arc {arc}, but the diagram has {arcs} arcs")]
    ArcOutOfRange {
        crossing: usize,
        arc: usize,
        arcs: usize,
    },
    #[error("arc {arc} appears {count} times in under positions (expected 2)")]
    UnderEndpointCount { arc: usize, count: usize },
    #[error("PD code: {0}")]
    InconsistentEdges(String),
    #[error("PD code: edge {edge} is used {count} times (expected 2)")]
    EdgeMultiplicity { edge: usize, count: usize },
    #[error("PD code: over/under assignment is ambiguous at edge {edge}")]
    AmbiguousStrand { edge: usize },
    #[error("T(2,n) needs an odd n >= 3, got {0}")]
    InvalidTorusParameter(usize),
}

/// One crossing: `2 * color(over) == color(under_a) + color(under_b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under_a: usize,
    pub under_b: usize,
}

impl Crossing {
    pub const fn new(over: usize, under_a: usize, under_b: usize) -> Self {
        Crossing {
            over,
            under_a,
            under_b,
        }
    }
}

impl From<(usize, usize, usize)> for Crossing {
    fn from((over, under_a, under_b): (usize, usize, usize)) -> Self {
        Crossing::new(over, under_a, under_b)
    }
}

/// A validated link diagram. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagram {
    name: String,
    arcs: usize,
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl Diagram {
    /// Builds a diagram and checks the incidence invariants: every arc index
    /// is below `arcs` and every arc occupies exactly two under positions.
    pub fn new(
        name: impl Into<String>,
        arcs: usize,
        crossings: Vec<Crossing>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let mut under_count = vec![0usize; arcs];
        for (i, c) in crossings.iter().enumerate() {
            for arc in [c.over, c.under_a, c.under_b] {
                if arc >= arcs {
                    return Err(DiagramError::ArcOutOfRange {
                        crossing: i,
                        arc,
                        arcs,
                    });
                }
            }
            under_count[c.under_a] += 1;
            under_count[c.under_b] += 1;
        }
        if let Some((arc, &count)) = under_count.iter().enumerate().find(|(_, &n)| n != 2) {
            return Err(DiagramError::UnderEndpointCount { arc, count });
        }
        Ok(Diagram {
            name: name.into(),
            arcs,
            crossings,
            free_loops,
        })
    }

    /// Like [`Diagram::new`] with the arc count inferred as one more than
    /// the largest referenced index.
    pub fn from_crossings(
        name: impl Into<String>,
        crossings: &[(usize, usize, usize)],
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let arcs = crossings
            .iter()
            .map(|&(o, a, b)| o.max(a).max(b) + 1)
            .max()
            .unwrap_or(0);
        Diagram::new(
            name,
            arcs,
            crossings.iter().copied().map(Crossing::from).collect(),
            free_loops,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arcs(&self) -> usize {
        self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Number of color variables: one per arc plus one per free loop.
    pub fn variables(&self) -> usize {
        self.arcs + self.free_loops
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The coloring matrix: one row per crossing, `+2` at the over-arc and
    /// `-1` at each under-arc (accumulated), and one all-zero column per
    /// free loop.
    pub fn coloring_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.crossings.len(), self.variables());
        for (i, c) in self.crossings.iter().enumerate() {
            m.add_to(i, c.over, 2);
            m.add_to(i, c.under_a, -1);
            m.add_to(i, c.under_b, -1);
        }
        m
    }
}

/// Free-function form of [`Diagram::coloring_matrix`].
pub fn coloring_matrix(d: &Diagram) -> IntMatrix {
    d.coloring_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.to_i64_rows().unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let d = Diagram::from_crossings("trefoil", &[(0, 1, 2), (1, 2, 0), (2, 0, 1)], 0).unwrap();
        assert_eq!(
            rows(&d.coloring_matrix()),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
    }

    #[test]
    fn hopf_matrix_accumulates_repeated_under_arc() {
        let d = Diagram::from_crossings("hopf", &[(0, 1, 1), (1, 0, 0)], 0).unwrap();
        assert_eq!(rows(&d.coloring_matrix()), vec![vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn kink_matrix_is_zero() {
        let d = Diagram::from_crossings("kink", &[(0, 0, 0)], 0).unwrap();
        assert_eq!(rows(&d.coloring_matrix()), vec![vec![0]]);
    }

    #[test]
    fn free_loops_add_zero_columns() {
        let d = Diagram::from_crossings("u", &[(0, 1, 1), (1, 0, 0)], 2).unwrap();
        let m = d.coloring_matrix();
        assert_eq!(m.cols(), 4);
        assert_eq!(rows(&m), vec![vec![2, -2, 0, 0], vec![-2, 2, 0, 0]]);
    }

    #[test]
    fn rejects_single_under_endpoint() {
        // One arc end left dangling on either side.
        let err = Diagram::from_crossings("x", &[(0, 0, 1)], 0).unwrap_err();
        assert_eq!(err, DiagramError::UnderEndpointCount { arc: 0, count: 1 });
    }

    #[test]
    fn rejects_out_of_range_arc() {
        let err = Diagram::new("x", 2, vec![Crossing::new(0, 1, 2)], 0).unwrap_err();
        assert!(matches!(err, DiagramError::ArcOutOfRange { arc: 2, .. }));
    }

    #[test]
    fn row_sums_vanish() {
        for entry in builtin_table() {
            let m = entry.diagram.coloring_matrix();
            assert!(m.rows_sum_to_zero(), "{}", entry.diagram.name());
        }
    }
}
