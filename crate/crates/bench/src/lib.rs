//! Inputs shared by the benchmarks.

use foxcol_core::diagram::{builtin_table, builtin_torus_2n};
use foxcol_core::{Diagram, LinkTableEntry};

/// The torus link `T(2, n)` for odd `n >= 3`.
pub fn torus(n: usize) -> Diagram {
    builtin_torus_2n(n).expect("odd n >= 3")
}

pub fn table() -> Vec<LinkTableEntry> {
    builtin_table()
}
