//! Report records printed by each subcommand. Every record serializes to
//! JSON and parses back.

use foxcol_core::coloring::Reduction;
use foxcol_core::json::{self, Big};
use foxcol_core::theory::{ScanReport, VerifyReport};
use foxcol_core::{Coloring, Prediction};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetReport {
    pub link: String,
    pub arcs: usize,
    pub crossings: usize,
    pub free_loops: usize,
    #[serde(with = "json::big_uint")]
    pub det: BigUint,
    #[serde(with = "json::big_uint_vec")]
    pub invariant_factors: Vec<BigUint>,
    pub matrix: Vec<Vec<Big>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub link: String,
    pub r: u64,
    #[serde(with = "json::big_uint")]
    pub count: BigUint,
    /// Dimension of the rational kernel of the coloring matrix.
    pub kernel_rank: usize,
    /// Additive orders of the generators of the solution module.
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MincolReport {
    pub link: String,
    pub r: u64,
    #[serde(with = "json::big_uint")]
    pub det: BigUint,
    pub mode: String,
    pub min_palette: Option<usize>,
    pub witness: Option<Coloring>,
    /// Absent for a null determinant.
    pub prediction: Option<Prediction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub link: String,
    pub input: Coloring,
    pub input_palette: usize,
    pub reduction: Reduction,
    pub output_palette: usize,
    pub output_valid: bool,
    pub output_nontrivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub link: String,
    pub input: Coloring,
    pub input_palette: usize,
    pub output: Coloring,
    pub output_palette: usize,
    pub output_valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub reports: Vec<VerifyReport>,
    pub records: usize,
    pub consistent: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutput {
    pub scan: ScanReport,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub aliases: Vec<String>,
    pub arcs: usize,
    pub crossings: usize,
    pub expected_det: Option<u64>,
    pub provenance: String,
}
