//! Fox colorings: validity, palettes, affine normalization, the lift and
//! reduce constructions, and palette-minimum search.

mod lift_reduce;
mod search;

pub use lift_reduce::{lift_coloring, reduce_coloring, Reduction};
pub use search::{
    brute_force_size, enumerate_colorings, min_palette_diagram, min_palette_witness,
    prime_search_size, MinPaletteMode, PaletteMinimum,
};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::Diagram;
use crate::intlinalg::LinalgError;
use crate::theory::{inverse_mod_prime, is_prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("color {value} at position {index} is not reduced mod {modulus}")]
    ValueOutOfRange {
        index: usize,
        value: u64,
        modulus: u64,
    },
    #[error("coloring has {found} values but the diagram has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coloring violates the coloring condition at crossing {crossing}")]
    Invalid { crossing: usize },
    #[error("coloring is trivial")]
    Trivial,
    #[error("{from} does not divide {to}")]
    NotDivisor { from: u64, to: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("crossing {0} does not exist")]
    CrossingOutOfRange(usize),
    #[error("the colors at crossing {0} are not pairwise distinct")]
    NotPolychromatic(usize),
    #[error("search space of {0} colorings exceeds the limit")]
    TooLarge(u128),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An assignment of residues mod `modulus` to arcs, followed by one
/// residue per free loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    modulus: u64,
    values: Vec<u64>,
}

#[derive(Deserialize)]
struct RawColoring {
    modulus: u64,
    values: Vec<u64>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        Coloring::new(raw.modulus, raw.values)
    }
}

impl Coloring {
    /// Requires every value to be already reduced.
    pub fn new(modulus: u64, values: Vec<u64>) -> Result<Self, ColoringError> {
        if modulus < 2 {
            return Err(ColoringError::ModulusTooSmall(modulus));
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v >= modulus) {
            return Err(ColoringError::ValueOutOfRange {
                index,
                value,
                modulus,
            });
        }
        Ok(Coloring { modulus, values })
    }

    /// Reduces arbitrary integers mod `modulus`.
    pub fn reduced(modulus: u64, values: &[i64]) -> Result<Self, ColoringError> {
        if modulus < 2 {
            return Err(ColoringError::ModulusTooSmall(modulus));
        }
        let m = modulus as i128;
        let values = values
            .iter()
            .map(|&v| (v as i128).rem_euclid(m) as u64)
            .collect();
        Ok(Coloring { modulus, values })
    }

    /// The constant coloring.
    pub fn constant(modulus: u64, len: usize, color: u64) -> Result<Self, ColoringError> {
        Coloring::new(modulus, vec![color; len])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn palette(&self) -> Palette {
        Palette {
            colors: self.values.iter().copied().collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// `a * c + b`, componentwise mod the modulus.
    pub fn affine(&self, a: u64, b: u64) -> Coloring {
        let m = self.modulus as u128;
        let values = self
            .values
            .iter()
            .map(|&v| ((a as u128 * v as u128 + b as u128) % m) as u64)
            .collect();
        Coloring {
            modulus: self.modulus,
            values,
        }
    }

    /// Shifts colors so that `values[0] == 0`. The empty coloring is
    /// returned unchanged.
    pub fn translated(&self) -> Coloring {
        match self.values.first() {
            Some(&c0) => self.affine(1, self.modulus - c0),
            None => self.clone(),
        }
    }
}

/// The set of colors a coloring uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Palette {
    pub colors: BTreeSet<u64>,
}

impl Palette {
    pub fn size(&self) -> usize {
        self.colors.len()
    }
}

fn check_length(d: &Diagram, c: &Coloring) -> Result<(), ColoringError> {
    if c.values.len() != d.variables() {
        return Err(ColoringError::LengthMismatch {
            expected: d.variables(),
            found: c.values.len(),
        });
    }
    Ok(())
}

/// First crossing where `2 * over != under_a + under_b (mod r)`.
pub(crate) fn first_violation(d: &Diagram, c: &Coloring) -> Result<Option<usize>, ColoringError> {
    check_length(d, c)?;
    let r = c.modulus as u128;
    let v = |i: usize| c.values[i] as u128;
    Ok(d.crossings()
        .iter()
        .position(|x| (2 * v(x.over)) % r != (v(x.under_a) + v(x.under_b)) % r))
}

/// Checks the coloring condition at every crossing.
pub fn is_valid_coloring(d: &Diagram, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(first_violation(d, c)?.is_none())
}

pub(crate) fn require_valid(d: &Diagram, c: &Coloring) -> Result<(), ColoringError> {
    match first_violation(d, c)? {
        Some(crossing) => Err(ColoringError::Invalid { crossing }),
        None => Ok(()),
    }
}

/// A crossing whose three incident colors are pairwise distinct.
pub fn find_polychromatic_crossing(d: &Diagram, c: &Coloring) -> Option<usize> {
    d.crossings().iter().position(|x| {
        let (o, a, b) = (c.values[x.over], c.values[x.under_a], c.values[x.under_b]);
        o != a && o != b && a != b
    })
}

/// Maps `c` affinely so that at `pivot_crossing` the first under-arc has
/// color 0 and the over-arc color 1; the other under-arc then has color 2.
pub fn affine_normalize(
    d: &Diagram,
    c: &Coloring,
    pivot_crossing: usize,
) -> Result<Coloring, ColoringError> {
    let p = c.modulus;
    if !is_prime(p) {
        return Err(ColoringError::NotPrime(p));
    }
    check_length(d, c)?;
    let x = d
        .crossings()
        .get(pivot_crossing)
        .ok_or(ColoringError::CrossingOutOfRange(pivot_crossing))?;
    let (o, a, b) = (c.values[x.over], c.values[x.under_a], c.values[x.under_b]);
    if o == a || o == b || a == b {
        return Err(ColoringError::NotPolychromatic(pivot_crossing));
    }
    let scale = inverse_mod_prime((o + p - a) % p, p);
    let shifted = c.affine(1, p - a);
    Ok(shifted.affine(scale, 0))
}
