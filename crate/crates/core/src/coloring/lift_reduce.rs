use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{require_valid, Coloring, ColoringError};
use crate::diagram::Diagram;
use crate::theory::least_prime_divisor;

/// Lifts a coloring mod `r0` to modulus `r` by multiplying every color by
/// `r / r0`. Validity, palette size and non-triviality carry over.
pub fn lift_coloring(c: &Coloring, r: u64, d: &Diagram) -> Result<Coloring, ColoringError> {
    let r0 = c.modulus();
    if r < 2 || !r.is_multiple_of(r0) {
        return Err(ColoringError::NotDivisor { from: r0, to: r });
    }
    require_valid(d, c)?;
    let k = r / r0;
    Coloring::new(r, c.values().iter().map(|&v| v * k).collect())
}

/// Intermediate and final colorings of [`reduce_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    /// Input shifted so that arc 0 has color 0.
    pub translated: Coloring,
    /// gcd of the modulus and all translated colors.
    pub divisor: u64,
    /// `translated / divisor`, a coloring mod `r / divisor`.
    pub divided: Coloring,
    pub prime: u64,
    /// `divided` read mod `prime`.
    pub coloring: Coloring,
}

/// Turns a non-trivial r-coloring into a non-trivial p-coloring for a prime
/// `p | r` without increasing the palette:
///
/// 1. subtract the color of arc 0;
/// 2. divide modulus and colors by their common gcd `g`;
/// 3. read the colors mod the least prime `p | r/g`.
pub fn reduce_coloring(c: &Coloring, d: &Diagram) -> Result<Reduction, ColoringError> {
    require_valid(d, c)?;
    if c.is_trivial() {
        return Err(ColoringError::Trivial);
    }
    let r = c.modulus();
    let translated = c.translated();
    let g = translated.values().iter().fold(r, |g, &v| g.gcd(&v));
    let divided = Coloring::new(r / g, translated.values().iter().map(|&v| v / g).collect())?;
    let p = least_prime_divisor(r / g).expect("r / g >= 2 for a non-trivial coloring");
    let coloring = Coloring::new(p, divided.values().iter().map(|&v| v % p).collect())?;
    Ok(Reduction {
        translated,
        divisor: g,
        divided,
        prime: p,
        coloring,
    })
}
