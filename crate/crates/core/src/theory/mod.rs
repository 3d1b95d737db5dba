//! Number theory helpers, minimum-color predictions, palette relations,
//! and the verification harness over the bundled table.

mod relations;
mod scan;
mod verify;

pub use relations::{palette_relations, Relation, RelationSet};
pub use scan::{conjecture_scan, ScanGroup, ScanMember, ScanReport};
pub use verify::{
    verify_link, verify_link_with, RecordStatus, VerifyOptions, VerifyRecord, VerifyReport,
};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("<0, 1> is undefined: 1 has no prime divisor")]
    NoPrimeDivisor,
    #[error("the prediction requires a nonzero determinant")]
    NullDeterminant,
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("link {0} has null determinant")]
    NullDeterminantEntry(String),
}

/// gcd with `gcd(a, 0) = a`.
pub fn gcd(a: u64, b: u64) -> Result<u64, TheoryError> {
    if a == 0 && b == 0 {
        return Err(TheoryError::BothZero);
    }
    Ok(a.gcd(&b))
}

/// `gcd(r, det)` for a possibly huge determinant; `gcd(r, 0) = r`.
pub fn gcd_with_det(r: u64, det: &BigUint) -> u64 {
    (det % r).to_u64().unwrap().gcd(&r)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && least_prime_divisor(n) == Some(n)
}

/// Least prime dividing `n`, by trial division; `None` for 0 and 1.
pub fn least_prime_divisor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    Some(n)
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while let Some(p) = least_prime_divisor(n) {
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

/// Inverse of a nonzero residue mod a prime.
pub fn inverse_mod_prime(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a as u128 % p as u128, p - 2, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Least common prime divisor: 1 when `gcd(a, b) = 1`, otherwise the least
/// prime dividing `gcd(a, b)`. With one argument zero this is the least
/// prime divisor of the other.
pub fn lcpd(a: u64, b: u64) -> Result<u64, TheoryError> {
    let g = gcd(a, b)?;
    if g == 1 {
        if a == 0 || b == 0 {
            return Err(TheoryError::NoPrimeDivisor);
        }
        return Ok(1);
    }
    Ok(least_prime_divisor(g).unwrap())
}

/// `lcpd(r, det)` for a possibly huge determinant.
pub fn lcpd_with_det(r: u64, det: &BigUint) -> u64 {
    least_prime_divisor(gcd_with_det(r, det)).unwrap_or(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "colors", rename_all = "snake_case")]
pub enum Verdict {
    /// Only the constant colorings exist.
    NoNontrivial,
    /// The minimum number of colors is exactly this.
    Exact(u32),
    /// The minimum number of colors is at least this.
    AtLeast(u32),
}

impl Verdict {
    /// Smallest palette any non-trivial coloring can have under this verdict.
    pub fn lower_bound(&self) -> Option<u32> {
        match *self {
            Verdict::NoNontrivial => None,
            Verdict::Exact(n) | Verdict::AtLeast(n) => Some(n),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::NoNontrivial => f.write_str("none"),
            Verdict::Exact(n) => write!(f, "={n}"),
            Verdict::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub verdict: Verdict,
    pub lcpd: u64,
}

/// Minimum number of colors mod `r` for a link of determinant `det != 0`,
/// as a function of `p = lcpd(r, det)`: none for 1, 2 for 2, 3 for 3,
/// 4 for 5 and 7, and at least 5 beyond.
pub fn predicted_mincol(r: u64, det: &BigUint) -> Result<Prediction, TheoryError> {
    if r < 2 {
        return Err(TheoryError::ModulusTooSmall(r));
    }
    if det.is_zero() {
        return Err(TheoryError::NullDeterminant);
    }
    let p = lcpd_with_det(r, det);
    let verdict = match p {
        1 => Verdict::NoNontrivial,
        2 => Verdict::Exact(2),
        3 => Verdict::Exact(3),
        5 | 7 => Verdict::Exact(4),
        _ => Verdict::AtLeast(5),
    };
    Ok(Prediction { verdict, lcpd: p })
}
