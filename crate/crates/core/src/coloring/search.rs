use num_bigint::BigUint;
use serde::Serialize;

use super::{lift_coloring, Coloring, ColoringError};
use crate::diagram::Diagram;
use crate::intlinalg::{kernel_basis_mod_p, link_determinant, solve_homogeneous_mod, IntMatrix};
use crate::theory::{gcd_with_det, inverse_mod_prime, is_prime, prime_factors};

/// Every p-coloring of `d`, `p` prime: `p^k` of them for a kernel of
/// dimension `k`.
pub fn enumerate_colorings(
    d: &Diagram,
    p: u64,
) -> Result<impl Iterator<Item = Coloring>, ColoringError> {
    if !is_prime(p) {
        return Err(ColoringError::NotPrime(p));
    }
    let module = solve_homogeneous_mod(&d.coloring_matrix(), p)?;
    Ok(module
        .into_solutions()
        .map(move |values| Coloring { modulus: p, values }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinPaletteMode {
    /// Primes directly; composite moduli through their prime divisors.
    #[default]
    Reduction,
    /// Scan every r-coloring.
    BruteForce,
}

/// Least palette size among non-trivial colorings, with a coloring that
/// realizes it. Witnesses always contain color 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaletteMinimum {
    pub size: usize,
    pub witness: Coloring,
}

/// Kernel mod `p` restricted to colorings with `values[0] == 0`. It
/// complements the constant colorings, so its nonzero vectors up to
/// scaling are one representative per affine orbit of non-trivial
/// colorings.
fn normalized_kernel(d: &Diagram, p: u64) -> Result<Vec<Vec<u64>>, ColoringError> {
    if d.variables() == 0 {
        return Ok(Vec::new());
    }
    let base = d.coloring_matrix();
    let mut aug = IntMatrix::zeros(base.rows() + 1, base.cols());
    for i in 0..base.rows() {
        for j in 0..base.cols() {
            aug.set(i, j, base.get(i, j).clone());
        }
    }
    aug.set(base.rows(), 0, 1.into());
    Ok(kernel_basis_mod_p(&aug, p)?)
}

fn orbit_count(p: u64, dim: usize) -> u128 {
    // (p^dim - 1) / (p - 1), saturating.
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..dim {
        total = total.saturating_add(power);
        power = power.saturating_mul(p as u128);
    }
    total
}

/// Number of orbit representatives the prime search visits.
pub fn prime_search_size(d: &Diagram, p: u64) -> Result<u128, ColoringError> {
    if !is_prime(p) {
        return Err(ColoringError::NotPrime(p));
    }
    Ok(orbit_count(p, normalized_kernel(d, p)?.len()))
}

fn palette_size(values: &[u64], scratch: &mut Vec<u64>) -> usize {
    scratch.clear();
    scratch.extend_from_slice(values);
    scratch.sort_unstable();
    scratch.dedup();
    scratch.len()
}

fn prime_minimum(d: &Diagram, p: u64) -> Result<Option<PaletteMinimum>, ColoringError> {
    let basis = normalized_kernel(d, p)?;
    let dim = basis.len();
    let n = d.variables();
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut scratch = Vec::with_capacity(n);
    let mut x = vec![0u64; n];

    // Projective points: leading coefficient 1 at `lead`, arbitrary after.
    'outer: for lead in 0..dim {
        let tail = dim - lead - 1;
        let mut coeffs = vec![0u64; tail];
        loop {
            for (k, xk) in x.iter_mut().enumerate() {
                let mut acc = basis[lead][k] as u128;
                for (t, &c) in coeffs.iter().enumerate() {
                    acc += c as u128 * basis[lead + 1 + t][k] as u128;
                }
                *xk = (acc % p as u128) as u64;
            }
            let size = palette_size(&x, &mut scratch);
            if best.as_ref().is_none_or(|(s, _)| size < *s) {
                best = Some((size, x.clone()));
                if size == 2 {
                    break 'outer;
                }
            }
            // Next coefficient tuple.
            let mut i = 0;
            loop {
                if i == tail {
                    continue 'outer;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
    // Scale so that the first nonzero color is 1.
    Ok(best.map(|(size, values)| {
        let c = Coloring { modulus: p, values };
        let lead = c.values.iter().copied().find(|&v| v != 0).unwrap_or(1);
        PaletteMinimum {
            size,
            witness: c.affine(inverse_mod_prime(lead, p), 0),
        }
    }))
}

fn brute_force_minimum(d: &Diagram, r: u64) -> Result<Option<PaletteMinimum>, ColoringError> {
    let module = solve_homogeneous_mod(&d.coloring_matrix(), r)?;
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut scratch = Vec::new();
    for x in module.into_solutions() {
        let size = palette_size(&x, &mut scratch);
        if size < 2 {
            continue;
        }
        if best.as_ref().is_none_or(|(s, _)| size < *s) {
            best = Some((size, x));
            if size == 2 {
                break;
            }
        }
    }
    Ok(best.map(|(size, values)| PaletteMinimum {
        size,
        witness: Coloring { modulus: r, values }.translated(),
    }))
}

/// Least palette size over the non-trivial r-colorings of `d`, with a
/// witness, or `None` when every r-coloring is constant.
///
/// In [`MinPaletteMode::Reduction`] a composite `r` is handled as the
/// minimum over primes `p | gcd(r, det)` of the prime answers, the
/// witness being lifted back to modulus `r`.
pub fn min_palette_witness(
    d: &Diagram,
    r: u64,
    mode: MinPaletteMode,
) -> Result<Option<PaletteMinimum>, ColoringError> {
    if r < 2 {
        return Err(ColoringError::ModulusTooSmall(r));
    }
    if mode == MinPaletteMode::BruteForce {
        return brute_force_minimum(d, r);
    }
    if is_prime(r) {
        return prime_minimum(d, r);
    }
    let det = link_determinant(&d.coloring_matrix())?;
    let mut best: Option<PaletteMinimum> = None;
    for p in prime_factors(gcd_with_det(r, &det)) {
        if let Some(found) = prime_minimum(d, p)? {
            if best.as_ref().is_none_or(|b| found.size < b.size) {
                let witness = lift_coloring(&found.witness, r, d)?;
                best = Some(PaletteMinimum {
                    size: found.size,
                    witness,
                });
            }
        }
    }
    Ok(best)
}

/// Least palette size over the non-trivial r-colorings of `d`.
pub fn min_palette_diagram(d: &Diagram, r: u64) -> Result<Option<usize>, ColoringError> {
    Ok(min_palette_witness(d, r, MinPaletteMode::Reduction)?.map(|m| m.size))
}

/// Upper bound on the brute-force search size for modulus `r`.
pub fn brute_force_size(d: &Diagram, r: u64) -> Result<BigUint, ColoringError> {
    Ok(solve_homogeneous_mod(&d.coloring_matrix(), r)?.cardinality)
}
