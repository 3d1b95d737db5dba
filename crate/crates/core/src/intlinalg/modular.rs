use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{smith_normal_form, IntMatrix, LinalgError};
use crate::theory::is_prime;

/// All solutions of `m * x == 0 (mod r)`.
///
/// With `left * m * right = diag(d_1, ..., d_k)` the substitution
/// `x = right * y` decouples the system into `d_i * y_i == 0 (mod r)`,
/// which has `gcd(d_i, r)` solutions; surplus columns are unconstrained.
/// Each generator is `right[:, i] * r / gcd(d_i, r)` and has additive
/// order `gcd(d_i, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionModule {
    pub modulus: u64,
    pub variables: usize,
    /// Coordinates `y_i` that range over all of `Z/r`.
    pub rank_free: usize,
    pub generators: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
    pub cardinality: BigUint,
}

fn reduce(v: &BigInt, r: u64) -> u64 {
    v.mod_floor(&BigInt::from(r)).to_u64().unwrap()
}

pub fn solve_homogeneous_mod(m: &IntMatrix, r: u64) -> Result<SolutionModule, LinalgError> {
    if r < 2 {
        return Err(LinalgError::ModulusTooSmall(r));
    }
    let snf = smith_normal_form(m, true);
    let right = snf.right.as_ref().unwrap();
    let n = m.cols();

    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut rank_free = 0;
    let mut cardinality = BigUint::from(1u8);
    for i in 0..n {
        let g = match snf.factors.get(i) {
            Some(d) => (d % r).to_u64().unwrap().gcd(&r),
            None => r,
        };
        if g == r {
            rank_free += 1;
        }
        if g == 1 {
            continue;
        }
        let step = BigInt::from(r / g);
        generators.push(
            (0..n)
                .map(|j| reduce(&(right.get(j, i) * &step), r))
                .collect(),
        );
        orders.push(g);
        cardinality *= g;
    }
    Ok(SolutionModule {
        modulus: r,
        variables: n,
        rank_free,
        generators,
        orders,
        cardinality,
    })
}

impl SolutionModule {
    /// Every solution exactly once, starting from the zero vector.
    pub fn solutions(&self) -> Solutions {
        self.clone().into_solutions()
    }

    pub fn into_solutions(self) -> Solutions {
        Solutions {
            digits: vec![0; self.orders.len()],
            current: vec![0; self.variables],
            module: self,
            done: false,
        }
    }
}

/// Odometer over the generator coefficients.
#[derive(Debug, Clone)]
pub struct Solutions {
    module: SolutionModule,
    digits: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl Iterator for Solutions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let r = self.module.modulus;
        // Adding a generator `order` times returns to zero, so a wrapping
        // digit just adds once more.
        self.done = true;
        for (i, gen) in self.module.generators.iter().enumerate() {
            for (x, g) in self.current.iter_mut().zip(gen) {
                *x = ((*x as u128 + *g as u128) % r as u128) as u64;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.module.orders[i] {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// A basis of the kernel of `m` over the field with `p` elements, one
/// vector per free column of the reduced row echelon form.
pub fn kernel_basis_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<Vec<u64>>, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        // Fermat inverse.
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| m.row(i).iter().map(|v| reduce(v, p)).collect())
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(s) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, s);
        let k = inv(a[r][c]);
        for v in a[r].iter_mut() {
            *v = mul(*v, k);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + p - mul(f, pv)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin_table;
    use std::collections::BTreeSet;

    fn trefoil() -> IntMatrix {
        IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
    }

    /// Test oracle: count all `r^n` assignments directly.
    fn brute_count(m: &IntMatrix, r: u64) -> u64 {
        let n = m.cols();
        let rows = m.to_i64_rows().unwrap();
        let mut x = vec![0i64; n];
        let mut count = 0;
        loop {
            if rows.iter().all(|row| {
                row.iter()
                    .zip(&x)
                    .map(|(a, b)| a * b)
                    .sum::<i64>()
                    .rem_euclid(r as i64)
                    == 0
            }) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                x[i] += 1;
                if x[i] < r as i64 {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn trefoil_counts() {
        let m = trefoil();
        assert_eq!(brute_count(&m, 3), 9);
        assert_eq!(brute_count(&m, 6), 18);
        assert_eq!(brute_count(&m, 5), 5);
        assert_eq!(
            solve_homogeneous_mod(&m, 3).unwrap().cardinality,
            9u32.into()
        );
        assert_eq!(
            solve_homogeneous_mod(&m, 6).unwrap().cardinality,
            18u32.into()
        );
        let five = solve_homogeneous_mod(&m, 5).unwrap();
        assert_eq!(five.cardinality, 5u32.into());
        for x in five.solutions() {
            assert!(x.iter().all(|&v| v == x[0]), "{x:?} is not constant");
        }
    }

    #[test]
    fn modulus_too_small() {
        assert_eq!(
            solve_homogeneous_mod(&trefoil(), 1),
            Err(LinalgError::ModulusTooSmall(1))
        );
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        for e in builtin_table().iter().filter(|e| e.diagram.arcs() <= 7) {
            let m = e.diagram.coloring_matrix();
            for r in 2..=8 {
                let module = solve_homogeneous_mod(&m, r).unwrap();
                let all: BTreeSet<Vec<u64>> = module.solutions().collect();
                let expected = brute_count(&m, r);
                assert_eq!(all.len() as u64, expected, "{} mod {r}", e.diagram.name());
                assert_eq!(module.cardinality, expected.into());
                assert!(module.cardinality >= r.into());
            }
        }
    }

    #[test]
    fn surplus_columns_are_free() {
        let m = IntMatrix::from_rows(&[vec![1, -1]]);
        let module = solve_homogeneous_mod(&m, 4).unwrap();
        assert_eq!(module.cardinality, 4u32.into());
        assert_eq!(module.rank_free, 1);
        let m = IntMatrix::zeros(0, 2);
        assert_eq!(
            solve_homogeneous_mod(&m, 3).unwrap().cardinality,
            9u32.into()
        );
    }

    #[test]
    fn kernel_dimension_matches_snf() {
        for e in builtin_table() {
            let m = e.diagram.coloring_matrix();
            for p in [2, 3, 5, 7, 11, 13] {
                let k = kernel_basis_mod_p(&m, p).unwrap().len() as u32;
                let card = solve_homogeneous_mod(&m, p).unwrap().cardinality;
                assert_eq!(
                    BigUint::from(p).pow(k),
                    card,
                    "{} mod {p}",
                    e.diagram.name()
                );
            }
        }
    }

    #[test]
    fn kernel_requires_prime() {
        assert_eq!(
            kernel_basis_mod_p(&trefoil(), 6),
            Err(LinalgError::NotPrime(6))
        );
    }
}
