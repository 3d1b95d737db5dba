//! Acceptance suite. Each test prints one PASS or FAIL line; run with
//! `cargo test -p foxcol-core --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use foxcol_core::coloring::{
    enumerate_colorings, is_valid_coloring, lift_coloring, min_palette_diagram,
    min_palette_witness, reduce_coloring, MinPaletteMode,
};
use foxcol_core::diagram::{builtin_table, builtin_torus_2n, lookup_table};
use foxcol_core::intlinalg::{first_minor_oracle, solve_homogeneous_mod};
use foxcol_core::theory::{
    gcd_with_det, is_prime, lcpd_with_det, palette_relations, prime_factors, Relation,
};
use foxcol_core::{link_determinant, Coloring, Diagram};

/// Runs one criterion, prints its verdict line, and re-raises failures.
fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> String) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) if elapsed < limit => {
            println!("PASS  criterion {id}: {title} ({:.2?}; {detail})", elapsed);
        }
        Ok(_) => {
            println!(
                "FAIL  criterion {id}: {title} ({:.2?} exceeds {:?})",
                elapsed, limit
            );
            panic!("criterion {id} exceeded its time limit");
        }
        Err(e) => {
            println!("FAIL  criterion {id}: {title} ({:.2?})", elapsed);
            resume_unwind(e);
        }
    }
}

fn det(d: &Diagram) -> BigUint {
    link_determinant(&d.coloring_matrix()).unwrap()
}

fn diagrams() -> Vec<Diagram> {
    builtin_table().into_iter().map(|e| e.diagram).collect()
}

/// Coloring count by scanning every assignment.
fn raw_count(d: &Diagram, r: u64) -> u64 {
    let n = d.variables();
    let mut x = vec![0u64; n];
    let mut count = 0;
    loop {
        if d.crossings()
            .iter()
            .all(|c| (2 * x[c.over]) % r == (x[c.under_a] + x[c.under_b]) % r)
        {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            x[i] += 1;
            if x[i] < r {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn c1_torus_determinants() {
    criterion(1, "det T(2,n) = n", Duration::from_secs(1), || {
        for n in [3usize, 5, 7, 9, 11] {
            let d = builtin_torus_2n(n).unwrap();
            assert_eq!(det(&d), BigUint::from(n), "T(2,{n})");
        }
        "n in {3,5,7,9,11}".into()
    });
}

#[test]
fn c2_existence_criterion() {
    criterion(
        2,
        "non-trivial colorings iff gcd(r, det) != 1",
        Duration::from_secs(10),
        || {
            let mut checked = 0;
            let mut enumerated = 0;
            for d in diagrams() {
                let det = det(&d);
                for r in 2..=30u64 {
                    let module = solve_homogeneous_mod(&d.coloring_matrix(), r).unwrap();
                    let nontrivial = module.cardinality > BigUint::from(r);
                    assert_eq!(nontrivial, gcd_with_det(r, &det) != 1, "{} r={r}", d.name());
                    checked += 1;
                    if r <= 8 && d.arcs() <= 7 {
                        assert_eq!(
                            module.cardinality,
                            raw_count(&d, r).into(),
                            "{} r={r}",
                            d.name()
                        );
                        enumerated += 1;
                    }
                }
            }
            format!("{checked} pairs, {enumerated} counts enumerated")
        },
    );
}

#[test]
fn c3_minimum_colors() {
    criterion(
        3,
        "per-diagram minima against the predictions",
        Duration::from_secs(30),
        || {
            let mut checked = 0;
            for d in diagrams() {
                let det = det(&d);
                if det.is_zero() {
                    continue;
                }
                for r in 2..=15u64 {
                    let p = lcpd_with_det(r, &det);
                    if p == 1 {
                        continue;
                    }
                    let n = min_palette_diagram(&d, r)
                        .unwrap()
                        .expect("non-trivial coloring exists");
                    let ctx = format!("{} r={r} lcpd={p} n={n}", d.name());
                    match p {
                        2 => assert_eq!(n, 2, "{ctx}"),
                        3 => assert_eq!(n, 3, "{ctx}"),
                        5 | 7 => assert!(n >= 4, "{ctx}"),
                        _ => assert!(n >= 5, "{ctx}"),
                    }
                    checked += 1;
                }
            }
            let fig8 = lookup_table("figure-eight").unwrap().diagram;
            assert_eq!(min_palette_diagram(&fig8, 5).unwrap(), Some(4));
            let t211 = lookup_table("T(2,11)").unwrap().diagram;
            assert_eq!(min_palette_diagram(&t211, 11).unwrap(), Some(11));
            format!("{checked} pairs; figure-eight r=5 gives 4, T(2,11) r=11 gives 11")
        },
    );
}

#[test]
fn c4_reduction_identity() {
    criterion(
        4,
        "brute force equals min over primes",
        Duration::from_secs(60),
        || {
            let mut checked = 0;
            for d in diagrams() {
                let det = det(&d);
                if det.is_zero() {
                    continue;
                }
                for r in (4..=15u64).filter(|&r| !is_prime(r)) {
                    let g = gcd_with_det(r, &det);
                    if g == 1 {
                        continue;
                    }
                    let brute = min_palette_witness(&d, r, MinPaletteMode::BruteForce)
                        .unwrap()
                        .map(|m| m.size);
                    let over_primes = prime_factors(g)
                        .into_iter()
                        .filter_map(|p| min_palette_diagram(&d, p).unwrap())
                        .min();
                    assert_eq!(brute, over_primes, "{} r={r}", d.name());
                    checked += 1;
                }
            }
            format!("{checked} composite pairs")
        },
    );
}

fn random_coloring(rng: &mut ChaCha8Rng, d: &Diagram, r: u64) -> Coloring {
    let module = solve_homogeneous_mod(&d.coloring_matrix(), r).unwrap();
    let mut x = vec![0u64; d.variables()];
    for (g, &order) in module.generators.iter().zip(&module.orders) {
        let k = rng.gen_range(0..order);
        for (xi, gi) in x.iter_mut().zip(g) {
            *xi = ((*xi as u128 + k as u128 * *gi as u128) % r as u128) as u64;
        }
    }
    Coloring::new(r, x).unwrap()
}

#[test]
fn c5_lift_and_reduce() {
    criterion(
        5,
        "lift and reduce properties on sampled colorings",
        Duration::from_secs(30),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            let pool: Vec<(Diagram, BigUint, Vec<u64>)> = diagrams()
                .into_iter()
                .map(|d| {
                    let det = det(&d);
                    let rs = (2..=15u64)
                        .filter(|&r| gcd_with_det(r, &det) != 1)
                        .collect();
                    (d, det, rs)
                })
                .filter(|(_, _, rs): &(_, _, Vec<u64>)| !rs.is_empty())
                .collect();
            let mut samples = 0;
            let mut draws = 0;
            while samples < 1000 {
                draws += 1;
                assert!(draws < 100_000, "too few non-trivial samples");
                let (d, det, rs) = &pool[rng.gen_range(0..pool.len())];
                let r = rs[rng.gen_range(0..rs.len())];
                let c = random_coloring(&mut rng, d, r);
                if c.is_trivial() {
                    continue;
                }
                samples += 1;
                let ctx = format!("{} {:?}", d.name(), c);
                assert!(is_valid_coloring(d, &c).unwrap(), "{ctx}");

                let target = r * rng.gen_range(1..=4u64);
                let lifted = lift_coloring(&c, target, d).unwrap();
                assert!(is_valid_coloring(d, &lifted).unwrap(), "lift {ctx}");
                assert_eq!(lifted.palette().size(), c.palette().size(), "lift {ctx}");
                assert!(!lifted.is_trivial(), "lift {ctx}");

                let red = reduce_coloring(&c, d).unwrap();
                let out = &red.coloring;
                assert!(is_prime(out.modulus()), "reduce {ctx}");
                assert_eq!(out.modulus(), red.prime);
                assert!(is_valid_coloring(d, out).unwrap(), "reduce {ctx}");
                assert!(!out.is_trivial(), "reduce {ctx}");
                assert!(out.palette().size() <= c.palette().size(), "reduce {ctx}");
                assert_eq!(gcd_with_det(r, det) % red.prime, 0, "reduce {ctx}");
            }
            format!("{samples} samples, 0 violations")
        },
    );
}

fn rel(over: i64, under_a: i64, under_b: i64) -> Relation {
    Relation {
        over,
        under_a,
        under_b,
    }
}

#[test]
fn c6_palette_relations() {
    criterion(
        6,
        "four-color palette relations",
        Duration::from_secs(1),
        || {
            let cases = [
                ([0i64, 1, 2, 3], [rel(1, 0, 2), rel(2, 1, 3)]),
                ([0, 1, 2, 4], [rel(1, 0, 2), rel(2, 0, 4)]),
                ([0, 2, 3, 4], [rel(2, 0, 4), rel(3, 2, 4)]),
            ];
            let primes: Vec<u64> = (8..=100).filter(|&q| is_prime(q)).collect();
            for (colors, expect) in cases {
                let colors: BTreeSet<i64> = colors.into_iter().collect();
                let expect: BTreeSet<Relation> = expect.into_iter().collect();
                let over_z = palette_relations(&colors, None);
                assert_eq!(over_z, expect, "{colors:?}");
                for &q in &primes {
                    assert_eq!(
                        palette_relations(&colors, Some(q)),
                        expect,
                        "{colors:?} mod {q}"
                    );
                }
            }
            format!("3 palettes, {} primes", primes.len())
        },
    );
}

#[test]
fn c7_prime_palettes() {
    criterion(
        7,
        "no 2-color prime colorings, 3 colors only mod 3",
        Duration::from_secs(30),
        || {
            let mut scanned = 0u64;
            for d in diagrams() {
                for p in [3u64, 5, 7, 11, 13] {
                    for c in enumerate_colorings(&d, p).unwrap() {
                        scanned += 1;
                        if c.is_trivial() {
                            continue;
                        }
                        let size = c.palette().size();
                        assert_ne!(size, 2, "{} {:?}", d.name(), c);
                        if size == 3 {
                            assert_eq!(p, 3, "{} {:?}", d.name(), c);
                        }
                    }
                }
            }
            format!("{scanned} colorings scanned")
        },
    );
}

#[test]
fn c8_minor_oracle() {
    criterion(
        8,
        "every first minor has absolute value det",
        Duration::from_secs(5),
        || {
            let mut minors = 0;
            for d in diagrams() {
                let m = d.coloring_matrix();
                if !m.is_square() || m.rows() == 0 {
                    continue;
                }
                let expect = BigInt::from(det(&d));
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let v = first_minor_oracle(&m, i, j).unwrap();
                        assert_eq!(v.abs(), expect, "{} minor ({i},{j})", d.name());
                        minors += 1;
                    }
                }
            }
            let largest = builtin_torus_2n(11).unwrap().coloring_matrix();
            assert_eq!(
                first_minor_oracle(&largest, 10, 10).unwrap().to_i64(),
                Some(11)
            );
            format!("{minors} minors")
        },
    );
}
