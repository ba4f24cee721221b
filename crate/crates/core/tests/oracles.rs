//! Brute-force oracles, written independently of the library, checked
//! against the library on small inputs.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use poset_zeta::bipoly::{param_zeta_det, param_zeta_det_at, BiPoly, FactoredDet};
use poset_zeta::cycles::CycleEnumerator;
use poset_zeta::families::{gamma_count, modified_stirling_sum, stirling_cycle_number, CycleType};
use poset_zeta::incidence::{mobius_matrix, symmetric_mobius_matrix, symmetric_zeta_matrix};
use poset_zeta::linalg::charpoly;
use poset_zeta::random::random_corpus;
use poset_zeta::{IntMatrix, Poset};

fn sign(perm: &[usize]) -> i128 {
    let inversions = (0..perm.len())
        .tuple_combinations()
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|v| i128::try_from(v).unwrap()).collect())
        .collect()
}

fn leibniz(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    (0..n)
        .permutations(n)
        .map(|p| sign(&p) * (0..n).map(|i| a[i][p[i]]).product::<i128>())
        .sum()
}

/// Coefficients of `det(A - tI)` in ascending powers of `t`, by expanding
/// every permutation term as a polynomial.
fn charpoly_leibniz(a: &[Vec<i128>]) -> Vec<i128> {
    let n = a.len();
    let mut total = vec![0i128; n + 1];
    for p in (0..n).permutations(n) {
        let mut term = vec![sign(&p)];
        for i in 0..n {
            let (c0, c1) = if p[i] == i {
                (a[i][i], -1)
            } else {
                (a[i][p[i]], 0)
            };
            let mut next = vec![0; term.len() + 1];
            for (k, &t) in term.iter().enumerate() {
                next[k] += t * c0;
                next[k + 1] += t * c1;
            }
            term = next;
        }
        for (k, t) in term.into_iter().enumerate() {
            total[k] += t;
        }
    }
    total
}

fn constrained(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    (0..n)
        .permutations(n)
        .filter(|s| (0..n).all(|i| p.leq(i, s[i]) || p.leq(s[i], i)))
        .collect()
}

/// Mobius function by counting chains: `mu(x, y) = sum_k (-1)^k c_k` where
/// `c_k` is the number of chains `x = z_0 < ... < z_k = y`.
fn mobius_by_chains(p: &Poset, x: usize, y: usize) -> i128 {
    if x == y {
        return 1;
    }
    if !p.lt(x, y) {
        return 0;
    }
    let n = p.len();
    // ways[k][z]: chains of length k from x ending at z
    let mut ways = vec![vec![0i128; n]; n + 1];
    ways[0][x] = 1;
    let mut mu = 0;
    for k in 1..=n {
        for z in 0..n {
            for w in 0..n {
                if ways[k - 1][w] != 0 && p.lt(w, z) {
                    ways[k][z] += ways[k - 1][w];
                }
            }
        }
        mu += if k % 2 == 0 { ways[k][y] } else { -ways[k][y] };
    }
    mu
}

fn small_posets() -> Vec<Poset> {
    let mut out: Vec<Poset> = (1..=6).map(Poset::chain).collect();
    out.extend((0..=2).map(|r| Poset::boolean_algebra(r).unwrap()));
    out.extend([6, 8, 12, 30].map(Poset::divisor_poset));
    out.push(Poset::antichain(4));
    out.extend(random_corpus(11, 25, 1, 7));
    out
}

#[test]
fn determinant_matches_leibniz() {
    for p in small_posets() {
        let z = symmetric_zeta_matrix(&p);
        let expected = leibniz(&to_i128(&z));
        assert_eq!(z.det().unwrap(), BigInt::from(expected));
        assert_eq!(
            symmetric_mobius_matrix(&p).det().unwrap(),
            BigInt::from(expected)
        );
    }
}

#[test]
fn mobius_matches_chain_counting() {
    for p in small_posets() {
        let m = mobius_matrix(&p);
        for x in 0..p.len() {
            for y in 0..p.len() {
                assert_eq!(m[(x, y)], BigInt::from(mobius_by_chains(&p, x, y)));
            }
        }
    }
}

#[test]
fn charpoly_matches_expansion() {
    let enumerator = CycleEnumerator::default();
    for p in small_posets() {
        let n = p.len();
        let z = symmetric_zeta_matrix(&p);
        let asc = charpoly_leibniz(&to_i128(&z));
        let expected: Vec<BigInt> = asc.iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(charpoly(&z).unwrap().ascending(), expected);

        // The shifted matrix Z + Z^t - 2I, whose charpoly the cycle formulas give.
        let shifted: Vec<Vec<i128>> = to_i128(&z)
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r[i] -= 2;
                r
            })
            .collect();
        let asc = charpoly_leibniz(&shifted);
        let a: Vec<BigInt> = (0..=n)
            .map(|i| {
                let k = n - i;
                let s = if k % 2 == 0 { 1 } else { -1 };
                BigInt::from(asc[k] * s)
            })
            .collect();
        assert_eq!(
            enumerator.chi_via_permutations(&p).unwrap().coeffs(),
            &a[..]
        );
        assert_eq!(
            enumerator.chi_via_cycle_counts(&p).unwrap().coeffs(),
            &a[..]
        );
    }
}

#[test]
fn constrained_permutations_by_filtering() {
    let enumerator = CycleEnumerator::default();
    for p in small_posets() {
        let brute = constrained(&p);
        let mut ours: Vec<Vec<usize>> = enumerator.snp(&p).unwrap().map(|s| s.mapping).collect();
        ours.sort();
        assert_eq!(ours, brute);
    }
}

#[test]
fn cycle_counts_by_filtering() {
    let enumerator = CycleEnumerator::default();
    for p in small_posets() {
        let n = p.len();
        let perms = constrained(&p);
        for size in 2..=n {
            for parts in poset_zeta::partitions::partitions(size, 2) {
                let brute = perms
                    .iter()
                    .filter(|s| {
                        let nontrivial: Vec<usize> =
                            cycle_lengths(s).into_iter().filter(|&l| l > 1).collect();
                        nontrivial == parts
                    })
                    .count() as u128;
                assert_eq!(enumerator.f_count(&p, &parts).unwrap(), brute, "{parts:?}");
            }
        }
    }
}

#[test]
fn c_vector_by_filtering() {
    let enumerator = CycleEnumerator::default();
    for p in small_posets() {
        let n = p.len();
        let mut c = vec![0u128; n];
        for s in constrained(&p) {
            let lengths = cycle_lengths(&s);
            let fixed = lengths.iter().filter(|&&l| l == 1).count();
            c[lengths.len() - 1] += 1 << fixed;
        }
        assert_eq!(enumerator.c_coefficients(&p).unwrap(), c);
        let det = leibniz(&to_i128(&symmetric_zeta_matrix(&p)));
        assert_eq!(enumerator.theorem2_det(&p).unwrap(), BigInt::from(det));
    }
}

#[test]
fn rank_two_boolean_worked_example() {
    let p = Poset::boolean_algebra(2).unwrap();
    assert_eq!((0..4).permutations(4).count(), 24);
    let perms = constrained(&p);
    // every permutation except those moving one atom onto the other
    assert_eq!(perms.len(), 14);
    let mut c = [0u128; 4];
    for s in &perms {
        let lengths = cycle_lengths(s);
        let fixed = lengths.iter().filter(|&&l| l == 1).count();
        c[lengths.len() - 1] += 1 << fixed;
    }
    assert_eq!(c, [2, 10, 20, 16]);
    let det: i128 = c
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            if (3 - k) % 2 == 0 {
                v as i128
            } else {
                -(v as i128)
            }
        })
        .sum();
    assert_eq!(det, 4);
}

#[test]
fn cycle_type_counts_by_enumeration() {
    for n in 1..=6usize {
        let mut by_type = std::collections::HashMap::<Vec<usize>, u64>::new();
        let mut by_cycles = vec![0u64; n + 1];
        for perm in (0..n).permutations(n) {
            let lengths = cycle_lengths(&perm);
            by_cycles[lengths.len()] += 1;
            *by_type.entry(lengths).or_default() += 1;
        }
        for (lengths, count) in &by_type {
            let t = CycleType::from_lengths(n, lengths);
            assert_eq!(gamma_count(n, &t).unwrap(), BigUint::from(*count));
        }
        for (m, &count) in by_cycles.iter().enumerate() {
            assert_eq!(stirling_cycle_number(n, m), BigUint::from(count));
        }
    }
    assert_eq!(stirling_cycle_number(4, 2), BigUint::from(11u32));
    assert_eq!(stirling_cycle_number(5, 1), BigUint::from(24u32));
    let two_two = CycleType::from_lengths(4, &[2, 2]);
    assert_eq!(gamma_count(4, &two_two).unwrap(), BigUint::from(3u32));
    let four = CycleType::from_lengths(4, &[4]);
    assert_eq!(gamma_count(4, &four).unwrap(), BigUint::from(6u32));
}

#[test]
fn modified_stirling_by_enumeration() {
    for n in 1..=7usize {
        let brute: i128 = (0..n)
            .permutations(n)
            .map(|perm| {
                let lengths = cycle_lengths(&perm);
                let fixed = lengths.iter().filter(|&&l| l == 1).count() as u32;
                let s = if (n - lengths.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                s * 2i128.pow(fixed)
            })
            .sum();
        assert_eq!(modified_stirling_sum(n), BigInt::from(brute));
        assert_eq!(brute, n as i128 + 1);
    }
}

#[test]
fn boolean_relation_counts_by_subsets() {
    for r in 0..=6usize {
        let p = Poset::boolean_algebra(r).unwrap();
        let mut strict = 0;
        for s in 0..1usize << r {
            for t in 0..1usize << r {
                let subset = s & !t == 0;
                assert_eq!(p.leq(s, t), subset);
                if subset && s != t {
                    strict += 1;
                }
            }
        }
        assert_eq!(p.strict_relation_size(), strict);
    }
    assert_eq!(
        Poset::boolean_algebra(3).unwrap().strict_relation_size(),
        19
    );
}

#[test]
fn bivariate_determinant_at_integer_points() {
    for rank in 1..=3 {
        let z = poset_zeta::incidence::zeta_matrix(&Poset::boolean_algebra(rank).unwrap());
        let zi = to_i128(&z);
        let det = param_zeta_det(rank).unwrap();
        let predicted = FactoredDet::predicted(rank);
        for (x, y) in [(1, 1), (2, -1), (3, 5), (-4, 7), (0, 2), (6, 1)] {
            let n = zi.len();
            let m: Vec<Vec<i128>> = (0..n)
                .map(|i| (0..n).map(|j| x * zi[i][j] + y * zi[j][i]).collect())
                .collect();
            let expected = BigInt::from(leibniz(&m));
            let (bx, by) = (BigInt::from(x), BigInt::from(y));
            assert_eq!(det.eval(&bx, &by), expected, "rank {rank} at ({x}, {y})");
            assert_eq!(predicted.eval(&bx, &by), expected);
            assert_eq!(param_zeta_det_at(rank, &bx, &by).unwrap(), expected);
        }
    }
}

#[test]
fn table_rows_by_hand() {
    let x = BiPoly::x;
    let y = BiPoly::y;
    let plus = &x() + &y();
    let minus = &x() - &y();
    let q_plus = &(&x().pow(2) + &(&x() * &y())) + &y().pow(2);
    let q_minus = &(&x().pow(2) - &(&x() * &y())) + &y().pow(2);
    assert_eq!(param_zeta_det(1).unwrap(), q_plus);
    assert_eq!(param_zeta_det(2).unwrap(), &plus.pow(2) * &q_minus);
    assert_eq!(param_zeta_det(3).unwrap(), &minus.pow(2) * &q_plus.pow(3));
}
