//! Closed forms for chains and boolean algebras.
//!
//! For the chain on `n` elements `det(Z + Z^t) = n + 1`. For the boolean
//! algebra of rank `n` the determinant vanishes when `n >= 3` is odd and is
//! `2^alpha_n` when `n` is even, where `alpha_n` satisfies
//! `alpha_{n+2} = 2 alpha_n + alpha_{n+1}` with `alpha_1 = 0`, `alpha_2 = 2`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::incidence::{symmetric_zeta_matrix, zeta_matrix};
use crate::linalg::IntMatrix;
use crate::partitions::partitions;
use crate::poset::Poset;

/// Largest rank for the explicit structure checks on `2^rank x 2^rank`
/// matrices.
pub const STRUCTURE_CHECK_MAX_RANK: usize = 10;

/// Largest rank accepted by [`boolean_det_closed_form`]; `2^alpha_24` already
/// has several million bits.
pub const CLOSED_FORM_MAX_RANK: usize = 24;

/// `det(Z + Z^t)` for the chain on `n` elements.
pub fn chain_det_closed_form(n: usize) -> BigInt {
    BigInt::from(n) + 1
}

/// Numbers of cycles of each length: `gamma[i - 1]` cycles of length `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    gamma: Vec<usize>,
}

impl CycleType {
    pub fn new(gamma: Vec<usize>) -> Self {
        Self { gamma }
    }

    /// From a list of cycle lengths.
    pub fn from_lengths(n: usize, lengths: &[usize]) -> Self {
        let mut gamma = vec![0; n];
        for &l in lengths {
            gamma[l - 1] += 1;
        }
        Self { gamma }
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    /// `sum_i i * gamma_i`.
    pub fn size(&self) -> usize {
        self.gamma
            .iter()
            .enumerate()
            .map(|(i, g)| (i + 1) * g)
            .sum()
    }

    /// `sum_i gamma_i`.
    pub fn cycle_count(&self) -> usize {
        self.gamma.iter().sum()
    }

    /// Fixed points, `gamma_1`.
    pub fn fixed_points(&self) -> usize {
        self.gamma.first().copied().unwrap_or(0)
    }
}

/// All cycle types of permutations of `n` elements.
pub fn cycle_types(n: usize) -> impl Iterator<Item = CycleType> {
    partitions(n, 1)
        .into_iter()
        .map(move |parts| CycleType::from_lengths(n, &parts))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of permutations of `n` elements with cycle type `t`:
/// `n! / prod_i (i^gamma_i gamma_i!)`.
pub fn gamma_count(n: usize, t: &CycleType) -> Result<BigUint> {
    if t.size() != n {
        return Err(Error::InvalidCycleType(format!(
            "cycle lengths sum to {}, expected {n}",
            t.size()
        )));
    }
    let denominator = t
        .gamma
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (i, &g)| {
            acc * BigUint::from(i + 1).pow(g as u32) * factorial(g)
        });
    let (q, r) = factorial(n).div_rem(&denominator);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Permutations of `n` elements with exactly `m` cycles, summed from
/// [`gamma_count`] over cycle types.
///
/// These are the unsigned Stirling numbers of the first kind, although they
/// are sometimes introduced under the name "second kind" in this setting.
pub fn stirling_cycle_number(n: usize, m: usize) -> BigUint {
    cycle_types(n)
        .filter(|t| t.cycle_count() == m)
        .map(|t| gamma_count(n, &t).expect("cycle types of n have size n"))
        .sum()
}

/// `sum_{i=1}^n (-1)^{n-i} sum_{types with i cycles} Gamma(n; gamma) 2^{gamma_1}`,
/// evaluated term by term. Equals `n + 1`.
pub fn modified_stirling_sum(n: usize) -> BigInt {
    let mut by_cycles = vec![BigInt::zero(); n + 1];
    for t in cycle_types(n) {
        let weight =
            BigInt::from(gamma_count(n, &t).expect("valid cycle type")) << t.fixed_points();
        by_cycles[t.cycle_count()] += weight;
    }
    by_cycles
        .into_iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::zero(), |acc, (i, c)| {
            if (n - i).is_multiple_of(2) {
                acc + c
            } else {
                acc - c
            }
        })
}

fn check_structure_rank(rank: usize) -> Result<()> {
    if rank > STRUCTURE_CHECK_MAX_RANK {
        Err(Error::RankTooLarge {
            rank,
            cap: STRUCTURE_CHECK_MAX_RANK,
        })
    } else {
        Ok(())
    }
}

/// Whether every entry of the rank-`rank` boolean zeta matrix on or above the
/// diagonal is `binom(j, i) mod 2` (0-based), and everything below is zero.
/// Binomials are built exactly, row by row of Pascal's triangle.
pub fn pascal_mod2_check(rank: usize) -> Result<bool> {
    check_structure_rank(rank)?;
    let z = zeta_matrix(&Poset::boolean_algebra(rank)?);
    let size = 1usize << rank;
    let mut pascal_row = vec![BigUint::one()];
    for j in 0..size {
        // pascal_row = binom(j, 0..=j)
        for i in 0..size {
            let expected = if i <= j {
                u32::from(pascal_row[i].is_odd())
            } else {
                0
            };
            if z[(i, j)] != BigInt::from(expected) {
                return Ok(false);
            }
        }
        let mut next = Vec::with_capacity(j + 2);
        next.push(BigUint::one());
        for w in pascal_row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        pascal_row = next;
    }
    Ok(true)
}

/// Replaces every entry `e` by the block `e * (1 1; 0 1)`, taking the
/// rank-`r` boolean zeta matrix to rank `r + 1`.
pub fn inflate_2x2(z: &IntMatrix) -> Result<IntMatrix> {
    if !z.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "inflate_2x2 expects a square matrix, got {}x{}",
            z.rows(),
            z.cols()
        )));
    }
    let n = z.rows();
    Ok(IntMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let block = [[1, 1], [0, 1]][i % 2][j % 2];
        &z[(i / 2, j / 2)] * block
    }))
}

fn block(m: &IntMatrix, bi: usize, bj: usize, size: usize) -> IntMatrix {
    IntMatrix::from_fn(size, size, |i, j| m[(bi * size + i, bj * size + j)].clone())
}

/// Checks, for one rank `>= 1`, that
/// `Z_n = (Z_{n-1} Z_{n-1}; 0 Z_{n-1})`,
/// `Z_n + Z_n^t = (S_{n-1} Z_{n-1}; Z_{n-1}^t S_{n-1})` with
/// `S = Z + Z^t`, and that inflating `Z_{n-1}` gives `Z_n`.
/// Rank 0 uses `Z_0 = (1)` and `S_0 = (2)`.
pub fn block_decomposition_check(rank: usize) -> Result<bool> {
    if rank == 0 {
        return Err(Error::RankTooLarge { rank, cap: 0 });
    }
    check_structure_rank(rank)?;
    let prev = Poset::boolean_algebra(rank - 1)?;
    let cur = Poset::boolean_algebra(rank)?;
    let (zp, sp) = (zeta_matrix(&prev), symmetric_zeta_matrix(&prev));
    let (z, s) = (zeta_matrix(&cur), symmetric_zeta_matrix(&cur));
    let h = zp.rows();
    let zero = IntMatrix::zeros(h, h);
    let zeta_ok = block(&z, 0, 0, h) == zp
        && block(&z, 0, 1, h) == zp
        && block(&z, 1, 0, h) == zero
        && block(&z, 1, 1, h) == zp;
    let sym_ok = block(&s, 0, 0, h) == sp
        && block(&s, 0, 1, h) == zp
        && block(&s, 1, 0, h) == zp.transpose()
        && block(&s, 1, 1, h) == sp;
    let inflate_ok = inflate_2x2(&zp)? == z;
    Ok(zeta_ok && sym_ok && inflate_ok)
}

/// Exponents in
/// `det(x Z_n + y Z_n^t) = (x + (-1)^n y)^alpha (x^2 - (-1)^n xy + y^2)^beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaBeta {
    pub n: usize,
    pub alpha: BigUint,
    pub beta: BigUint,
}

/// `alpha_n`, `beta_n` from the recurrence
/// `a_{n+2} = 2 a_n + a_{n+1}` with `alpha_1 = 0, alpha_2 = 2`,
/// `beta_1 = beta_2 = 1`. Also checks the closed form
/// `alpha_n = (2^n + 2 (-1)^n) / 3`.
pub fn alpha_beta(n: usize) -> AlphaBeta {
    assert!(n >= 1, "alpha_n and beta_n start at n = 1");
    let (mut a, mut a_next) = (BigUint::zero(), BigUint::from(2u32));
    let (mut b, mut b_next) = (BigUint::one(), BigUint::one());
    for _ in 1..n {
        let a2 = &a * 2u32 + &a_next;
        let b2 = &b * 2u32 + &b_next;
        a = std::mem::replace(&mut a_next, a2);
        b = std::mem::replace(&mut b_next, b2);
    }
    assert_eq!(a, alpha_closed_form(n), "alpha recurrence vs closed form");
    AlphaBeta {
        n,
        alpha: a,
        beta: b,
    }
}

/// `(2^n + 2 (-1)^n) / 3`.
pub fn alpha_closed_form(n: usize) -> BigUint {
    let pow = BigUint::one() << n;
    let numerator = if n.is_multiple_of(2) {
        pow + 2u32
    } else {
        pow - 2u32
    };
    numerator / 3u32
}

/// `det(Z_n + Z_n^t)` for the boolean algebra of rank `n`, from the
/// factorization evaluated at `x = y = 1`:
/// `0` for odd `n >= 3`, `2^alpha_n` for even `n`, `3` for `n = 1`, and
/// `2` for `n = 0` (the `1 x 1` matrix `(2)`).
pub fn boolean_det_closed_form(n: usize) -> Result<BigInt> {
    if n > CLOSED_FORM_MAX_RANK {
        return Err(Error::RankTooLarge {
            rank: n,
            cap: CLOSED_FORM_MAX_RANK,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(2));
    }
    let ab = alpha_beta(n);
    if n % 2 == 1 {
        // (1 - 1)^alpha * 3^beta
        return Ok(if ab.alpha.is_zero() {
            BigInt::from(3u32).pow(ab.beta.to_u32().expect("small beta"))
        } else {
            BigInt::zero()
        });
    }
    assert_eq!(
        ab.alpha,
        ((BigUint::one() << n) + 2u32) / 3u32,
        "even alpha vs (2^n + 2) / 3"
    );
    if n >= 4 {
        let prev = alpha_beta(n - 2).alpha;
        assert_eq!(ab.alpha, prev * 4u32 - 2u32, "alpha_n = 4 alpha_(n-2) - 2");
    }
    let exponent = ab.alpha.to_usize().expect("capped rank");
    Ok(BigInt::one() << exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn chain_closed_form() {
        assert_eq!(chain_det_closed_form(1), BigInt::from(2));
        assert_eq!(chain_det_closed_form(2), BigInt::from(3));
        assert_eq!(chain_det_closed_form(7), BigInt::from(8));
    }

    #[test]
    fn gamma_counts() {
        assert_eq!(
            gamma_count(4, &CycleType::new(vec![2, 1, 0, 0])).unwrap(),
            u(6)
        );
        assert_eq!(
            gamma_count(3, &CycleType::new(vec![3, 0, 0])).unwrap(),
            u(1)
        );
        assert!(matches!(
            gamma_count(4, &CycleType::new(vec![1, 1, 0, 0])),
            Err(Error::InvalidCycleType(_))
        ));
        for n in 0..=8 {
            let total: BigUint = cycle_types(n).map(|t| gamma_count(n, &t).unwrap()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(stirling_cycle_number(4, 2), u(11));
        assert_eq!(stirling_cycle_number(5, 1), u(24));
        for n in 1..=8 {
            assert_eq!(stirling_cycle_number(n, n), u(1));
        }
    }

    #[test]
    fn modified_sum() {
        assert_eq!(modified_stirling_sum(1), BigInt::from(2));
        assert_eq!(modified_stirling_sum(3), BigInt::from(4));
        assert_eq!(modified_stirling_sum(10), BigInt::from(11));
    }

    #[test]
    fn pascal() {
        for r in 1..=5 {
            assert!(pascal_mod2_check(r).unwrap());
        }
        assert!(pascal_mod2_check(11).is_err());
    }

    #[test]
    fn inflation() {
        let z0 = IntMatrix::identity(1);
        let z1 = inflate_2x2(&z0).unwrap();
        assert_eq!(z1, IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap());
        assert_eq!(
            inflate_2x2(&z1).unwrap(),
            zeta_matrix(&Poset::boolean_algebra(2).unwrap())
        );
        assert!(inflate_2x2(&IntMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn blocks() {
        for r in 1..=6 {
            assert!(block_decomposition_check(r).unwrap(), "rank {r}");
        }
        assert!(block_decomposition_check(0).is_err());
    }

    #[test]
    fn alpha_beta_table() {
        let expect = [(1, 0, 1), (2, 2, 1), (3, 2, 3), (4, 6, 5), (5, 10, 11)];
        for (n, a, b) in expect {
            let ab = alpha_beta(n);
            assert_eq!((ab.alpha, ab.beta), (u(a), u(b)), "n = {n}");
        }
        for n in 1..=20 {
            let ab = alpha_beta(n);
            let diff = BigInt::from(ab.alpha) - BigInt::from(ab.beta);
            // The table's base cases force (-1)^n here, not (-1)^(n+1).
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(diff, BigInt::from(expected), "n = {n}");
        }
        let first = alpha_beta(1);
        assert_ne!(
            BigInt::from(first.alpha) - BigInt::from(first.beta),
            BigInt::one()
        );
    }

    #[test]
    fn boolean_closed_form() {
        assert_eq!(boolean_det_closed_form(0).unwrap(), BigInt::from(2));
        assert_eq!(boolean_det_closed_form(1).unwrap(), BigInt::from(3));
        assert_eq!(boolean_det_closed_form(2).unwrap(), BigInt::from(4));
        assert_eq!(boolean_det_closed_form(4).unwrap(), BigInt::from(64));
        assert_eq!(boolean_det_closed_form(6).unwrap(), BigInt::one() << 22);
        for n in [3, 5, 7] {
            assert_eq!(boolean_det_closed_form(n).unwrap(), BigInt::zero());
        }
        assert_eq!(boolean_det_closed_form(8).unwrap(), BigInt::one() << 86);
        assert!(boolean_det_closed_form(25).is_err());
    }
}
