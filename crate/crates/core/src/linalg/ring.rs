//! Fraction-free (Bareiss) elimination over an integral domain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The operations Bareiss elimination needs from an integral domain.
pub trait BareissRing: Clone + Zero + One {
    /// `a * b - c * d`.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self;
    fn negated(self) -> Self;
    /// Quotient `self / divisor`, failing if the division leaves a remainder.
    fn div_exact(&self, divisor: &Self) -> Result<Self>;
}

impl BareissRing for BigInt {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a * b - c * d
    }

    fn negated(self) -> Self {
        -self
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }
}

/// Determinant of a square matrix given as rows, by Bareiss elimination.
///
/// Pivots on the first nonzero entry at or below the diagonal; each row swap
/// flips the sign. A column with no nonzero pivot candidate yields zero.
/// Every division is exact by the Sylvester identity, so an
/// [`Error::InexactDivision`] here means the ring implementation is broken.
pub fn bareiss_det<R: BareissRing>(mut m: Vec<Vec<R>>) -> Result<R> {
    let n = m.len();
    if let Some(row) = m.iter().find(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                let t = R::mul_sub(&row[j], &pivot_row[k], &row[k], &pivot_row[j]);
                row[j] = t.div_exact(&prev)?;
            }
            row[k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.negated() } else { det })
}
