use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::ring::bareiss_det;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Characteristic polynomial `chi(t) = det(A - tI)` written as
/// `sum_i a_i (-t)^(n-i)`.
///
/// Coefficients are kept in that signed-power convention so they line up
/// with cycle-count formulas term by term; [`CharPoly::ascending`] converts
/// to ordinary powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    a: Vec<BigInt>,
}

impl CharPoly {
    /// From `a_0..a_n`.
    pub fn new(a: Vec<BigInt>) -> Self {
        assert!(!a.is_empty(), "a characteristic polynomial has a_0");
        Self { a }
    }

    pub fn from_i64(a: &[i64]) -> Self {
        Self::new(a.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// From ascending coefficients of `t` (index `k` holds the `t^k`
    /// coefficient) for a polynomial of degree `n`.
    pub fn from_ascending(n: usize, coeffs: &[BigInt]) -> Self {
        let a = (0..=n)
            .map(|i| {
                let k = n - i;
                let c = coeffs.get(k).cloned().unwrap_or_default();
                if k.is_multiple_of(2) {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Self { a }
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    /// `a_0..a_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.a
    }

    /// Coefficients of `t^0..t^n`.
    pub fn ascending(&self) -> Vec<BigInt> {
        let n = self.degree();
        (0..=n)
            .map(|k| {
                let c = self.a[n - k].clone();
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect()
    }

    /// `sum_i a_i (-t)^(n-i)`.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let minus_t = -t;
        self.a
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * &minus_t + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let show_coeff = !mag.is_one() || power == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "(-t)")?,
                p => write!(f, "(-t)^{p}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial by Bareiss elimination over `Z[t]`.
pub fn charpoly(a: &IntMatrix) -> Result<CharPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let t = UPoly::t();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = UPoly::constant(a[(i, j)].clone());
                    if i == j {
                        &entry - &t
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(rows)?;
    Ok(CharPoly::from_ascending(n, det.coeffs()))
}

/// Characteristic polynomial by evaluating `det(A - kI)` at `k = 0..=n` and
/// interpolating exactly (Newton divided differences over the rationals).
pub fn charpoly_by_interpolation(a: &IntMatrix) -> Result<CharPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let shifted = a.sub(&IntMatrix::identity(n).scale(&BigInt::from(k)))?;
        values.push(BigRational::from_integer(shifted.det()?));
    }
    // Divided differences at nodes 0..=n.
    let mut dd = values;
    for level in 1..=n {
        for i in (level..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Expand the Newton form into ascending coefficients.
    let mut poly = vec![BigRational::zero(); n + 1];
    for (level, c) in dd.iter().enumerate().rev() {
        // poly <- poly * (t - level) + c
        let shift = BigRational::from_integer(BigInt::from(level));
        let mut next = vec![BigRational::zero(); n + 1];
        for (k, p) in poly.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if k < n {
                next[k + 1] += p;
            }
            next[k] -= p * &shift;
        }
        next[0] += c;
        poly = next;
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for c in poly {
        if !c.is_integer() {
            return Err(Error::InternalMismatch(
                "interpolated characteristic polynomial has a fractional coefficient".into(),
            ));
        }
        coeffs.push(c.to_integer());
    }
    Ok(CharPoly::from_ascending(n, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convention_round_trip() {
        // chi(t) = t^4 - 5t^2 - 4t  <=>  (-t)^4 - 5(-t)^2 + 4(-t)
        let c = CharPoly::from_i64(&[1, 0, -5, 4, 0]);
        let asc: Vec<BigInt> = [0, -4, -5, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(c.ascending(), asc);
        assert_eq!(CharPoly::from_ascending(4, &asc), c);
        assert_eq!(c.to_string(), "(-t)^4 - 5(-t)^2 + 4(-t)");
        assert_eq!(c.eval(&BigInt::from(-2)), BigInt::from(4));
        assert_eq!(c.eval(&BigInt::from(0)), BigInt::from(0));
        assert_eq!(CharPoly::from_i64(&[0]).to_string(), "0");
    }

    #[test]
    fn zero_matrix() {
        let z = IntMatrix::zeros(3, 3);
        assert_eq!(charpoly(&z).unwrap(), CharPoly::from_i64(&[1, 0, 0, 0]));
        assert_eq!(
            charpoly_by_interpolation(&z).unwrap(),
            CharPoly::from_i64(&[1, 0, 0, 0])
        );
    }

    #[test]
    fn routes_agree_on_a_dense_matrix() {
        let a = IntMatrix::from_fn(5, 5, |i, j| (3 * i as i64 - 2 * j as i64 + 1) % 7);
        let c = charpoly(&a).unwrap();
        assert_eq!(c, charpoly_by_interpolation(&a).unwrap());
        assert_eq!(c.coeffs()[0], BigInt::one());
        // chi(0) = det(A)
        assert_eq!(c.eval(&BigInt::zero()), a.det().unwrap());
    }

    #[test]
    fn empty_matrix() {
        let c = charpoly(&IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!(c, CharPoly::from_i64(&[1]));
    }

    #[test]
    fn not_square() {
        assert!(charpoly(&IntMatrix::zeros(2, 3)).is_err());
        assert!(charpoly_by_interpolation(&IntMatrix::zeros(2, 3)).is_err());
    }
}
