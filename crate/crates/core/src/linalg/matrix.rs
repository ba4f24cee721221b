use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::bareiss_det;
use crate::error::{Error, Result};

/// Largest order accepted by [`IntMatrix::det_leibniz`].
pub const LEIBNIZ_MAX_ORDER: usize = 10;

/// Dense row-major matrix of unbounded integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `f(i, j)` for every position.
    pub fn from_fn<T: Into<BigInt>>(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j).into())
            .collect();
        Self { rows, cols, data }
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(format!(
                "ragged rows: {} vs {c}",
                bad.len()
            )));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A + A^t`.
    pub fn symmetrize(&self) -> Result<Self> {
        self.add(&self.transpose())
    }

    fn same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        bareiss_det(self.to_rows())
    }

    /// Exact determinant by the permutation expansion. Exponential; meant as
    /// an independent check on [`IntMatrix::det`] for small orders.
    pub fn det_leibniz(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n > LEIBNIZ_MAX_ORDER {
            return Err(Error::SizeCapExceeded {
                size: n,
                cap: LEIBNIZ_MAX_ORDER,
            });
        }
        // Heap's algorithm; each step is one transposition.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut counters = vec![0usize; n];
        let mut sign = 1i32;
        let mut total = self.permutation_product(&perm);
        let mut i = 1;
        while i < n {
            if counters[i] < i {
                let swap_with = if i % 2 == 0 { 0 } else { counters[i] };
                perm.swap(swap_with, i);
                sign = -sign;
                let term = self.permutation_product(&perm);
                if sign > 0 {
                    total += term;
                } else {
                    total -= term;
                }
                counters[i] += 1;
                i = 1;
            } else {
                counters[i] = 0;
                i += 1;
            }
        }
        Ok(total)
    }

    fn permutation_product(&self, perm: &[usize]) -> BigInt {
        let mut acc = BigInt::one();
        for (row, &col) in perm.iter().enumerate() {
            let v = &self[(row, col)];
            if v.is_zero() {
                return BigInt::zero();
            }
            acc *= v;
        }
        acc
    }

    pub fn is_unipotent_upper_triangular(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero()))
    }

    /// Inverse of a unipotent upper-triangular matrix by back-substitution.
    /// The inverse is again unipotent upper triangular with integer entries.
    pub fn inverse_unipotent_upper(&self) -> Result<Self> {
        if !self.is_unipotent_upper_triangular() {
            return Err(Error::NotUnipotentUpperTriangular);
        }
        let n = self.rows;
        let mut inv = Self::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = BigInt::zero();
                for k in i + 1..=j {
                    let u = &self[(i, k)];
                    if !u.is_zero() {
                        acc += u * &inv[(k, j)];
                    }
                }
                inv[(i, j)] = -acc;
            }
        }
        Ok(inv)
    }

    /// Parses `rows cols` followed by row-major decimal entries.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(n, line)| line.split_whitespace().map(move |t| (n + 1, t)));
        let mut dim = || -> Result<usize> {
            let (line, tok) = tokens.next().ok_or(Error::Parse {
                line: 1,
                msg: "missing dimensions".into(),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad dimension {tok:?}"),
            })
        };
        let rows = dim()?;
        let cols = dim()?;
        let mut data = Vec::with_capacity(rows * cols);
        for (line, tok) in tokens {
            let v: BigInt = tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad integer {tok:?}"),
            })?;
            data.push(v);
        }
        if data.len() != rows * cols {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {} entries, found {}", rows * cols, data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// The text format read by [`IntMatrix::parse`].
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn plumbing() {
        let i2 = IntMatrix::identity(2);
        assert_eq!(i2.add(&i2).unwrap(), m(&[&[2, 0], &[0, 2]]));
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(
            a.scale(&BigInt::from(-2)),
            m(&[&[-2, -4, -6], &[-8, -10, -12]])
        );
        assert!(matches!(a.add(&i2), Err(Error::ShapeMismatch(_))));
        assert_eq!(a.mul(&a.transpose()).unwrap(), m(&[&[14, 32], &[32, 77]]));
        assert!(matches!(
            a.det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn determinants() {
        assert_eq!(IntMatrix::identity(5).det().unwrap(), BigInt::from(1));
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.det().unwrap(), BigInt::from(4));
        assert_eq!(a.det_leibniz().unwrap(), BigInt::from(4));
        assert_eq!(
            IntMatrix::zeros(0, 0).det_leibniz().unwrap(),
            BigInt::from(1)
        );
        assert!(IntMatrix::identity(11).det_leibniz().is_err());
    }

    #[test]
    fn unipotent_inverse() {
        let z = IntMatrix::from_fn(4, 4, |i, j| i32::from(i <= j));
        let inv = z.inverse_unipotent_upper().unwrap();
        let expected = IntMatrix::from_fn(4, 4, |i, j| {
            if i == j {
                1
            } else if j == i + 1 {
                -1
            } else {
                0
            }
        });
        assert_eq!(inv, expected);
        assert_eq!(z.mul(&inv).unwrap(), IntMatrix::identity(4));
        assert_eq!(
            IntMatrix::identity(4).inverse_unipotent_upper().unwrap(),
            IntMatrix::identity(4)
        );
        assert_eq!(
            m(&[&[1, 0], &[1, 1]]).inverse_unipotent_upper(),
            Err(Error::NotUnipotentUpperTriangular)
        );
        assert_eq!(
            m(&[&[2, 0], &[0, 1]]).inverse_unipotent_upper(),
            Err(Error::NotUnipotentUpperTriangular)
        );
    }

    #[test]
    fn text_round_trip() {
        let a = m(&[&[1, -2], &[30, 4]]);
        let text = a.to_string();
        assert_eq!(text, "2 2\n1 -2\n30 4\n");
        assert_eq!(IntMatrix::parse(&text).unwrap(), a);
        assert!(IntMatrix::parse("2 2\n1 2 3\n").is_err());
        assert!(IntMatrix::parse("2 x\n").is_err());
        assert!(IntMatrix::parse("1 1\nq\n").is_err());
    }
}
