//! The incidence algebra of a finite poset.
//!
//! An [`IncidenceFunction`] assigns an exact rational to every pair
//! `x_i <= x_j`. Pairs that are not comparable are outside its domain: asking
//! for them is an error rather than an implicit zero. [`matrix_of`] is where
//! the zero fill happens.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poset::Poset;

/// A function on the intervals of a poset.
#[derive(Clone, Debug)]
pub struct IncidenceFunction<'p> {
    poset: &'p Poset,
    values: BTreeMap<(usize, usize), BigRational>,
}

/// A function on the elements of a poset.
#[derive(Clone, Debug)]
pub struct PointFunction<'p> {
    poset: &'p Poset,
    values: Vec<BigRational>,
}

fn same_poset(a: &Poset, b: &Poset) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'p> IncidenceFunction<'p> {
    /// Evaluates `f(i, j)` on every comparable pair `x_i <= x_j`.
    pub fn from_fn<T: Into<BigRational>>(
        poset: &'p Poset,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut values = BTreeMap::new();
        for i in 0..poset.len() {
            for j in poset.up_set(i) {
                values.insert((i, j), f(i, j).into());
            }
        }
        Self { poset, values }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&BigRational> {
        self.values.get(&(i, j)).ok_or(Error::NotComparable(i, j))
    }

    /// Overwrites `f(i, j)`; the pair must be comparable.
    pub fn set(&mut self, i: usize, j: usize, value: BigRational) -> Result<()> {
        match self.values.get_mut(&(i, j)) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::NotComparable(i, j)),
        }
    }

    /// All `((i, j), f(i, j))` in lexicographic order of the pair.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.values.iter()
    }

    /// `(fg)(x, y) = sum_{x <= z <= y} f(x, z) g(z, y)`.
    pub fn convolve(&self, other: &IncidenceFunction<'_>) -> Result<IncidenceFunction<'p>> {
        if !same_poset(self.poset, other.poset) {
            return Err(Error::PosetMismatch);
        }
        let p = self.poset;
        Ok(Self::from_fn(p, |x, y| {
            let mut acc = BigRational::zero();
            for z in x..=y {
                if p.leq(x, z) && p.leq(z, y) {
                    acc += &self.values[&(x, z)] * &other.values[&(z, y)];
                }
            }
            acc
        }))
    }
}

impl PartialEq for IncidenceFunction<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_poset(self.poset, other.poset) && self.values == other.values
    }
}

/// The identity of the incidence algebra.
pub fn delta(p: &Poset) -> IncidenceFunction<'_> {
    IncidenceFunction::from_fn(p, |i, j| BigInt::from(i32::from(i == j)))
}

pub fn zeta(p: &Poset) -> IncidenceFunction<'_> {
    IncidenceFunction::from_fn(p, |_, _| BigInt::one())
}

/// The Möbius function by its defining recursion
/// `mu(x, x) = 1`, `mu(x, y) = -sum_{x <= z < y} mu(x, z)`.
///
/// This never inverts a matrix, so it can be checked against
/// [`IntMatrix::inverse_unipotent_upper`].
pub fn mobius(p: &Poset) -> IncidenceFunction<'_> {
    let mut values = BTreeMap::new();
    for x in 0..p.len() {
        // Under an admissible labelling z < y implies index z < index y, so
        // ascending order visits every z before y.
        let above = p.up_set(x);
        let mut row: Vec<(usize, BigInt)> = Vec::with_capacity(above.len());
        for &y in &above {
            let value = if y == x {
                BigInt::one()
            } else {
                let s: BigInt = row
                    .iter()
                    .filter(|(z, _)| p.leq(*z, y))
                    .map(|(_, m)| m)
                    .sum();
                -s
            };
            row.push((y, value));
        }
        for (y, value) in row {
            values.insert((x, y), BigRational::from_integer(value));
        }
    }
    IncidenceFunction { poset: p, values }
}

/// The `n x n` matrix of an integer-valued incidence function, zero on
/// incomparable pairs.
pub fn matrix_of(f: &IncidenceFunction<'_>) -> Result<IntMatrix> {
    let n = f.poset.len();
    let mut m = IntMatrix::zeros(n, n);
    for (&(i, j), v) in &f.values {
        if !v.is_integer() {
            return Err(Error::NonIntegerValues(i, j));
        }
        m[(i, j)] = v.to_integer();
    }
    Ok(m)
}

/// `Z_P`, built directly from the order relation.
pub fn zeta_matrix(p: &Poset) -> IntMatrix {
    IntMatrix::from_fn(p.len(), p.len(), |i, j| i32::from(p.leq(i, j)))
}

/// `Z_P + Z_P^t`.
pub fn symmetric_zeta_matrix(p: &Poset) -> IntMatrix {
    let n = p.len();
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            2
        } else {
            i32::from(p.comparable(i, j))
        }
    })
}

/// `M_P`, the matrix of the Möbius function.
pub fn mobius_matrix(p: &Poset) -> IntMatrix {
    matrix_of(&mobius(p)).expect("the Möbius function is integer valued")
}

/// `M_P + M_P^t`.
pub fn symmetric_mobius_matrix(p: &Poset) -> IntMatrix {
    mobius_matrix(p)
        .symmetrize()
        .expect("square matrices symmetrize")
}

impl<'p> PointFunction<'p> {
    pub fn new(poset: &'p Poset, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a poset on {} elements",
                values.len(),
                poset.len()
            )));
        }
        Ok(Self { poset, values })
    }

    pub fn from_fn<T: Into<BigRational>>(poset: &'p Poset, f: impl FnMut(usize) -> T) -> Self {
        let values = (0..poset.len()).map(f).map(Into::into).collect();
        Self { poset, values }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// `g(x) = sum_{y <= x} f(y)`.
    pub fn downward_sum(&self) -> PointFunction<'p> {
        let p = self.poset;
        Self::from_fn(p, |x| {
            (0..=x)
                .filter(|&y| p.leq(y, x))
                .map(|y| &self.values[y])
                .sum::<BigRational>()
        })
    }

    /// `f(x) = sum_{y <= x} g(y) mu(y, x)`, the inverse of
    /// [`PointFunction::downward_sum`].
    pub fn mobius_invert(&self) -> PointFunction<'p> {
        self.mobius_invert_with(&mobius(self.poset))
            .expect("mobius() is defined on the same poset")
    }

    /// As [`PointFunction::mobius_invert`] with a precomputed Möbius function.
    pub fn mobius_invert_with(&self, mu: &IncidenceFunction<'_>) -> Result<PointFunction<'p>> {
        if !same_poset(self.poset, mu.poset) {
            return Err(Error::PosetMismatch);
        }
        let p = self.poset;
        Ok(Self::from_fn(p, |x| {
            let mut acc = BigRational::zero();
            for y in (0..=x).filter(|&y| p.leq(y, x)) {
                acc += &self.values[y] * &mu.values[&(y, x)];
            }
            acc
        }))
    }
}

impl PartialEq for PointFunction<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_poset(self.poset, other.poset) && self.values == other.values
    }
}
