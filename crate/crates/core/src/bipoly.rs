//! Bivariate integer polynomials and the determinant of `x Z_n + y Z_n^t`.
//!
//! For the boolean algebra of rank `n` this determinant factors as
//! `(x + (-1)^n y)^alpha_n (x^2 - (-1)^n xy + y^2)^beta_n`, and successive
//! ranks satisfy `D_{n+2}(x, y) = D_n(x, y)^2 D_{n+1}(x, -y)`. Both facts are
//! checked here by exact polynomial arithmetic, never by factoring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::{alpha_beta, AlphaBeta};
use crate::incidence::zeta_matrix;
use crate::linalg::{bareiss_det, BareissRing, IntMatrix};
use crate::poset::Poset;

/// Largest rank for symbolic elimination of `x Z + y Z^t` (a 32 x 32
/// polynomial matrix at rank 5).
pub const PARAM_DET_MAX_RANK: usize = 5;

/// Largest rank for integer evaluations of `x0 Z + y0 Z^t`.
pub const PARAM_EVAL_MAX_RANK: usize = 9;

/// `x^dx y^dy`, ordered graded-lexicographically with `x > y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub dx: u32,
    pub dy: u32,
}

impl Monomial {
    pub fn degree(self) -> u32 {
        self.dx + self.dy
    }

    fn divides(self, other: Monomial) -> bool {
        self.dx <= other.dx && self.dy <= other.dy
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.dx.cmp(&other.dx))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse bivariate polynomial over the integers. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `c x^dx y^dy`.
    pub fn monomial(dx: u32, dy: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial { dx, dy }, c.into());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.last_key_value().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `x^dx y^dy`.
    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms
            .get(&Monomial { dx, dy })
            .cloned()
            .unwrap_or_default()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    /// `(dx, dy, coefficient)` triples in decreasing graded-lex order with
    /// coefficients as decimal strings.
    pub fn to_triples(&self) -> Vec<(u32, u32, String)> {
        self.terms()
            .map(|(m, c)| (m.dx, m.dy, c.to_string()))
            .collect()
    }

    pub fn from_triples(triples: &[(u32, u32, String)]) -> Result<Self> {
        let mut p = Self::zero();
        for (dx, dy, c) in triples {
            let c: BigInt = c.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad coefficient {c:?}"),
            })?;
            p.add_term(Monomial { dx: *dx, dy: *dy }, c);
        }
        Ok(p)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| c * x.pow(m.dx) * y.pow(m.dy))
            .sum()
    }

    /// `p(x, -y)`.
    pub fn negate_y(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.dy % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `p(y, x)`.
    pub fn swap_xy(&self) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            p.add_term(Monomial { dx: m.dy, dy: m.dx }, c.clone());
        }
        p
    }

    /// Exact quotient by multivariate division on leading terms.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lead_m, lead_c) = divisor.leading().ok_or(Error::InexactDivision)?;
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading() {
            if !lead_m.divides(m) {
                return Err(Error::InexactDivision);
            }
            let (q, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let qm = Monomial {
                dx: m.dx - lead_m.dx,
                dy: m.dy - lead_m.dy,
            };
            for (dm, dc) in &divisor.terms {
                rem.add_term(
                    Monomial {
                        dx: qm.dx + dm.dx,
                        dy: qm.dy + dm.dy,
                    },
                    -(&q * dc),
                );
            }
            quot.add_term(qm, q);
        }
        Ok(quot)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(
                    Monomial {
                        dx: ma.dx + mb.dx,
                        dy: ma.dy + mb.dy,
                    },
                    ca * cb,
                );
            }
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(1)
    }
}

impl BareissRing for BiPoly {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let mut out = a * b;
        for (ma, ca) in &c.terms {
            for (mb, cb) in &d.terms {
                out.add_term(
                    Monomial {
                        dx: ma.dx + mb.dx,
                        dy: ma.dy + mb.dy,
                    },
                    -(ca * cb),
                );
            }
        }
        out
    }

    fn negated(self) -> Self {
        -&self
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        BiPoly::div_exact(self, divisor)
    }
}

/// Graded-lex from the top, e.g. `x^2 + x*y + y^2`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (var, d) in [("x", m.dx), ("y", m.dy)] {
                match d {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    d => factors.push(format!("{var}^{d}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Dense matrix of bivariate polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BiPoly>,
}

impl BiPolyMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BiPoly) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn det(&self) -> Result<BiPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rows = self
            .entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[BiPoly]>::to_vec)
            .collect();
        bareiss_det(rows)
    }

    /// Substitutes integers for `x` and `y` entrywise.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(x, y))
    }
}

/// `x Z_n + y Z_n^t` for the boolean algebra of rank `n`.
pub fn param_zeta_matrix(rank: usize) -> Result<BiPolyMatrix> {
    let z = zeta_matrix(&Poset::boolean_algebra(rank)?);
    let n = z.rows();
    let (x, y) = (BiPoly::x(), BiPoly::y());
    let coeff = |v: &BigInt, var: &BiPoly| {
        if v.is_zero() {
            BiPoly::zero()
        } else {
            var * &BiPoly::constant(v.clone())
        }
    };
    Ok(BiPolyMatrix::from_fn(n, n, |i, j| {
        &coeff(&z[(i, j)], &x) + &coeff(&z[(j, i)], &y)
    }))
}

fn check_param_rank(rank: usize, cap: usize) -> Result<()> {
    if rank > cap {
        Err(Error::RankTooLarge { rank, cap })
    } else {
        Ok(())
    }
}

/// `det(x Z_n + y Z_n^t)` by Bareiss elimination over `Z[x, y]`.
pub fn param_zeta_det(rank: usize) -> Result<BiPoly> {
    check_param_rank(rank, PARAM_DET_MAX_RANK)?;
    param_zeta_matrix(rank)?.det()
}

/// `det(x0 Z_n + y0 Z_n^t)` for integers `x0`, `y0`.
pub fn param_zeta_det_at(rank: usize, x0: &BigInt, y0: &BigInt) -> Result<BigInt> {
    check_param_rank(rank, PARAM_EVAL_MAX_RANK)?;
    let z = zeta_matrix(&Poset::boolean_algebra(rank)?);
    z.scale(x0).add(&z.transpose().scale(y0))?.det()
}

/// `(x + s y)^alpha (x^2 - s xy + y^2)^beta` with `s = (-1)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredDet {
    pub exponents: AlphaBeta,
    pub linear: BiPoly,
    pub quadratic: BiPoly,
}

impl FactoredDet {
    /// The predicted factorization for rank `n >= 1`; no determinant is
    /// computed.
    pub fn predicted(rank: usize) -> Self {
        let exponents = alpha_beta(rank);
        let s = if rank.is_multiple_of(2) { 1 } else { -1 };
        let linear = &BiPoly::x() + &BiPoly::monomial(0, 1, s);
        let quadratic = &(&BiPoly::monomial(2, 0, 1) + &BiPoly::monomial(1, 1, -s))
            + &BiPoly::monomial(0, 2, 1);
        Self {
            exponents,
            linear,
            quadratic,
        }
    }

    fn exponent_u32(e: &num_bigint::BigUint) -> u32 {
        e.to_u32().expect("exponent fits for any expandable rank")
    }

    pub fn expand(&self) -> BiPoly {
        &self.linear.pow(Self::exponent_u32(&self.exponents.alpha))
            * &self.quadratic.pow(Self::exponent_u32(&self.exponents.beta))
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let l = self.linear.eval(x, y);
        let q = self.quadratic.eval(x, y);
        l.pow(Self::exponent_u32(&self.exponents.alpha))
            * q.pow(Self::exponent_u32(&self.exponents.beta))
    }
}

/// The factorization for `rank`, checked by expanding it and comparing with
/// [`param_zeta_det`].
pub fn factored_form(rank: usize) -> Result<FactoredDet> {
    let det = param_zeta_det(rank)?;
    let predicted = FactoredDet::predicted(rank);
    if predicted.expand() == det {
        Ok(predicted)
    } else {
        Err(Error::FactorizationMismatch(rank))
    }
}

/// `D_{n+2}(x, y) == D_n(x, y)^2 D_{n+1}(x, -y)` for given determinants.
pub fn lemma4_holds(d_n: &BiPoly, d_n1: &BiPoly, d_n2: &BiPoly) -> bool {
    &(d_n * d_n) * &d_n1.negate_y() == *d_n2
}

/// The rank-recurrence between `D_rank`, `D_{rank+1}` and `D_{rank+2}`,
/// checked by exact polynomial equality.
pub fn lemma4_check(rank: usize) -> Result<bool> {
    check_param_rank(rank + 2, PARAM_DET_MAX_RANK)?;
    let d0 = param_zeta_det(rank)?;
    let d1 = param_zeta_det(rank + 1)?;
    let d2 = param_zeta_det(rank + 2)?;
    Ok(lemma4_holds(&d0, &d1, &d2))
}
