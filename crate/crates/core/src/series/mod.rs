//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` knows its coefficients for exponents `0..=N`
//! exactly and nothing beyond. Binary operations keep the smaller order,
//! and asking for a coefficient past the order is an error rather than an
//! implicit zero.

mod mod3;

pub use mod3::SeriesMod3;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::{Integer, Rational, Residue3};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    // invariant: non-empty; order = coeffs.len() - 1
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from its coefficient list; the order is `len - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition(
                "a series needs at least its constant coefficient".into(),
            ));
        }
        Ok(Series { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// `c * x^e`, truncated to `order`.
    pub fn monomial(c: Rational, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// A polynomial with the given coefficients, known exactly to `order`.
    pub fn polynomial(coeffs: &[Rational], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, c) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = c.clone();
        }
        s
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let qs: Vec<Rational> = coeffs.iter().map(|&c| crate::arith::rat(c)).collect();
        Self::polynomial(&qs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// `[x^n]` of the series; out of range is an error.
    pub fn coeff(&self, n: i64) -> Result<&Rational> {
        if n < 0 || n as usize > self.order() {
            return Err(Error::OutOfRange {
                index: n,
                order: self.order(),
            });
        }
        Ok(&self.coeffs[n as usize])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order`. Never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `a*s + b*t` to the smaller of the two orders.
    pub fn linear_combine(a: &Rational, s: &Series, b: &Rational, t: &Series) -> Series {
        let n = s.order().min(t.order());
        Series {
            coeffs: (0..=n)
                .map(|i| a * &s.coeffs[i] + b * &t.coeffs[i])
                .collect(),
        }
    }

    /// Multiplication by `x`; the order grows by one.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Multiplication by `x^e`, keeping the same order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in e..=n {
            out.coeffs[i] = self.coeffs[i - e].clone();
        }
        out
    }

    /// Division by `x`; the constant term must vanish and the order drops by one.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "division by x needs a zero constant term".into(),
            ));
        }
        if self.order() == 0 {
            return Err(Error::TruncationExhausted);
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: cauchy(&self.coeffs, &other.coeffs, n),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[m - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    /// `outer(inner)`. The inner series must vanish at 0.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        // Horner from the top. The partial sum attached to c_i is multiplied
        // by inner^i, so it is only needed to precision n - i.
        let mut acc = vec![self.coeffs[n].clone()];
        for i in (0..n).rev() {
            let mut next = cauchy(&acc, &inner.coeffs, n - i);
            next[0] = self.coeffs[i].clone();
            acc = next;
        }
        Ok(Series { coeffs: acc })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Series> {
        if self.order() == 0 {
            return Err(Error::TruncationExhausted);
        }
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * crate::arith::rat(i as i64))
                .collect(),
        })
    }

    /// The square root with constant term 1 of a series with constant term 1.
    pub fn sqrt_unit(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let n = self.order();
        let half = crate::arith::ratio(1, 2);
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(Rational::one());
        // t^2 = s gives 2 t_m = s_m - sum_{0<i<m} t_i t_{m-i}
        for m in 1..=n {
            let mut acc = self.coeffs[m].clone();
            for i in 1..m {
                acc -= &out[i] * &out[m - i];
            }
            out.push(acc * &half);
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power by repeated squaring; negative powers go through `recip`.
    pub fn pow_int(&self, m: i64) -> Result<Series> {
        let base = if m < 0 { self.recip()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut result = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(result)
    }

    /// The unique `f` with `f(0) = 0` and `f = x * G(f)`, to the given order.
    ///
    /// Newton iteration on `f - x G(f)`: a solution correct to `x^p` becomes
    /// correct to `x^(2p+2)` after one step. `G` must be known to at least
    /// `order - 1`.
    pub fn solve_fixed_point(kernel: &Series, order: usize) -> Result<Series> {
        if kernel.coeffs[0].is_zero() {
            return Err(Error::DegenerateKernel);
        }
        if order > 0 && kernel.order() + 1 < order {
            return Err(Error::InsufficientOrder {
                need: order - 1,
                have: kernel.order(),
            });
        }
        if order == 0 {
            return Ok(Series::zero(0));
        }
        let mut f = Series::monomial(kernel.coeffs[0].clone(), 1, 1);
        while f.order() < order {
            let q = (2 * f.order() + 2).min(order);
            let mut coeffs = f.into_coeffs();
            coeffs.resize(q + 1, Rational::zero());
            let fq = Series { coeffs };
            let g = kernel.truncate(q - 1);
            let inner = fq.truncate(q - 1);
            let residual = &fq - &g.compose(&inner)?.mul_x();
            let slope = &Series::one(q - 1) - &g.derivative()?.compose(&inner)?.mul_x();
            let step = residual.div_x()?.mul(&slope.recip()?).mul_x();
            f = &fq - &step;
        }
        Ok(f)
    }

    /// Coefficientwise reduction mod 3; every coefficient must be an integer.
    pub fn reduce_mod3(&self) -> Result<SeriesMod3> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| crate::arith::to_integer(c).map(|z| Residue3::from_integer(&z)))
            .collect::<Result<Vec<_>>>()?;
        SeriesMod3::new(coeffs)
    }
}

/// Integer numerators over one common denominator.
fn over_common_denominator(v: &[Rational]) -> (Vec<Integer>, Integer) {
    let den = v.iter().fold(Integer::one(), |acc, q| acc.lcm(q.denom()));
    let nums = v.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    (nums, den)
}

/// Product of two coefficient slices up to `x^n`, carried out on integer
/// numerators so that only the final coefficients get reduced.
pub(crate) fn cauchy(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let a = &a[..a.len().min(n + 1)];
    let b = &b[..b.len().min(n + 1)];
    let (an, ad) = over_common_denominator(a);
    let (bn, bd) = over_common_denominator(b);
    let mut out = vec![Integer::zero(); n + 1];
    for (i, ai) in an.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in bn.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    let den = ad * bd;
    out.into_iter()
        .map(|c| Rational::new(c, den.clone()))
        .collect()
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::linear_combine(&Rational::one(), self, &Rational::one(), rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::linear_combine(&Rational::one(), self, &-Rational::one(), rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Rational::one())
    }
}
