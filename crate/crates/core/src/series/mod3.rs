use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Residue3;
use crate::error::{Error, Result};

/// Truncated power series over Z/3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMod3 {
    coeffs: Vec<Residue3>,
}

impl SeriesMod3 {
    pub fn new(coeffs: Vec<Residue3>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition(
                "a series needs at least its constant coefficient".into(),
            ));
        }
        Ok(SeriesMod3 { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        SeriesMod3 {
            coeffs: vec![Residue3::ZERO; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Residue3::ONE, order)
    }

    pub fn constant(c: Residue3, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Residue3] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<Residue3> {
        self.coeffs.get(n).copied().ok_or(Error::OutOfRange {
            index: n as i64,
            order: self.order(),
        })
    }

    pub fn set(&mut self, n: usize, c: Residue3) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        SeriesMod3 {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Multiplication by `x^e` at the same order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in e..=n {
            out.coeffs[i] = self.coeffs[i - e];
        }
        out
    }

    /// Division by `x^e`; the low coefficients must vanish.
    pub fn unshift(&self, e: usize) -> Result<Self> {
        if e > self.order() || self.coeffs[..e].iter().any(|c| !c.is_zero()) {
            return Err(Error::Precondition(format!(
                "division by x^{e} needs {e} vanishing low coefficients"
            )));
        }
        Ok(SeriesMod3 {
            coeffs: self.coeffs[e..].to_vec(),
        })
    }

    pub fn mul(&self, other: &SeriesMod3) -> SeriesMod3 {
        let n = self.order().min(other.order());
        let mut acc = vec![0u32; n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            let a = a.value() as u32;
            if a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                acc[i + j] = (acc[i + j] + a * b.value() as u32) % 3;
            }
        }
        SeriesMod3 {
            coeffs: acc.into_iter().map(|v| Residue3::new(v as i64)).collect(),
        }
    }

    pub fn recip(&self) -> Result<SeriesMod3> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        out.push(inv0);
        for m in 1..=n {
            let mut acc = Residue3::ZERO;
            for i in 1..=m {
                acc = acc + self.coeffs[i] * out[m - i];
            }
            out.push(-acc * inv0);
        }
        Ok(SeriesMod3 { coeffs: out })
    }

    pub fn pow_int(&self, m: i64) -> Result<SeriesMod3> {
        let base = if m < 0 { self.recip()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut result = SeriesMod3::one(self.order());
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

    fn zip_with(&self, other: &SeriesMod3, op: impl Fn(Residue3, Residue3) -> Residue3) -> Self {
        let n = self.order().min(other.order());
        SeriesMod3 {
            coeffs: (0..=n)
                .map(|i| op(self.coeffs[i], other.coeffs[i]))
                .collect(),
        }
    }
}

impl Add for &SeriesMod3 {
    type Output = SeriesMod3;
    fn add(self, rhs: &SeriesMod3) -> SeriesMod3 {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &SeriesMod3 {
    type Output = SeriesMod3;
    fn sub(self, rhs: &SeriesMod3) -> SeriesMod3 {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &SeriesMod3 {
    type Output = SeriesMod3;
    fn mul(self, rhs: &SeriesMod3) -> SeriesMod3 {
        SeriesMod3::mul(self, rhs)
    }
}

impl Neg for &SeriesMod3 {
    type Output = SeriesMod3;
    fn neg(self) -> SeriesMod3 {
        SeriesMod3 {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}
