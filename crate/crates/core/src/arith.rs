//! Exact integers and rationals, generalized binomial coefficients,
//! factorials, and binomials modulo a prime via Lucas' theorem.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so structural equality is
//! numeric equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// `num / den`, reduced.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Returns the value as an integer, or `Error::NonInteger`.
pub fn to_integer(q: &Rational) -> Result<Integer> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonInteger(q.to_string()))
    }
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let p = Integer::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(Integer::one(), p)
    }
}

/// Generalized binomial coefficient `q(q-1)...(q-k+1)/k!`, zero for `k < 0`.
pub fn binom(q: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    // q = a/b, so the falling factorial is prod (a - i b) / b^k.
    let a = q.numer();
    let b = q.denom();
    let mut num = Integer::one();
    let mut den = Integer::one();
    let mut term = a.clone();
    for i in 1..=k {
        num *= &term;
        den *= b * Integer::from(i);
        term -= b;
    }
    Rational::new(num, den)
}

/// Generalized binomial with integer upper argument, `C(n, k)` for any `n`
/// and zero for `k < 0`. Negative `n` goes through upper negation.
pub fn binom_int(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n < 0 {
        let c = binom_nat(k - n - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    binom_nat(n, k)
}

/// Combinatorial binomial: `C(n, k)` when `0 <= k <= n`, zero otherwise.
pub fn binom_nat(n: i64, k: i64) -> Integer {
    if k < 0 || n < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= Integer::from(n - i);
        acc /= Integer::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc = 1u128;
    let mut b = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// `C(n, k) mod p` for `n < p`.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let m = p as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num * ((n - i) as u128) % m;
        den = den * ((i + 1) as u128) % m;
    }
    (num * pow_mod(den as u64, p - 2, p) as u128 % m) as u64
}

/// `C(n, k) mod p` as the product of digitwise binomials in base `p`.
pub fn lucas_binom_mod_p(mut n: u64, mut k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(0);
        }
        acc = ((acc as u128 * small_binom_mod(nd, kd, p) as u128) % p as u128) as u64;
        n /= p;
        k /= p;
    }
    Ok(acc % p)
}

/// An element of Z/3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue3(u8);

impl Residue3 {
    pub const ZERO: Residue3 = Residue3(0);
    pub const ONE: Residue3 = Residue3(1);
    pub const TWO: Residue3 = Residue3(2);

    pub fn new(v: i64) -> Self {
        Residue3(v.rem_euclid(3) as u8)
    }

    pub fn from_integer(v: &Integer) -> Self {
        let r = v.mod_floor(&Integer::from(3));
        Residue3(r.to_u8().expect("residue below 3"))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero. Every unit of Z/3 is its own inverse.
    pub fn inverse(self) -> Option<Self> {
        (self.0 != 0).then_some(self)
    }
}

impl fmt::Display for Residue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Residue3 {
    type Output = Residue3;
    fn add(self, rhs: Self) -> Self {
        Residue3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Residue3 {
    type Output = Residue3;
    fn sub(self, rhs: Self) -> Self {
        Residue3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Residue3 {
    type Output = Residue3;
    fn neg(self) -> Self {
        Residue3((3 - self.0) % 3)
    }
}

impl Mul for Residue3 {
    type Output = Residue3;
    fn mul(self, rhs: Self) -> Self {
        Residue3((self.0 * rhs.0) % 3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(&rat(3), 2), rat(3));
        assert_eq!(binom(&rat(-1), 0), rat(1));
        assert_eq!(binom(&ratio(5, 2), 2), ratio(15, 8));
        assert_eq!(binom(&ratio(5, 2), -1), rat(0));
        // f5(2) = 2^4 C(5/2, 2)
        assert_eq!(pow2(4) * binom(&ratio(5, 2), 2), rat(30));
    }

    #[test]
    fn binom_int_negative_upper() {
        assert_eq!(binom_int(-1, 0), int(1));
        assert_eq!(binom_int(-1, 3), int(-1));
        assert_eq!(binom_int(-3, 2), int(6));
        assert_eq!(binom_int(4, 5), int(0));
        assert_eq!(binom_nat(-3, 2), int(0));
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom_mod_p(9, 3, 3), Ok(0));
        assert_eq!(lucas_binom_mod_p(4, 2, 3), Ok(0));
        for n in 0..50 {
            assert_eq!(lucas_binom_mod_p(n, 0, 3), Ok(1));
        }
        assert_eq!(lucas_binom_mod_p(10, 3, 4), Err(Error::NotPrime(4)));
        assert_eq!(lucas_binom_mod_p(10, 3, 1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn lucas_matches_exact_reduction() {
        for p in [2u64, 3, 5] {
            for n in 0..=500i64 {
                for k in 0..=n {
                    let exact = binom_nat(n, k) % Integer::from(p);
                    let lucas = lucas_binom_mod_p(n as u64, k as u64, p).unwrap();
                    assert_eq!(exact, Integer::from(lucas), "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(6), int(720));
        assert_eq!(factorial(10), int(3_628_800));
    }

    #[test]
    fn residue_arithmetic() {
        let two = Residue3::TWO;
        assert_eq!(two + two, Residue3::ONE);
        assert_eq!(two * two, Residue3::ONE);
        assert_eq!(-Residue3::ONE, two);
        assert_eq!(Residue3::ZERO.inverse(), None);
        assert_eq!(Residue3::from_integer(&int(-4)), Residue3::TWO);
    }

    fn any_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn binom_symmetric_and_integral(n in 0i64..60, k in 0i64..60) {
            prop_assume!(k <= n);
            let c = binom(&rat(n), k);
            prop_assert!(c.is_integer());
            prop_assert!(!c.is_negative());
            prop_assert_eq!(c.clone(), binom(&rat(n), n - k));
            prop_assert_eq!(Rational::from_integer(binom_int(n, k)), c);
        }

        #[test]
        fn pascal_recurrence(q in any_rational(), k in 1i64..15) {
            let one = rat(1);
            let lhs = binom(&q, k);
            let rhs = binom(&(&q - &one), k) + binom(&(&q - &one), k - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn upper_negation(q in any_rational(), k in 0i64..15) {
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            let lhs = binom(&-q.clone(), k);
            let rhs = sign * binom(&(q + rat(k) - rat(1)), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integer_binomials_agree(n in -30i64..30, k in -3i64..20) {
            prop_assert_eq!(Rational::from_integer(binom_int(n, k)), binom(&rat(n), k));
        }
    }
}
