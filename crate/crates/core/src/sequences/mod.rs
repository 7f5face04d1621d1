//! Concrete sequences: the connected noncrossing graph counts `N_n`, the
//! binomial sums `h_{j,k,l}` with their five named instances `f1..f5`, and
//! the identities tying them together.

mod hsum;
mod identities;

pub use hsum::{
    f_closed, f_rational_series, f_value, f_value_agreed, h_gf_series, h_sum, h_sum_reindexed,
    hjkl_sweep, SumParams,
};
pub use identities::{
    beta_series, kummer_pair, t_term, verify_identity, IdentityId, IdentityParams,
};

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::{binom, binom_int, factorial, pow2, rat, ratio, to_integer, Integer, Rational};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::series::Series;

/// `1/((1-x)(1-2x))`, the kernel whose fixed point is `alpha`.
pub fn alpha_kernel(order: usize) -> Series {
    Series::from_ints(&[1, -3, 2], order)
        .recip()
        .expect("unit constant term")
}

/// `alpha = x / ((1 - alpha)(1 - 2 alpha))` to the given order.
pub fn alpha_series(order: usize) -> Series {
    Series::solve_fixed_point(&alpha_kernel(order), order).expect("kernel is a unit")
}

/// `1 - 6 alpha + 6 alpha^2`, the common denominator of the `F_m` and `H_{j,k,l}`.
pub(crate) fn alpha_denominator(alpha: &Series) -> Series {
    Series::from_ints(&[1, -6, 6], alpha.order())
        .compose(alpha)
        .expect("alpha vanishes at 0")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    N,
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl SequenceId {
    pub const F_IDS: [SequenceId; 5] = [
        SequenceId::F1,
        SequenceId::F2,
        SequenceId::F3,
        SequenceId::F4,
        SequenceId::F5,
    ];

    /// The `(j, k, l)` triple for `f1..f5`; `None` for `N`.
    pub fn params(self) -> Option<SumParams> {
        let (j, k, l) = match self {
            SequenceId::N => return None,
            SequenceId::F1 => (1, 1, 0),
            SequenceId::F2 => (0, 1, 0),
            SequenceId::F3 => (0, 0, 0),
            SequenceId::F4 => (-1, 1, 1),
            SequenceId::F5 => (0, 1, 1),
        };
        Some(SumParams { j, k, l })
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SequenceId::N => "N",
            SequenceId::F1 => "f1",
            SequenceId::F2 => "f2",
            SequenceId::F3 => "f3",
            SequenceId::F4 => "f4",
            SequenceId::F5 => "f5",
        };
        f.write_str(s)
    }
}

impl FromStr for SequenceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "n" => Ok(SequenceId::N),
            "f1" => Ok(SequenceId::F1),
            "f2" => Ok(SequenceId::F2),
            "f3" => Ok(SequenceId::F3),
            "f4" => Ok(SequenceId::F4),
            "f5" => Ok(SequenceId::F5),
            other => Err(Error::BadParams(format!("unknown sequence `{other}`"))),
        }
    }
}

/// How a sequence value is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Defining binomial sum.
    Sum,
    /// Coefficient of a rational function of `x` (`N` only).
    Lemma,
    /// Coefficient of a series in `alpha`.
    Gf,
    /// Closed form with half-integer binomials.
    Closed,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sum => "sum",
            Method::Lemma => "lemma",
            Method::Gf => "gf",
            Method::Closed => "closed",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" | "direct" => Ok(Method::Sum),
            "lemma" => Ok(Method::Lemma),
            "gf" => Ok(Method::Gf),
            "closed" => Ok(Method::Closed),
            other => Err(Error::BadParams(format!("unknown method `{other}`"))),
        }
    }
}

fn exact_div(num: &Integer, den: i64, what: &str) -> Result<Integer> {
    let (q, r) = num.div_rem(&Integer::from(den));
    if !r.is_zero() {
        return Err(Error::NonInteger(format!("{what}: {num}/{den}")));
    }
    Ok(q)
}

/// `N_n = 1/(n-1) sum_{i=n-1}^{2n-3} C(3n-3, n+i) C(i-1, i-n+1)` for `n >= 2`.
pub fn n_direct(n: i64) -> Result<Integer> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n_direct needs n >= 2, got {n}"
        )));
    }
    let sum: Integer = (n - 1..=2 * n - 3)
        .map(|i| binom_int(3 * n - 3, n + i) * binom_int(i - 1, i - n + 1))
        .sum();
    exact_div(&sum, n - 1, "n_direct")
}

/// `N_{n+1} = (1/n) [x^(n-1)] 1/((1-x)^(n+2) (1-2x)^n)` for `n >= 1`.
pub fn n_lemma(n: i64) -> Result<Integer> {
    if n < 1 {
        return Err(Error::Precondition(format!(
            "n_lemma needs n >= 1, got {n}"
        )));
    }
    let order = (n - 1) as usize;
    let a = Series::from_ints(&[1, -1], order).pow_int(-(n + 2))?;
    let b = Series::from_ints(&[1, -2], order).pow_int(-n)?;
    let c = a.mul(&b).coeff(n - 1)?.clone();
    exact_div(&to_integer(&c)?, n, "n_lemma")
}

/// `sum_n N_{n+1} x^n = 1/(1 - alpha)`.
pub fn n_gf_series(order: usize) -> Series {
    let alpha = alpha_series(order);
    (&Series::one(order) - &alpha)
        .recip()
        .expect("1 - alpha is a unit")
}

/// The two terms `T1 - T2 = N_n`, with
/// `T1 = 2^(2n-1)/n C(3n/2-2, n-1)` and `T2 = 2^(2n-2)/n C(3n/2-3/2, n-1)`.
pub fn n_closed_terms(n: i64) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(Error::Precondition(format!(
            "closed form needs n >= 1, got {n}"
        )));
    }
    let inv_n = ratio(1, n);
    let t1 = pow2(2 * n - 1) * &inv_n * binom(&(ratio(3 * n, 2) - rat(2)), n - 1);
    let t2 = pow2(2 * n - 2) * &inv_n * binom(&(ratio(3 * n, 2) - ratio(3, 2)), n - 1);
    Ok((t1, t2))
}

pub fn n_closed(n: i64) -> Result<Integer> {
    let (t1, t2) = n_closed_terms(n)?;
    to_integer(&(t1 - t2))
}

/// `2 m! (6m)! / ((2m)! (2m+1)! (3m)!)`, the first closed-form term at `n = 2m+1`.
pub fn factorial_form_odd(m: u64) -> Rational {
    Rational::new(
        factorial(m) * factorial(6 * m) * 2,
        factorial(2 * m) * factorial(2 * m + 1) * factorial(3 * m),
    )
}

/// `6 m! (6m+1)! / ((2m)! (2m+2)! (3m)!)`, the second closed-form term at `n = 2m+2`.
pub fn factorial_form_even(m: u64) -> Rational {
    Rational::new(
        factorial(m) * factorial(6 * m + 1) * 6,
        factorial(2 * m) * factorial(2 * m + 2) * factorial(3 * m),
    )
}

/// The closed-form terms, with the applicable factorial form checked:
/// `T1` for odd `n`, `T2` for even `n`.
pub fn n_closed_terms_factorial(n: i64) -> Result<(Rational, Rational)> {
    let (t1, t2) = n_closed_terms(n)?;
    if n % 2 == 1 {
        let f = factorial_form_odd(((n - 1) / 2) as u64);
        if f != t1 {
            return Err(Error::mismatch(
                format!("odd factorial form at n={n}"),
                t1,
                f,
            ));
        }
    } else {
        let f = factorial_form_even(((n - 2) / 2) as u64);
        if f != t2 {
            return Err(Error::mismatch(
                format!("even factorial form at n={n}"),
                t2,
                f,
            ));
        }
    }
    Ok((t1, t2))
}

/// `N_n` by the chosen method. `N_1 = 1` for the sum and lemma routes, which
/// only cover `n >= 2`.
pub fn n_value(n: i64, method: Method) -> Result<Integer> {
    if n < 1 {
        return Err(Error::Precondition(format!(
            "N_n is defined for n >= 1, got {n}"
        )));
    }
    match method {
        Method::Sum if n == 1 => Ok(Integer::one()),
        Method::Sum => n_direct(n),
        Method::Lemma if n == 1 => Ok(Integer::one()),
        Method::Lemma => n_lemma(n - 1),
        Method::Gf => {
            let s = n_gf_series((n - 1) as usize);
            to_integer(s.coeff(n - 1)?)
        }
        Method::Closed => n_closed(n),
    }
}

/// Values of a sequence over `from..=to`; the series route expands once.
pub fn values(id: SequenceId, from: i64, to: i64, method: Method) -> Result<Vec<(i64, Integer)>> {
    if from > to {
        return Err(Error::BadParams(format!("empty range {from}..={to}")));
    }
    if from < 0 {
        return Err(Error::BadParams(format!("negative index {from}")));
    }
    match (id, method) {
        (SequenceId::N, Method::Gf) => {
            if from < 1 {
                return Err(Error::Precondition("N_n is defined for n >= 1".into()));
            }
            let s = n_gf_series((to - 1) as usize);
            (from..=to)
                .map(|n| Ok((n, to_integer(s.coeff(n - 1)?)?)))
                .collect()
        }
        (SequenceId::N, m) => (from..=to).map(|n| Ok((n, n_value(n, m)?))).collect(),
        (f, Method::Gf) => {
            let p = f.params().expect("f id");
            let s = h_gf_series(p, to as usize)?;
            (from..=to)
                .map(|n| Ok((n, to_integer(s.coeff(n)?)?)))
                .collect()
        }
        (f, m) => (from..=to).map(|n| Ok((n, f_value(f, n, m)?))).collect(),
    }
}

/// `N_n` by the sum, lemma, series and closed routes, all four compared for
/// `1 <= n <= n_max`.
pub fn check_n_agreement(n_max: i64) -> Result<CheckReport> {
    let mut report = CheckReport::new("n-agreement", format!("n_max={n_max}"));
    if n_max < 1 {
        return Ok(report);
    }
    let gf = n_gf_series((n_max - 1) as usize);
    for n in 1..=n_max {
        let closed = n_closed(n)?;
        let by_gf = to_integer(gf.coeff(n - 1)?)?;
        report.compare(format!("n={n} gf"), &by_gf, &closed);
        report.compare(format!("n={n} sum"), &n_value(n, Method::Sum)?, &closed);
        report.compare(format!("n={n} lemma"), &n_value(n, Method::Lemma)?, &closed);
    }
    Ok(report)
}

/// `f1..f5` by the sum, series and closed routes for `0 <= n <= n_max`
/// (closed `f4` from `n = 1`).
pub fn check_f_agreement(n_max: i64) -> Result<CheckReport> {
    let mut report = CheckReport::new("f-agreement", format!("n_max={n_max}"));
    if n_max < 0 {
        return Ok(report);
    }
    for id in SequenceId::F_IDS {
        let gf = h_gf_series(id.params().expect("f id"), n_max as usize)?;
        for n in 0..=n_max {
            let by_sum = f_value(id, n, Method::Sum)?;
            report.compare(format!("{id}({n}) gf"), &to_integer(gf.coeff(n)?)?, &by_sum);
            if !(id == SequenceId::F4 && n == 0) {
                report.compare(format!("{id}({n}) closed"), &f_closed(id, n)?, &by_sum);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    const N_TABLE: [i64; 9] = [1, 1, 4, 23, 156, 1162, 9192, 75819, 644908];

    #[test]
    fn direct_examples() {
        assert_eq!(n_direct(2).unwrap(), int(1));
        assert_eq!(n_direct(3).unwrap(), int(4));
        assert_eq!(n_direct(7).unwrap(), int(9192));
        assert!(n_direct(1).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(n_lemma(1).unwrap(), int(1));
        assert_eq!(n_lemma(4).unwrap(), int(156));
        assert_eq!(n_lemma(8).unwrap(), int(644908));
        assert!(n_lemma(0).is_err());
    }

    #[test]
    fn gf_examples() {
        let s = n_gf_series(8);
        for (i, &v) in N_TABLE.iter().enumerate() {
            assert_eq!(s.coeff(i as i64).unwrap(), &rat(v));
        }
        assert_eq!(n_gf_series(0), Series::one(0));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(n_closed(1).unwrap(), int(1));
        assert_eq!(n_closed(6).unwrap(), int(1162));
        assert_eq!(n_closed(9).unwrap(), int(644908));
        assert!(n_closed(0).is_err());
    }

    #[test]
    fn factorial_terms() {
        let (t1, _) = n_closed_terms_factorial(1).unwrap();
        assert_eq!(t1, rat(2));
        let (_, t2) = n_closed_terms_factorial(2).unwrap();
        assert_eq!(t2, rat(3));
        let (t1, t2) = n_closed_terms_factorial(6).unwrap();
        assert_eq!(t1 - t2, rat(1162));
        for n in 1..=31 {
            n_closed_terms_factorial(n).unwrap();
        }
    }

    #[test]
    fn methods_agree_on_table() {
        for (i, &v) in N_TABLE.iter().enumerate() {
            let n = i as i64 + 1;
            for m in [Method::Sum, Method::Lemma, Method::Gf, Method::Closed] {
                assert_eq!(n_value(n, m).unwrap(), int(v), "N_{n} via {m}");
            }
        }
        assert!(n_value(0, Method::Closed).is_err());
    }

    #[test]
    fn batch_values() {
        let v = values(SequenceId::N, 1, 9, Method::Gf).unwrap();
        assert_eq!(v.last().unwrap(), &(9, int(644908)));
        let f3 = values(SequenceId::F3, 0, 4, Method::Sum).unwrap();
        let got: Vec<Integer> = f3.into_iter().map(|(_, v)| v).collect();
        assert_eq!(got, [1, 5, 39, 338, 3075].map(int));
        assert!(values(SequenceId::N, 5, 3, Method::Sum).is_err());
    }

    #[test]
    fn parse_ids() {
        assert_eq!("N".parse::<SequenceId>().unwrap(), SequenceId::N);
        assert_eq!("f4".parse::<SequenceId>().unwrap(), SequenceId::F4);
        assert!("f6".parse::<SequenceId>().is_err());
        assert_eq!("direct".parse::<Method>().unwrap(), Method::Sum);
    }
}
