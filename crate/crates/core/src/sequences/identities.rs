use std::fmt;
use std::str::FromStr;

use super::{
    alpha_denominator, alpha_kernel, alpha_series, f_rational_series, f_value, factorial_form_even,
    factorial_form_odd, h_gf_series, h_sum, n_closed, n_closed_terms, n_direct, n_gf_series,
    Method, SequenceId, SumParams,
};
use crate::arith::{binom, binom_int, binom_nat, pow2, rat, ratio, Integer, Rational};
use crate::error::{Error, Result};
use crate::lagrange::lagrange_form1;
use crate::report::CheckReport;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `sum N_{n+1} x^n = 1/(1 - alpha)`.
    ShiftedNSeries,
    /// `H_{j,k,l}` as a rational function of `alpha`.
    HSeries,
    /// The five `F_m` as rational functions of `alpha`.
    FRationalForms,
    /// `(1-2a)^(2r) (a-a^2)^i / (1-6a+6a^2) = sum 2^(2n-2i) C(3n/2-r-i, n-i) x^n`.
    AlphaBinomialExpansion,
    /// `(1-2a)^(2r) = 1 - sum_{n>=1} 2^(2n) (r/n) C(3n/2-r-1, n-1) x^n`.
    AlphaPowerExpansion,
    /// `N_n` as a difference of two half-integer binomial terms.
    NClosedForm,
    FactorialOdd,
    FactorialEven,
    Kummer,
    /// Termwise relations between the summands of `f1..f5`.
    TermRelations,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::ShiftedNSeries,
        IdentityId::HSeries,
        IdentityId::FRationalForms,
        IdentityId::AlphaBinomialExpansion,
        IdentityId::AlphaPowerExpansion,
        IdentityId::NClosedForm,
        IdentityId::FactorialOdd,
        IdentityId::FactorialEven,
        IdentityId::Kummer,
        IdentityId::TermRelations,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::ShiftedNSeries => "e-n3",
            IdentityId::HSeries => "e-hjkl",
            IdentityId::FRationalForms => "e-f-rational",
            IdentityId::AlphaBinomialExpansion => "e-a1",
            IdentityId::AlphaPowerExpansion => "e-2a",
            IdentityId::NClosedForm => "e-mh",
            IdentityId::FactorialOdd => "fact-odd",
            IdentityId::FactorialEven => "fact-even",
            IdentityId::Kummer => "kummer",
            IdentityId::TermRelations => "t-relations",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown identity `{s}`")))
    }
}

/// Parameters an identity may need; which are required depends on the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityParams {
    pub r: Option<i64>,
    pub i: Option<i64>,
    pub sum: Option<SumParams>,
    pub n_max: Option<i64>,
    pub a_max: Option<i64>,
}

impl IdentityParams {
    fn require<T: Copy>(v: Option<T>, name: &str, id: IdentityId) -> Result<T> {
        v.ok_or_else(|| Error::BadParams(format!("{id} needs --{name}")))
    }
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(i) = self.i {
            parts.push(format!("i={i}"));
        }
        if let Some(p) = self.sum {
            parts.push(p.to_string());
        }
        if let Some(n) = self.n_max {
            parts.push(format!("n_max={n}"));
        }
        if let Some(a) = self.a_max {
            parts.push(format!("a_max={a}"));
        }
        f.write_str(&parts.join(","))
    }
}

/// `(sum_{k=0}^n C(2n+a, n-k) C(a+k-1, k), 2^(2n) C(a/2 + n - 1/2, n))`;
/// unequal sides are an error.
pub fn kummer_pair(n: i64, a: i64) -> Result<(Integer, Rational)> {
    if n < 0 || a < 0 {
        return Err(Error::Precondition(format!(
            "kummer_pair needs n, a >= 0, got n={n}, a={a}"
        )));
    }
    let (lhs, rhs) = kummer_sides(n, a);
    if Rational::from_integer(lhs.clone()) != rhs {
        return Err(Error::mismatch(format!("kummer n={n} a={a}"), lhs, rhs));
    }
    Ok((lhs, rhs))
}

fn kummer_sides(n: i64, a: i64) -> (Integer, Rational) {
    let lhs = (0..=n)
        .map(|k| binom_int(2 * n + a, n - k) * binom_int(a + k - 1, k))
        .sum();
    let rhs = pow2(2 * n) * binom(&(ratio(a, 2) + rat(n) - ratio(1, 2)), n);
    (lhs, rhs)
}

/// Summand `T_m(n, i)` of `f_m(n) = sum_i T_m(n, i)`, `m` in `1..=5`.
pub fn t_term(m: u8, n: i64, i: i64) -> Integer {
    match m {
        1 => binom_nat(3 * n + 1, n + i + 1) * binom_nat(i, n),
        2 => binom_nat(3 * n, n + i + 1) * binom_nat(i, n),
        3 => binom_nat(3 * n, n + i) * binom_nat(i, n),
        4 => binom_nat(3 * n - 1, n + i + 1) * binom_nat(i, n - 1),
        5 => binom_nat(3 * n, n + i + 1) * binom_nat(i, n - 1),
        _ => panic!("no summand T_{m}"),
    }
}

/// `beta = x / sqrt(1 - 4 beta)`, checked against `alpha - alpha^2`.
pub fn beta_series(order: usize) -> Result<Series> {
    let kernel = Series::from_ints(&[1, -4], order).sqrt_unit()?.recip()?;
    let beta = Series::solve_fixed_point(&kernel, order)?;
    let alpha = alpha_series(order);
    let expect = &alpha - &alpha.mul(&alpha);
    if beta != expect {
        return Err(Error::mismatch("beta = alpha - alpha^2", expect, &beta));
    }
    Ok(beta)
}

fn compare_series_to(
    report: &mut CheckReport,
    lhs: &Series,
    from: i64,
    rhs: impl Fn(i64) -> Result<Rational>,
) -> Result<()> {
    for n in from..=lhs.order() as i64 {
        report.compare(format!("[x^{n}]"), lhs.coeff(n)?, &rhs(n)?);
    }
    Ok(())
}

/// Expands both sides of an identity (or walks its index range) and reports
/// the first disagreement.
pub fn verify_identity(
    id: IdentityId,
    params: &IdentityParams,
    order: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(id.tag(), format!("{params};order={order}"));
    let n_max = params.n_max.unwrap_or(order as i64);
    match id {
        IdentityId::ShiftedNSeries => {
            let s = n_gf_series(order);
            let phi = Series::from_ints(&[1, -1], order).recip()?;
            let kernel = alpha_kernel(order);
            report.compare("[x^0]", s.coeff(0)?, &rat(1));
            for n in 1..=order as i64 {
                let direct = Rational::from_integer(n_direct(n + 1)?);
                report.compare(format!("[x^{n}] vs sum"), s.coeff(n)?, &direct);
                let lagr = lagrange_form1(&phi, &kernel, n as usize)?;
                report.compare(format!("[x^{n}] vs form 1"), s.coeff(n)?, &lagr);
            }
            // x/(1 - alpha) = alpha - 2 alpha^2
            let alpha = alpha_series(order);
            let lhs = s.mul_x().truncate(order);
            let rhs = &alpha - &alpha.mul(&alpha).scale(&rat(2));
            compare_series_to(&mut report, &lhs, 0, |n| Ok(rhs.coeff(n)?.clone()))?;
        }
        IdentityId::HSeries => {
            let p = IdentityParams::require(params.sum, "j/--k/--l", id)?;
            let s = h_gf_series(p, order)?;
            for n in 0..=order as i64 {
                if p.admits(n) {
                    let sum = Rational::from_integer(h_sum(p, n)?);
                    report.compare(format!("[x^{n}]"), s.coeff(n)?, &sum);
                }
            }
        }
        IdentityId::FRationalForms => {
            for fid in SequenceId::F_IDS {
                let s = f_rational_series(fid, order)?;
                for n in 0..=order as i64 {
                    let v = Rational::from_integer(f_value(fid, n, Method::Sum)?);
                    report.compare(format!("{fid} [x^{n}]"), s.coeff(n)?, &v);
                }
            }
            let f1 = f_rational_series(SequenceId::F1, order)?;
            let f4 = f_rational_series(SequenceId::F4, order)?;
            let f5 = f_rational_series(SequenceId::F5, order)?;
            let combo = &Series::linear_combine(&ratio(-1, 6), &f1, &ratio(1, 2), &f5)
                - &Series::constant(ratio(1, 3), order);
            compare_series_to(&mut report, &f4, 0, |n| Ok(combo.coeff(n)?.clone()))?;
        }
        IdentityId::AlphaBinomialExpansion => {
            let r = IdentityParams::require(params.r, "r", id)?;
            let i = IdentityParams::require(params.i, "i", id)?;
            if i < 0 {
                return Err(Error::BadParams(format!("e-a1 needs i >= 0, got {i}")));
            }
            let alpha = alpha_series(order);
            let one = Series::one(order);
            let lhs = (&one - &alpha.scale(&rat(2)))
                .pow_int(2 * r)?
                .mul(&(&alpha - &alpha.mul(&alpha)).pow_int(i)?)
                .mul(&alpha_denominator(&alpha).recip()?);
            compare_series_to(&mut report, &lhs, 0, |n| {
                Ok(pow2(2 * n - 2 * i) * binom(&(ratio(3 * n, 2) - rat(r + i)), n - i))
            })?;
        }
        IdentityId::AlphaPowerExpansion => {
            let r = IdentityParams::require(params.r, "r", id)?;
            let alpha = alpha_series(order);
            let lhs = (&Series::one(order) - &alpha.scale(&rat(2))).pow_int(2 * r)?;
            compare_series_to(&mut report, &lhs, 0, |n| {
                if n == 0 {
                    return Ok(rat(1));
                }
                Ok(-(pow2(2 * n) * ratio(r, n) * binom(&(ratio(3 * n, 2) - rat(r + 1)), n - 1)))
            })?;
        }
        IdentityId::NClosedForm => {
            let alpha = alpha_series(order);
            let u = &Series::one(order) - &alpha.scale(&rat(2));
            let series = Series::linear_combine(&ratio(1, 2), &u, &ratio(-1, 2), &u.mul(&u));
            for n in 1..=order as i64 {
                let (t1, t2) = n_closed_terms(n)?;
                let closed = t1 - t2;
                report.compare(format!("n={n} vs series"), &closed, series.coeff(n)?);
                report.compare(
                    format!("n={n} integral"),
                    &closed.is_integer().to_string(),
                    &"true".to_string(),
                );
                if n >= 2 {
                    let direct = Rational::from_integer(n_direct(n)?);
                    report.compare(format!("n={n} vs sum"), &closed, &direct);
                } else {
                    let v = Rational::from_integer(n_closed(n)?);
                    report.compare("n=1 value", &v, &rat(1));
                }
            }
        }
        IdentityId::FactorialOdd => {
            for m in 0..=n_max {
                let (t1, _) = n_closed_terms(2 * m + 1)?;
                report.compare(format!("m={m}"), &t1, &factorial_form_odd(m as u64));
            }
        }
        IdentityId::FactorialEven => {
            for m in 0..=n_max {
                let (_, t2) = n_closed_terms(2 * m + 2)?;
                report.compare(format!("m={m}"), &t2, &factorial_form_even(m as u64));
            }
        }
        IdentityId::Kummer => {
            let a_max = params.a_max.unwrap_or(20);
            for n in 0..=n_max {
                for a in 0..=a_max {
                    let (lhs, rhs) = kummer_sides(n, a);
                    report.compare(format!("n={n},a={a}"), &Rational::from_integer(lhs), &rhs);
                }
            }
        }
        IdentityId::TermRelations => {
            for n in 1..=n_max {
                for i in -n - 2..=3 * n + 2 {
                    let loc = |which: &str| format!("n={n},i={i} {which}");
                    report.compare(
                        loc("T2+T3=T1"),
                        &(t_term(2, n, i) + t_term(3, n, i)),
                        &t_term(1, n, i),
                    );
                    report.compare(
                        loc("T3(i)-T2(i-1)=T5(i-1)"),
                        &(t_term(3, n, i) - t_term(2, n, i - 1)),
                        &t_term(5, n, i - 1),
                    );
                    report.compare(
                        loc("3T4(i)=2T5(i)-T3(i+1)"),
                        &(t_term(4, n, i) * 3),
                        &(t_term(5, n, i) * 2 - t_term(3, n, i + 1)),
                    );
                }
                let f = |id| f_value(id, n, Method::Sum);
                let (f1, f2, f3) = (f(SequenceId::F1)?, f(SequenceId::F2)?, f(SequenceId::F3)?);
                let (f4, f5) = (f(SequenceId::F4)?, f(SequenceId::F5)?);
                report.compare(format!("n={n} f2+f3=f1"), &(&f2 + &f3), &f1);
                report.compare(format!("n={n} f3-f2=f5"), &(&f3 - &f2), &f5);
                report.compare(format!("n={n} 3f4=2f5-f3"), &(f4 * 3), &(f5 * 2 - f3));
                let sums: Vec<Integer> = (1..=5)
                    .map(|m| (-n - 2..=3 * n + 2).map(|i| t_term(m, n, i)).sum())
                    .collect();
                for (m, id) in (1..=5).zip(SequenceId::F_IDS) {
                    report.compare(format!("n={n} sum T{m} = {id}"), &sums[m - 1], &f(id)?);
                }
            }
        }
    }
    Ok(report)
}
