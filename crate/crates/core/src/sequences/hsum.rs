use std::fmt;

use num_traits::{One, Zero};

use super::{alpha_denominator, alpha_series, Method, SequenceId};
use crate::arith::{binom, binom_int, pow2, rat, ratio, to_integer, Integer, Rational};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::series::Series;

/// Parameters of `h_{j,k,l}(n) = sum_i C(3n+j, n+j-k+l-i) C(n-l+i, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SumParams {
    pub j: i64,
    pub k: i64,
    pub l: i64,
}

impl SumParams {
    pub fn new(j: i64, k: i64, l: i64) -> Self {
        SumParams { j, k, l }
    }

    /// Exponent of the monomial prefactor, `k - j - l`; `H_{j,k,l}` starts there.
    pub fn exponent(&self) -> i64 {
        self.k - self.j - self.l
    }

    /// Whether `n` lies in the range where the two summation forms coincide.
    pub fn admits(&self, n: i64) -> bool {
        3 * n + self.j >= 0 && n >= self.l
    }
}

impl fmt::Display for SumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={},k={},l={}", self.j, self.k, self.l)
    }
}

/// The defining sum. Needs `3n + j >= 0`; an empty range gives 0.
pub fn h_sum(p: SumParams, n: i64) -> Result<Integer> {
    let top = 3 * n + p.j;
    if top < 0 {
        return Err(Error::Precondition(format!(
            "h_{{{p}}}({n}) needs 3n + j >= 0"
        )));
    }
    let upper = n + p.j - p.k + p.l;
    Ok((0..=upper)
        .map(|i| binom_int(top, upper - i) * binom_int(n - p.l + i, i))
        .sum())
}

/// The re-indexed sum `sum_{i=n-l}^{2n+j-k} C(3n+j, n+i+k) C(i, n-l)`,
/// valid when `3n + j >= 0` and `n >= l`.
pub fn h_sum_reindexed(p: SumParams, n: i64) -> Result<Integer> {
    if !p.admits(n) {
        return Err(Error::Precondition(format!(
            "re-indexed h_{{{p}}}({n}) needs 3n + j >= 0 and n >= l"
        )));
    }
    let top = 3 * n + p.j;
    Ok((n - p.l..=2 * n + p.j - p.k)
        .map(|i| binom_int(top, n + i + p.k) * binom_int(i, n - p.l))
        .sum())
}

/// `H_{j,k,l} = (1-2a)^l a^(k-j-l) / ((1-6a+6a^2)(1-a)^(k-1))` with `a = alpha`,
/// coefficients `0..=order`.
///
/// `a^(k-j-l)` may have a negative exponent. It is split as `x^e u^e` with
/// `u = a/x` a unit, so only the monomial shift carries the sign; terms at
/// negative powers of `x` are dropped.
pub fn h_gf_series(p: SumParams, order: usize) -> Result<Series> {
    let e = p.exponent();
    let unit_order = order as i64 - e;
    if unit_order < 0 {
        return Ok(Series::zero(order));
    }
    let unit_order = unit_order as usize;
    let alpha_full = alpha_series(unit_order + 1);
    let u = alpha_full.div_x()?;
    let alpha = alpha_full.truncate(unit_order);
    let one = Series::one(unit_order);
    let one_minus_2a = &one - &alpha.scale(&rat(2));
    let one_minus_a = &one - &alpha;
    let unit = one_minus_2a
        .pow_int(p.l)?
        .mul(&u.pow_int(e)?)
        .mul(&one_minus_a.pow_int(1 - p.k)?)
        .mul(&alpha_denominator(&alpha).recip()?);
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate() {
        let idx = n as i64 - e;
        if idx >= 0 {
            *c = unit.coeff(idx)?.clone();
        }
    }
    Series::new(coeffs)
}

/// `F_m` as the rational function of `alpha` over `1 - 6 alpha + 6 alpha^2`.
pub fn f_rational_series(id: SequenceId, order: usize) -> Result<Series> {
    let alpha = alpha_series(order);
    let one = Series::one(order);
    let numerator = match id {
        SequenceId::F1 => one,
        SequenceId::F2 => alpha.clone(),
        SequenceId::F3 => &one - &alpha,
        SequenceId::F4 => &alpha - &alpha.mul(&alpha).scale(&rat(2)),
        SequenceId::F5 => &one - &alpha.scale(&rat(2)),
        SequenceId::N => {
            return Err(Error::BadParams("N has no F-form".into()));
        }
    };
    Ok(numerator.mul(&alpha_denominator(&alpha).recip()?))
}

/// Closed forms in terms of `A = 2^(2n-1) C(3n/2, n)` and
/// `B = 2^(2n-1) C(3n/2 - 1/2, n)`:
/// `f1 = 2A`, `f2 = A - B`, `f3 = A + B`, `f4 = B - A/3` (n >= 1), `f5 = 2B`.
pub fn f_closed(id: SequenceId, n: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::Precondition(format!("f needs n >= 0, got {n}")));
    }
    let scale = pow2(2 * n - 1);
    let a = &scale * binom(&ratio(3 * n, 2), n);
    let b = &scale * binom(&(ratio(3 * n, 2) - ratio(1, 2)), n);
    let v = match id {
        SequenceId::F1 => a * rat(2),
        SequenceId::F2 => a - b,
        SequenceId::F3 => a + b,
        SequenceId::F4 => {
            if n < 1 {
                return Err(Error::Precondition(
                    "closed form of f4 requires n >= 1".into(),
                ));
            }
            b - a / rat(3)
        }
        SequenceId::F5 => b * rat(2),
        SequenceId::N => return Err(Error::BadParams("use n_closed for N".into())),
    };
    to_integer(&v)
}

/// `f_m(n)` by one method. The sum route pins `f4(0) = 0` and `f5(0) = 1`.
pub fn f_value(id: SequenceId, n: i64, method: Method) -> Result<Integer> {
    let p = id
        .params()
        .ok_or_else(|| Error::BadParams("f_value takes f1..f5".into()))?;
    if n < 0 {
        return Err(Error::Precondition(format!("f needs n >= 0, got {n}")));
    }
    match method {
        Method::Sum => match (id, n) {
            (SequenceId::F4, 0) => Ok(Integer::zero()),
            (SequenceId::F5, 0) => Ok(Integer::one()),
            _ => h_sum(p, n),
        },
        Method::Gf => to_integer(h_gf_series(p, n as usize)?.coeff(n)?),
        Method::Closed => f_closed(id, n),
        Method::Lemma => Err(Error::BadParams(
            "the lemma method only applies to N".into(),
        )),
    }
}

/// `f_m(n)` by every applicable method; disagreement is an error.
pub fn f_value_agreed(id: SequenceId, n: i64) -> Result<Integer> {
    let by_sum = f_value(id, n, Method::Sum)?;
    let by_gf = f_value(id, n, Method::Gf)?;
    if by_gf != by_sum {
        return Err(Error::mismatch(
            format!("{id}({n}) gf vs sum"),
            &by_sum,
            by_gf,
        ));
    }
    if !(id == SequenceId::F4 && n == 0) {
        let by_closed = f_value(id, n, Method::Closed)?;
        if by_closed != by_sum {
            return Err(Error::mismatch(
                format!("{id}({n}) closed vs sum"),
                &by_sum,
                by_closed,
            ));
        }
    }
    Ok(by_sum)
}

/// Generating function against defining sum for every `(j,k,l)` in the cube
/// `range^3`, on the admissible `n <= order`.
pub fn hjkl_sweep(lo: i64, hi: i64, order: usize) -> Result<Vec<(SumParams, CheckReport)>> {
    let mut out = Vec::new();
    for j in lo..=hi {
        for k in lo..=hi {
            for l in lo..=hi {
                let p = SumParams::new(j, k, l);
                let series = h_gf_series(p, order)?;
                let mut report = CheckReport::new("e-hjkl", p.to_string());
                for n in 0..=order as i64 {
                    if p.admits(n) {
                        let sum = Rational::from_integer(h_sum(p, n)?);
                        report.compare(format!("n={n}"), series.coeff(n)?, &sum);
                    }
                }
                out.push((p, report));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    pub(crate) const F_TABLE: [[i64; 9]; 5] = [
        [1, 6, 48, 420, 3840, 36036, 344064, 3325608, 32440320],
        [0, 1, 9, 82, 765, 7266, 69930, 679764, 6659037],
        [1, 5, 39, 338, 3075, 28770, 274134, 2645844, 25781283],
        [0, 1, 7, 58, 515, 4746, 44758, 428772, 4154403],
        [1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246],
    ];

    #[test]
    fn sum_examples() {
        assert_eq!(h_sum(SumParams::new(0, 1, 0), 4).unwrap(), int(765));
        assert_eq!(h_sum(SumParams::new(1, 1, 0), 0).unwrap(), int(1));
        assert_eq!(h_sum(SumParams::new(-1, 1, 1), 5).unwrap(), int(4746));
        assert!(h_sum(SumParams::new(-1, 0, 0), 0).is_err());
    }

    #[test]
    fn gf_examples() {
        let f3 = h_gf_series(SumParams::new(0, 0, 0), 3).unwrap();
        assert_eq!(f3, Series::from_ints(&[1, 5, 39, 338], 3));
        let f5 = h_gf_series(SumParams::new(0, 1, 1), 0).unwrap();
        assert_eq!(f5.coeff(0).unwrap(), &rat(1));
        let f1 = h_gf_series(SumParams::new(1, 1, 0), 2).unwrap();
        assert_eq!(f1, Series::from_ints(&[1, 6, 48], 2));
    }

    #[test]
    fn table_by_every_method() {
        for (row, id) in F_TABLE.iter().zip(SequenceId::F_IDS) {
            let gf = h_gf_series(id.params().unwrap(), 8).unwrap();
            let rational = f_rational_series(id, 8).unwrap();
            for (n, &v) in row.iter().enumerate() {
                let n = n as i64;
                assert_eq!(
                    f_value(id, n, Method::Sum).unwrap(),
                    int(v),
                    "{id}({n}) sum"
                );
                assert_eq!(gf.coeff(n).unwrap(), &rat(v), "{id}({n}) gf");
                assert_eq!(rational.coeff(n).unwrap(), &rat(v), "{id}({n}) F-form");
                if !(id == SequenceId::F4 && n == 0) {
                    assert_eq!(f_closed(id, n).unwrap(), int(v), "{id}({n}) closed");
                }
            }
        }
    }

    #[test]
    fn closed_examples() {
        assert_eq!(
            f_value(SequenceId::F1, 3, Method::Closed).unwrap(),
            int(420)
        );
        assert_eq!(f_value(SequenceId::F5, 1, Method::Closed).unwrap(), int(4));
        assert_eq!(
            f_value(SequenceId::F4, 8, Method::Sum).unwrap(),
            int(4154403)
        );
        assert!(matches!(
            f_value(SequenceId::F4, 0, Method::Closed),
            Err(Error::Precondition(_))
        ));
        assert_eq!(f_value_agreed(SequenceId::F4, 0).unwrap(), int(0));
        assert_eq!(f_value_agreed(SequenceId::F2, 6).unwrap(), int(69930));
    }

    #[test]
    fn reindexing_matches() {
        for j in -2..=2 {
            for k in -2..=2 {
                for l in -2..=2 {
                    let p = SumParams::new(j, k, l);
                    for n in 0..=25 {
                        if p.admits(n) {
                            assert_eq!(
                                h_sum(p, n).unwrap(),
                                h_sum_reindexed(p, n).unwrap(),
                                "{p} n={n}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn five_instances_hold_everywhere() {
        for id in SequenceId::F_IDS {
            let p = id.params().unwrap();
            let s = h_gf_series(p, 30).unwrap();
            for n in 0..=30 {
                assert_eq!(
                    s.coeff(n).unwrap(),
                    &Rational::from_integer(f_value(id, n, Method::Sum).unwrap())
                );
            }
        }
    }

    #[test]
    fn f4_linear_relation() {
        let order = 20;
        let f1 = f_rational_series(SequenceId::F1, order).unwrap();
        let f4 = f_rational_series(SequenceId::F4, order).unwrap();
        let f5 = f_rational_series(SequenceId::F5, order).unwrap();
        let rhs = &Series::linear_combine(&ratio(-1, 6), &f1, &ratio(1, 2), &f5)
            - &Series::constant(ratio(1, 3), order);
        assert_eq!(f4, rhs);
    }
}
