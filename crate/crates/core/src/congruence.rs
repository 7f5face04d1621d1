//! Residues modulo 3.
//!
//! `N_n mod 3` is determined by the base-3 digits of `n`, and the series
//! `sum N_n x^n` reduces to `F + F^2` where `F = sum_m x^(3^m)`. The same
//! `F` gives the residues of `f1..f5` and of the general `H_{j,k,l}`.

use std::fmt;

use crate::arith::{lucas_binom_mod_p, Residue3};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::sequences::{alpha_series, h_gf_series, n_closed, SequenceId, SumParams};
use crate::series::SeriesMod3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TernaryClass {
    /// `3^m` or `2 * 3^m`: a single nonzero base-3 digit.
    PowerOrTwicePower,
    /// `3^a + 3^b` with `a != b`: exactly two digits equal to 1.
    SumTwoDistinctPowers,
    Other,
}

impl fmt::Display for TernaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TernaryClass::PowerOrTwicePower => "power-or-twice-power",
            TernaryClass::SumTwoDistinctPowers => "sum-of-two-distinct-powers",
            TernaryClass::Other => "other",
        })
    }
}

pub fn ternary_classify(n: u64) -> TernaryClass {
    assert!(n >= 1, "ternary_classify needs n >= 1");
    let mut m = n;
    let (mut ones, mut twos) = (0, 0);
    while m > 0 {
        match m % 3 {
            1 => ones += 1,
            2 => twos += 1,
            _ => {}
        }
        m /= 3;
    }
    match (ones, twos) {
        (1, 0) | (0, 1) => TernaryClass::PowerOrTwicePower,
        (2, 0) => TernaryClass::SumTwoDistinctPowers,
        _ => TernaryClass::Other,
    }
}

/// The residue of `N_n` mod 3 implied by the digit class of `n`.
pub fn predicted_residue(n: u64) -> Residue3 {
    match ternary_classify(n) {
        TernaryClass::PowerOrTwicePower => Residue3::ONE,
        TernaryClass::SumTwoDistinctPowers => Residue3::TWO,
        TernaryClass::Other => Residue3::ZERO,
    }
}

/// `F = sum_{m>=0} x^(3^m)` to the given order.
pub fn f_cap_series(order: usize) -> SeriesMod3 {
    let mut s = SeriesMod3::zero(order);
    let mut p = 1usize;
    while p <= order {
        s.set(p, Residue3::ONE);
        p *= 3;
    }
    s
}

/// `F + F^2`, congruent to `sum_{n>=1} N_n x^n`.
pub fn n_mod3_series(order: usize) -> SeriesMod3 {
    let f = f_cap_series(order);
    &f + &f.mul(&f)
}

/// `alpha mod 3`, computed from the exact fixed point and checked against `F`.
pub fn alpha_mod3_series(order: usize) -> Result<SeriesMod3> {
    let reduced = alpha_series(order).reduce_mod3()?;
    let f = f_cap_series(order);
    if reduced != f {
        return Err(Error::mismatch(
            "alpha mod 3 = sum x^(3^m)",
            format!("{:?}", f.support()),
            format!("{:?}", reduced.support()),
        ));
    }
    Ok(reduced)
}

/// `F_m mod 3` as a polynomial in `alpha = F`:
/// `1`, `F`, `1 - F`, `F + F^2`, `1 + F`.
pub fn f_mod3_predicted(id: SequenceId, order: usize) -> Result<SeriesMod3> {
    let f = f_cap_series(order);
    let one = SeriesMod3::one(order);
    Ok(match id {
        SequenceId::F1 => one,
        SequenceId::F2 => f,
        SequenceId::F3 => &one - &f,
        SequenceId::F4 => &f + &f.mul(&f),
        SequenceId::F5 => &one + &f,
        SequenceId::N => return Err(Error::BadParams("f_mod3 takes f1..f5".into())),
    })
}

/// `F_m mod 3` from the polynomial in `F`, checked against the reduction of
/// the exact series.
pub fn f_mod3_series(id: SequenceId, order: usize) -> Result<SeriesMod3> {
    let predicted = f_mod3_predicted(id, order)?;
    let p = id
        .params()
        .ok_or_else(|| Error::BadParams("f_mod3 takes f1..f5".into()))?;
    let exact = h_gf_series(p, order)?.reduce_mod3()?;
    if let Some(n) = (0..=order).find(|&n| exact.coeffs()[n] != predicted.coeffs()[n]) {
        return Err(Error::mismatch(
            format!("{id} mod 3 at n={n}"),
            predicted.coeffs()[n],
            exact.coeffs()[n],
        ));
    }
    Ok(predicted)
}

/// `(1 + a)^l (1 - a)^(1-k) a^(k-j-l)` over Z/3 with `a = F`, coefficients
/// `0..=order`. Negative powers of `a` go through `a = x (F/x)`.
pub fn h_mod3_series(p: SumParams, order: usize) -> Result<SeriesMod3> {
    let e = p.exponent();
    let unit_order = order as i64 - e;
    if unit_order < 0 {
        return Ok(SeriesMod3::zero(order));
    }
    let unit_order = unit_order as usize;
    let f_full = f_cap_series(unit_order + 1);
    let u = f_full.unshift(1)?;
    let f = f_full.truncate(unit_order);
    let one = SeriesMod3::one(unit_order);
    let unit = (&one + &f)
        .pow_int(p.l)?
        .mul(&(&one - &f).pow_int(1 - p.k)?)
        .mul(&u.pow_int(e)?);
    let mut out = SeriesMod3::zero(order);
    for n in 0..=order {
        let idx = n as i64 - e;
        if idx >= 0 {
            out.set(n, unit.coeff(idx as usize)?);
        }
    }
    Ok(out)
}

/// Coefficient `n` of `F + F^2` against the digit classification, `1..=n_max`.
pub fn check_digit_classes(n_max: usize) -> CheckReport {
    let series = n_mod3_series(n_max);
    let mut report = CheckReport::new("congruence-digits", format!("n_max={n_max}"));
    for n in 1..=n_max {
        report.compare(
            format!("n={n}"),
            &series.coeffs()[n],
            &predicted_residue(n as u64),
        );
    }
    report
}

/// `N_n mod 3` from the closed form against the classification, `1..=n_max`.
pub fn check_closed_residues(n_max: i64) -> Result<CheckReport> {
    let mut report = CheckReport::new("congruence-closed", format!("n_max={n_max}"));
    for n in 1..=n_max {
        let r = Residue3::from_integer(&n_closed(n)?);
        report.compare(format!("n={n}"), &r, &predicted_residue(n as u64));
    }
    Ok(report)
}

/// The defining sum for `N_n` evaluated with every binomial reduced by
/// Lucas' theorem, for `2 <= n <= n_max` with `n - 1` prime to 3.
pub fn check_lucas_residues(n_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("congruence-lucas", format!("n_max={n_max}"));
    for n in 2..=n_max {
        // dividing by n - 1 mod 3 is undefined when 3 | n - 1
        let Some(inv) = Residue3::new((n - 1) as i64).inverse() else {
            continue;
        };
        let mut acc = Residue3::ZERO;
        for i in n - 1..=2 * n - 3 {
            let a = lucas_binom_mod_p(3 * n - 3, n + i, 3)?;
            let b = lucas_binom_mod_p(i - 1, i + 1 - n, 3)?;
            acc = acc + Residue3::new((a * b) as i64);
        }
        report.compare(format!("n={n}"), &(acc * inv), &predicted_residue(n));
    }
    Ok(report)
}

/// Reduction of each exact `F_m` against its polynomial in `F`, to `order`.
pub fn check_f_residues(order: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("congruence-f", format!("order={order}"));
    for id in SequenceId::F_IDS {
        let exact = h_gf_series(id.params().expect("f id"), order)?.reduce_mod3()?;
        let predicted = f_mod3_predicted(id, order)?;
        for n in 0..=order {
            report.compare(
                format!("{id} n={n}"),
                &exact.coeffs()[n],
                &predicted.coeffs()[n],
            );
        }
    }
    Ok(report)
}

/// Reduction of the exact `H_{j,k,l}` against the mod-3 product form.
pub fn check_h_residues(p: SumParams, order: usize) -> Result<CheckReport> {
    let exact = h_gf_series(p, order)?.reduce_mod3()?;
    let predicted = h_mod3_series(p, order)?;
    let mut report = CheckReport::new("congruence-h", format!("{p};order={order}"));
    for n in 0..=order {
        report.compare(format!("n={n}"), &exact.coeffs()[n], &predicted.coeffs()[n]);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::n_gf_series;

    #[test]
    fn classify_examples() {
        assert_eq!(ternary_classify(6), TernaryClass::PowerOrTwicePower);
        assert_eq!(ternary_classify(4), TernaryClass::SumTwoDistinctPowers);
        assert_eq!(ternary_classify(5), TernaryClass::Other);
        assert_eq!(ternary_classify(1), TernaryClass::PowerOrTwicePower);
        // 2 * 3 + 1 has digits 21
        assert_eq!(ternary_classify(7), TernaryClass::Other);
        // 9 + 1 + 1 is not a sum of distinct powers
        assert_eq!(ternary_classify(11), TernaryClass::Other);
    }

    #[test]
    fn residue_examples() {
        assert_eq!(predicted_residue(9), Residue3::ONE);
        assert_eq!(predicted_residue(12), Residue3::TWO);
        assert_eq!(predicted_residue(7), Residue3::ZERO);
        assert_eq!(predicted_residue(6), Residue3::from_integer(&1162.into()));
        assert_eq!(predicted_residue(4), Residue3::from_integer(&23.into()));
        assert_eq!(predicted_residue(5), Residue3::from_integer(&156.into()));
    }

    #[test]
    fn f_cap_examples() {
        assert_eq!(f_cap_series(10).support(), vec![1, 3, 9]);
        assert!(f_cap_series(0).is_zero());
        assert_eq!(f_cap_series(81).support(), vec![1, 3, 9, 27, 81]);
    }

    #[test]
    fn n_mod3_table() {
        let s = n_mod3_series(9);
        let got: Vec<u8> = s.coeffs()[1..].iter().map(|r| r.value()).collect();
        assert_eq!(got, vec![1, 1, 1, 2, 0, 1, 0, 0, 1]);
        let s = n_mod3_series(200);
        for m in 0..4 {
            assert_eq!(s.coeffs()[2 * 3usize.pow(m)], Residue3::ONE);
        }
        assert_eq!(s.coeffs()[1 + 27], Residue3::TWO);
        assert_eq!(s.coeffs()[9 + 81], Residue3::TWO);
    }

    #[test]
    fn n_mod3_matches_exact_series() {
        let exact = n_gf_series(60).mul_x().reduce_mod3().unwrap();
        assert_eq!(exact.truncate(60), n_mod3_series(60));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_mod3_series(27).unwrap().support(), vec![1, 3, 9, 27]);
        let a = alpha_series(3).reduce_mod3().unwrap();
        assert_eq!(a.coeffs()[2], Residue3::ZERO);
        assert_eq!(a.coeffs()[3], Residue3::ONE);
    }

    #[test]
    fn f_mod3_examples() {
        let f1 = f_mod3_series(SequenceId::F1, 8).unwrap();
        assert_eq!(f1, SeriesMod3::one(8));
        let f4 = f_mod3_series(SequenceId::F4, 8).unwrap();
        assert_eq!(f4.coeffs()[2], Residue3::ONE);
        assert_eq!(f4.coeffs()[2], predicted_residue(2));
        let f5 = f_mod3_series(SequenceId::F5, 8).unwrap();
        assert_eq!(f5.coeffs()[0], Residue3::ONE);
        assert!(f_mod3_series(SequenceId::N, 8).is_err());
    }

    #[test]
    fn h_mod3_five_instances() {
        for id in SequenceId::F_IDS {
            let p = id.params().unwrap();
            assert_eq!(
                h_mod3_series(p, 40).unwrap(),
                f_mod3_predicted(id, 40).unwrap(),
                "{id}"
            );
            assert!(check_h_residues(p, 40).unwrap().passed());
        }
    }

    #[test]
    fn lucas_route() {
        let r = check_lucas_residues(200).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.compared > 100);
    }
}
