//! Coefficient extraction by Lagrange inversion, in the two forms used for
//! `f = x G(f)`:
//!
//! * `[x^n] Phi(f) = (1/n) [x^(n-1)] Phi'(x) G(x)^n`
//! * `[x^n] Psi(f) / (1 - f G'(f)/G(f)) = [x^n] Psi(x) G(x)^n`
//!
//! Both are checked against direct expansion of `f` by fixed-point iteration.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::series::Series;

fn need(order: usize, need: usize) -> Result<()> {
    if order < need {
        Err(Error::InsufficientOrder { need, have: order })
    } else {
        Ok(())
    }
}

/// `[x^n] Phi(f)` for `n >= 1` via the first form.
pub fn lagrange_form1(phi: &Series, kernel: &Series, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Precondition("first form needs n >= 1".into()));
    }
    if kernel.constant_term().is_zero() {
        return Err(Error::DegenerateKernel);
    }
    need(phi.order(), n)?;
    need(kernel.order(), n - 1)?;
    let dphi = phi.derivative()?;
    let body = dphi.mul(&kernel.truncate(n - 1).pow_int(n as i64)?);
    Ok(body.coeff(n as i64 - 1)? / rat(n as i64))
}

/// `[x^n] x^shift Psi(x) G(x)^n`, the right-hand side of the second form.
///
/// `shift` carries a monomial prefactor outside `psi` and may be negative.
/// When `n - shift < 0` the coefficient sits below the series and is 0.
pub fn lagrange_form2(psi: &Series, kernel: &Series, n: usize, shift: i64) -> Result<Rational> {
    if kernel.constant_term().is_zero() {
        return Err(Error::DegenerateKernel);
    }
    let target = n as i64 - shift;
    if target < 0 {
        return Ok(Rational::zero());
    }
    let target_u = target as usize;
    need(psi.order(), target_u)?;
    need(kernel.order(), target_u)?;
    let body = psi
        .truncate(target_u)
        .mul(&kernel.truncate(target_u).pow_int(n as i64)?);
    Ok(body.coeff(target)?.clone())
}

/// `Psi(f) / (1 - f G'(f)/G(f))` with `f` the fixed point of `G`, to `order`.
pub fn form2_lhs(psi: &Series, kernel: &Series, order: usize) -> Result<Series> {
    need(psi.order(), order)?;
    need(kernel.order(), order + 1)?;
    let f = Series::solve_fixed_point(kernel, order)?;
    let g_f = kernel.compose(&f)?;
    let dg_f = kernel.derivative()?.compose(&f)?;
    let ratio = f.mul(&dg_f).mul(&g_f.recip()?);
    let denom = &Series::one(order) - &ratio;
    Ok(psi.compose(&f)?.mul(&denom.recip()?))
}

/// Compares both sides of the second form for every `n` in `0..=order`.
pub fn verify_form2(psi: &Series, kernel: &Series, order: usize) -> Result<CheckReport> {
    if kernel.constant_term().is_zero() {
        return Err(Error::DegenerateKernel);
    }
    let lhs = form2_lhs(psi, kernel, order)?;
    let mut report = CheckReport::new("lagrange-form2", format!("order={order}"));
    for n in 0..=order {
        let rhs = lagrange_form2(psi, kernel, n, 0)?;
        report.compare(format!("[x^{n}]"), lhs.coeff(n as i64)?, &rhs);
    }
    Ok(report)
}

/// Compares the first form against direct composition for `1 <= n <= order`.
pub fn verify_form1(phi: &Series, kernel: &Series, order: usize) -> Result<CheckReport> {
    let f = Series::solve_fixed_point(kernel, order)?;
    let direct = phi.compose(&f)?;
    let mut report = CheckReport::new("lagrange-form1", format!("order={order}"));
    for n in 1..=order {
        let lagr = lagrange_form1(phi, kernel, n)?;
        report.compare(format!("[x^{n}]"), direct.coeff(n as i64)?, &lagr);
    }
    Ok(report)
}

fn random_poly<R: Rng>(rng: &mut R, degree: usize, order: usize, unit: bool) -> Series {
    let mut cs: Vec<Rational> = (0..=degree)
        .map(|_| crate::arith::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
        .collect();
    if unit && cs[0].is_zero() {
        cs[0] = rat(1);
    }
    Series::polynomial(&cs, order)
}

/// Both forms on `instances` random polynomial triples drawn from a seeded
/// generator, each checked to `order`.
pub fn random_suite(seed: u64, instances: usize, order: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new(
        "lagrange-random",
        format!("seed={seed} instances={instances} order={order}"),
    );
    for case in 0..instances {
        let deg_g = rng.gen_range(0..=3);
        let kernel = random_poly(&mut rng, deg_g, order + 1, true);
        let deg_phi = rng.gen_range(0..=4);
        let phi = random_poly(&mut rng, deg_phi, order, false);
        let deg_psi = rng.gen_range(0..=4);
        let psi = random_poly(&mut rng, deg_psi, order, false);
        let mut r1 = verify_form1(&phi, &kernel, order)?;
        r1.check = format!("form1 case {case}");
        report.absorb(r1);
        let mut r2 = verify_form2(&psi, &kernel, order)?;
        r2.check = format!("form2 case {case}");
        report.absorb(r2);
    }
    Ok(report)
}
