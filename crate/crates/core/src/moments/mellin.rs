//! Hard-edge Mellin transforms for β ∈ {1, 2, 4} in closed form.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::specfun::gamma::{gamma, rgamma};
use crate::specfun::hypergeometric::{pfq_complex, terminating_series};
use crate::specfun::pochhammer_in;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Beta4Form {
    /// 2^{s-1}M^{(2)} minus a ₃F₂ correction.
    ThreeFTwo,
    /// A single ₄F₃ at unit argument.
    FourFThree,
}

/// Checks 1/2 < Re s < α + 1 and α > -1/2.
pub fn check_strip(s: Complex64, alpha: f64) -> Result<()> {
    if !(alpha > -0.5) {
        return Err(Error::Domain(format!("hard-edge transforms need α > -1/2, got {alpha}")));
    }
    if !(s.re > 0.5 && s.re < alpha + 1.0) {
        return Err(Error::Domain(format!(
            "s = {s} lies outside the strip 1/2 < Re s < α + 1 = {}",
            alpha + 1.0
        )));
    }
    Ok(())
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn pow2(s: Complex64) -> Complex64 {
    (s * std::f64::consts::LN_2).exp()
}

/// 4^{s-1} Γ(α+1-s) Γ(s-1/2) / (√π Γ(s+1) Γ(s+α)), no strip check.
fn beta2_raw(s: Complex64, alpha: f64) -> Result<Complex64> {
    let num = gamma(alpha + 1.0 - s)? * gamma(s - 0.5)?;
    Ok(pow2(2.0 * (s - 1.0)) * num * rgamma(s + 1.0) * rgamma(s + alpha) / PI.sqrt())
}

pub fn mellin_limit_beta2(s: Complex64, alpha: f64) -> Result<Complex64> {
    check_strip(s, alpha)?;
    beta2_raw(s, alpha)
}

pub fn mellin_limit_beta4(s: Complex64, alpha: f64, form: Beta4Form) -> Result<Complex64> {
    check_strip(s, alpha)?;
    let g = gamma(alpha + 1.0 - s)?;
    match form {
        Beta4Form::ThreeFTwo => {
            let head = pow2(s - 1.0) * beta2_raw(s, alpha)?;
            let pre = rgamma(s - 1.0);
            if pre.norm() == 0.0 {
                return Ok(head);
            }
            let series = pfq_complex(
                &[c(0.5 * alpha + 1.0), alpha + 1.0 - s, 2.0 - s],
                &[c(0.5 * alpha + 2.0), c(alpha + 2.0)],
                c(1.0),
            )?;
            Ok(head - pow2(s - 1.0) * g * pre * rgamma(c(alpha + 3.0)) * series)
        }
        Beta4Form::FourFThree => {
            let series = pfq_complex(
                &[(alpha + 5.0 - s) / 2.0, c(0.5 * alpha + 1.0), alpha + 1.0 - s, 2.0 - s],
                &[(alpha + 3.0 - s) / 2.0, c(0.5 * alpha + 2.0), c(alpha + 2.0)],
                c(1.0),
            )?;
            Ok(pow2(s - 1.0) * (alpha + 3.0 - s) * g * rgamma(c(alpha + 3.0)) * rgamma(s) * series)
        }
    }
}

pub fn mellin_limit_beta1(s: Complex64, alpha: f64) -> Result<Complex64> {
    check_strip(s, alpha)?;
    let first = pow2(s) * beta2_raw(s, 2.0 * alpha)?;
    let second = pow2(s - 1.0) * gamma(alpha + 1.0 - s)? * rgamma(alpha + 1.0 + s);
    let series = pfq_complex(
        &[c(alpha), 2.0 * alpha + 1.0 - s, -s],
        &[c(alpha + 1.0), c(2.0 * alpha)],
        c(1.0),
    )?;
    let third = pow2(s) * gamma(2.0 * alpha + 1.0 - s)? * rgamma(c(2.0 * alpha + 1.0)) * rgamma(s + 1.0) * series;
    Ok(first + second - third)
}

fn int<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

fn factorial<F: Field>(n: u32) -> F {
    (1..=n as i64).fold(F::one(), |acc, j| acc * int(j))
}

fn half<F: Field>() -> F {
    F::ratio(1, 2)
}

fn nonneg_poch<F: Field>(x: &F, n: u32) -> F {
    pochhammer_in(x, n as i64).expect("nonnegative index")
}

fn inverse<F: Field>(x: F, what: &str) -> Result<F> {
    F::one()
        .checked_div(x, || format!("{what} vanishes"))
        .map_err(|e| match e {
            Error::ZeroDivisor(m) => Error::Pole(m),
            other => other,
        })
}

/// The β=2 transform at s = k as a rational function of α:
/// 4^{k-1} (1/2)_{k-1} / (k! (α+1-k)_{2k-1}).
pub fn mellin_beta2_at_integer<F: Field>(k: u32, alpha: &F) -> Result<F> {
    let shifted = alpha.clone() + int(1 - k as i64);
    let den = factorial::<F>(k) * nonneg_poch(&shifted, 2 * k - 1);
    Ok(int::<F>(4).powi(k - 1) * nonneg_poch(&half::<F>(), k - 1) * inverse(den, "(α+1-k)_{2k-1}")?)
}

/// The β=4 ₃F₂ representation at s = k, where the series terminates.
pub fn mellin_beta4_at_integer<F: Field>(k: u32, alpha: &F) -> Result<F> {
    let head = int::<F>(2).powi(k - 1) * mellin_beta2_at_integer(k, alpha)?;
    if k == 1 {
        return Ok(head);
    }
    let a_half = alpha.clone() * half::<F>();
    let shifted = alpha.clone() + int(1 - k as i64);
    let series = terminating_series(
        &[a_half.clone() + F::one(), shifted.clone(), int(2 - k as i64)],
        &[a_half + int(2), alpha.clone() + int(2)],
        &F::one(),
        (k - 2) as u64,
    )?;
    let pre = int::<F>(2).powi(k - 1)
        * inverse(factorial::<F>(k - 2) * nonneg_poch(&shifted, k + 2), "(α+1-k)_{k+2}")?;
    Ok(head - pre * series)
}

/// The β=1 representation at s = k, where the series terminates.
pub fn mellin_beta1_at_integer<F: Field>(k: u32, alpha: &F) -> Result<F> {
    let two_alpha = alpha.clone() * int(2);
    let first = int::<F>(2).powi(k) * mellin_beta2_at_integer(k, &two_alpha)?;
    let shifted = alpha.clone() + int(1 - k as i64);
    let second = int::<F>(2).powi(k - 1) * inverse(nonneg_poch(&shifted, 2 * k), "(α+1-k)_{2k}")?;
    let top = two_alpha.clone() + int(1 - k as i64);
    let series = terminating_series(
        &[alpha.clone(), top.clone(), int(-(k as i64))],
        &[alpha.clone() + F::one(), two_alpha],
        &F::one(),
        k as u64,
    )?;
    let third = int::<F>(2).powi(k)
        * inverse(nonneg_poch(&top, k) * factorial::<F>(k), "(2α+1-k)_k")?
        * series;
    Ok(first + second - third)
}
