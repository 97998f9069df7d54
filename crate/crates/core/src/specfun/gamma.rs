//! Gamma-family functions in double precision.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Lanczos evaluation, valid for Re(z) >= 1/2.
fn ln_gamma_lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Principal branch of ln Γ(z).
///
/// Off the real axis the left half-plane is reached by upward recurrence,
/// which keeps the branch continuous. For negative real non-integers the
/// imaginary part is 0 or π according to the sign of Γ.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("Gamma pole at z = {}", z.re)));
    }
    if z.re >= 0.5 {
        return Ok(ln_gamma_lanczos(z));
    }
    if z.im == 0.0 {
        let (value, sign) = ln_gamma_real(z.re)?;
        let im = if sign < 0.0 { PI } else { 0.0 };
        return Ok(Complex64::new(value, im));
    }
    let shift = (0.5 - z.re).ceil() as usize;
    let mut correction = Complex64::new(0.0, 0.0);
    for j in 0..shift {
        correction += (z + j as f64).ln();
    }
    Ok(ln_gamma_lanczos(z + shift as f64) - correction)
}

/// ln|Γ(x)| and the sign of Γ(x).
pub fn ln_gamma_real(x: f64) -> Result<(f64, f64)> {
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(Error::Pole(format!("Gamma pole at x = {x}")));
    }
    if x >= 0.5 {
        return Ok((ln_gamma_lanczos(Complex64::new(x, 0.0)).re, 1.0));
    }
    // Γ(x)Γ(1-x) = π / sin(πx)
    let s = (PI * x).sin();
    let (lg, _) = ln_gamma_real(1.0 - x)?;
    Ok((PI.ln() - s.abs().ln() - lg, s.signum()))
}

pub fn gamma_real(x: f64) -> Result<f64> {
    let (lg, sign) = ln_gamma_real(x)?;
    Ok(sign * lg.exp())
}

/// 1/Γ(x), zero at the poles of Γ.
pub fn rgamma_real(x: f64) -> f64 {
    match ln_gamma_real(x) {
        Ok((lg, sign)) => sign * (-lg).exp(),
        Err(_) => 0.0,
    }
}

/// Complex Γ(z).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(z)?.exp())
}

/// Complex 1/Γ(z), entire; zero at z = 0, -1, -2, ...
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    match ln_gamma(z) {
        Ok(lg) => (-lg).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Bernoulli numbers B_0..B_30 (B_1 = -1/2).
pub(crate) const BERNOULLI: [f64; 31] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
];

/// Bernoulli polynomial B_n(a), n <= 30.
pub(crate) fn bernoulli_poly(n: usize, a: Complex64) -> Complex64 {
    let mut binom = 1.0_f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI.iter().enumerate().take(n + 1) {
        if k > 0 {
            binom = binom * (n + 1 - k) as f64 / k as f64;
        }
        if *b != 0.0 {
            acc += binom * *b * a.powu((n - k) as u32);
        }
    }
    acc
}
