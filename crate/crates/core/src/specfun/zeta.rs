//! Hurwitz zeta and the Bessel zeta function ζ_ν(2k) = Σ_n j_{ν,n}^{-2k}.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;

use super::bessel::bessel_zeros;
use super::gamma::BERNOULLI;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Zeros summed explicitly by [`ZetaMethod::ZeroSum`].
pub const ZERO_SUM_TERMS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaMethod {
    Recursion,
    ZeroSum,
}

/// ζ(s, a) = Σ_{n>=0} (n+a)^{-s} for Re s > 1, a > 0, by Euler–Maclaurin.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(s.re > 1.0) || !(a > 0.0) {
        return Err(Error::Domain(format!("Hurwitz zeta needs Re s > 1 and a > 0, got s={s}, a={a}")));
    }
    let shift = ((30.0 + s.norm()) - a).ceil().max(0.0) as usize;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..shift {
        sum += Complex64::new(a + n as f64, 0.0).powc(-s);
    }
    let b = a + shift as f64;
    let lb = b.ln();
    let pow = |e: Complex64| (e * lb).exp();
    sum += pow(1.0 - s) / (s - 1.0) + 0.5 * pow(-s);
    // Σ_j B_{2j}/(2j)! s(s+1)...(s+2j-2) b^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut prev = f64::INFINITY;
    for j in 1..=15usize {
        let term = BERNOULLI[2 * j] / fact * rising * pow(-s - (2 * j - 1) as f64);
        if term.norm() > prev {
            break;
        }
        prev = term.norm();
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
        let k1 = (2 * j) as f64;
        rising *= (s + k1 - 1.0) * (s + k1);
        fact *= (k1 + 1.0) * (k1 + 2.0);
    }
    Ok(sum)
}

/// σ_1..σ_n with σ_m = ζ_ν(2m), from σ_1 = 1/(4(ν+1)) and
/// σ_m = (1/(m+ν)) Σ_{i=1}^{m-1} σ_i σ_{m-i}.
pub fn rayleigh_sequence<F: Field>(nu: &F, n: usize) -> Result<Vec<F>> {
    let mut out: Vec<F> = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    let four = F::from_i64(4);
    out.push(F::one().checked_div(four * (nu.clone() + F::one()), || "4(ν+1) vanishes".into())?);
    for m in 2..=n {
        let mut acc = F::zero();
        for i in 1..m {
            acc = acc + out[i - 1].clone() * out[m - i - 1].clone();
        }
        out.push(acc.checked_div(nu.clone() + F::from_i64(m as i64), || format!("{m}+ν vanishes"))?);
    }
    Ok(out)
}

fn check_inputs(nu: f64, two_k: u32) -> Result<()> {
    if !(nu > -1.0) {
        return Err(Error::Domain(format!("Bessel zeta needs ν > -1, got {nu}")));
    }
    if two_k < 2 || !two_k.is_multiple_of(2) {
        return Err(Error::Domain(format!("order {two_k} must be an even integer >= 2")));
    }
    Ok(())
}

fn zero_sum(nu: f64, k: u32) -> Result<f64> {
    let zeros = bessel_zeros(nu, ZERO_SUM_TERMS)?;
    let p = 2 * k as i32;
    let head: f64 = zeros.iter().rev().map(|z| f64::powi(*z, -p)).sum();
    // j_n ≈ b (1 - c1 b^{-2} - c2 b^{-4} - c3 b^{-6}), b = (n + ν/2 - 1/4)π
    let mu = 4.0 * nu * nu;
    let c1 = (mu - 1.0) / 8.0;
    let c2 = 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * 512.0);
    let c3 = 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * 32_768.0);
    let kk = p as f64;
    let d1 = kk * c1;
    let d2 = kk * c2 + 0.5 * kk * (kk + 1.0) * c1 * c1;
    let d3 = kk * c3 + kk * (kk + 1.0) * c1 * c2 + kk * (kk + 1.0) * (kk + 2.0) / 6.0 * c1.powi(3);
    let start = ZERO_SUM_TERMS as f64 + 1.0 + 0.5 * nu - 0.25;
    let mut tail = 0.0;
    for (m, d) in [1.0, d1, d2, d3].into_iter().enumerate() {
        let e = kk + 2.0 * m as f64;
        tail += d * PI.powf(-e) * hurwitz_zeta(Complex64::new(e, 0.0), start)?.re;
    }
    Ok(head + tail)
}

/// ζ_ν(2k); rational ν gives an exact rational under [`ZetaMethod::Recursion`].
pub fn bessel_zeta(nu: &Scalar, two_k: u32, method: ZetaMethod) -> Result<Scalar> {
    let nu_f = nu.to_f64()?;
    check_inputs(nu_f, two_k)?;
    let k = (two_k / 2) as usize;
    match (method, nu) {
        (ZetaMethod::Recursion, Scalar::Rational(r)) => {
            let seq = rayleigh_sequence::<BigRational>(r, k)?;
            Ok(Scalar::Rational(seq[k - 1].clone()))
        }
        (ZetaMethod::Recursion, _) => {
            let seq = rayleigh_sequence::<f64>(&nu_f, k)?;
            Ok(Scalar::Real(seq[k - 1]))
        }
        (ZetaMethod::ZeroSum, _) => Ok(Scalar::Real(zero_sum(nu_f, k as u32)?)),
    }
}
