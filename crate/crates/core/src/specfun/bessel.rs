//! Bessel functions of the first kind, their integrals and zeros.
//!
//! Three evaluation branches: the power series for x <= 8, Miller's
//! backward recurrence in the transition zone, and the Hankel expansion for
//! x >= 20 + ν²/2.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::asymptotic::OscSeries;
use super::gamma::{gamma, gamma_real, rgamma, rgamma_real};
use super::hypergeometric::pfq_complex;
use crate::error::{Error, Result};

pub const SERIES_LIMIT: f64 = 8.0;
pub const MIN_ORDER: f64 = -2.0;

pub fn hankel_threshold(nu: f64) -> f64 {
    20.0 + 0.5 * nu * nu
}

fn check_order(nu: f64) -> Result<()> {
    if !(nu > MIN_ORDER) || !nu.is_finite() {
        return Err(Error::Domain(format!("Bessel order {nu} must exceed {MIN_ORDER}")));
    }
    Ok(())
}

fn check_arg(x: f64) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Bessel argument {x} must be finite and nonnegative")));
    }
    Ok(())
}

/// J_ν(x) / (x/2)^ν by its power series.
pub fn bessel_j_scaled_series(nu: f64, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = rgamma_real(nu + 1.0);
    let mut sum = term;
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && kf > -q.sqrt() {
            break;
        }
    }
    sum
}

fn hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut a = 1.0;
    let (mut p, mut q) = (1.0, 0.0);
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = a * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() > prev && k > 2 {
            break;
        }
        prev = next.abs();
        a = next;
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if a.abs() < 1e-17 * p.abs().max(q.abs()) {
            break;
        }
    }
    let phase = (0.5 * nu + 0.25) * PI;
    let (sp, cp) = phase.sin_cos();
    let (sx, cx) = x.sin_cos();
    let chi_cos = cx * cp + sx * sp;
    let chi_sin = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * chi_cos - q * chi_sin)
}

/// J_{ν0+m}(x) for m = 0..count by backward recurrence, with ν0 >= 0.
fn miller(nu0: f64, x: f64, count: usize) -> Vec<f64> {
    debug_assert!((0.0..1.0).contains(&nu0.fract()) && nu0 >= 0.0);
    let base = nu0.fract();
    let offset = (nu0 - base).round() as usize;
    let top_needed = offset + count;
    let reach = x.max(top_needed as f64 + base);
    let mut start = (reach + 30.0 + 12.0 * reach.cbrt()).ceil() as usize;
    start += start % 2;
    let mut vals = vec![0.0f64; start + 2];
    vals[start + 1] = 0.0;
    vals[start] = 1e-300;
    for m in (1..=start).rev() {
        let order = base + m as f64;
        vals[m - 1] = 2.0 * order / x * vals[m] - vals[m + 1];
        if vals[m - 1].abs() > 1e250 {
            for v in vals[m - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let norm = if x >= hankel_threshold(base + 1.0) {
        let (j0, j1) = (hankel(base, x), hankel(base + 1.0, x));
        if j0.abs() > j1.abs() {
            j0 / vals[0]
        } else {
            j1 / vals[1]
        }
    } else {
        // (x/2)^ν0 = Σ_k (ν0+2k) Γ(ν0+k)/k! J_{ν0+2k}(x)
        let mut total = gamma_real(base + 1.0).unwrap_or(1.0) * vals[0];
        let mut c = gamma_real(base + 1.0).unwrap_or(1.0);
        let mut k = 1usize;
        while 2 * k <= start {
            if k > 1 {
                c *= (base + k as f64 - 1.0) / k as f64;
            }
            total += (base + 2.0 * k as f64) * c * vals[2 * k];
            k += 1;
        }
        (0.5 * x).powf(base) / total
    };
    vals[offset..offset + count].iter().map(|v| v * norm).collect()
}

/// J_ν(x) for ν > -2, x >= 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    check_arg(x)?;
    if nu < 0.0 && nu.fract() == 0.0 {
        let n = -nu;
        let sign = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * bessel_j(n, x)?);
    }
    if x == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::Pole(format!("J_{nu} is unbounded at 0")))
        };
    }
    Ok(bessel_j_unchecked(nu, x))
}

fn bessel_j_unchecked(nu: f64, x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        return (0.5 * x).powf(nu) * bessel_j_scaled_series(nu, x);
    }
    if x >= hankel_threshold(nu) {
        return hankel(nu, x);
    }
    recurrence_branch(nu, x)
}

fn recurrence_branch(nu: f64, x: f64) -> f64 {
    if nu >= 0.0 {
        return miller(nu, x, 1)[0];
    }
    // step down from ν0 = frac part in [0,1) using the stable direction
    let base = nu - nu.floor();
    let up = miller(base, x, 2);
    let (mut hi, mut lo) = (up[1], up[0]);
    let mut order = base;
    while order > nu + 0.5 {
        let next = 2.0 * order / x * lo - hi;
        hi = lo;
        lo = next;
        order -= 1.0;
    }
    lo
}

/// J_{ν+m}(x) for m = 0..count with ν >= 0 and x > 0.
pub fn bessel_j_sequence(nu: f64, x: f64, count: usize) -> Result<Vec<f64>> {
    check_order(nu)?;
    check_arg(x)?;
    if nu < 0.0 || x == 0.0 {
        return (0..count).map(|m| bessel_j(nu + m as f64, x)).collect();
    }
    Ok(miller(nu, x, count))
}

/// Expansion point above which ∫_x^∞ J_ν is taken from the asymptotic series.
pub fn integral_tail_threshold(nu: f64) -> f64 {
    30.0 + nu * nu
}

/// ∫_u^∞ J_ν(t) dt as an asymptotic series valid for u >= the threshold.
pub fn bessel_j_tail_series(nu: f64, order: usize, at: f64) -> (OscSeries, f64) {
    OscSeries::bessel_j(nu, order).tail_integral(at)
}

/// ∫₀ᵘ J_α(t) dt for α > -1.
pub fn bessel_j_integral(alpha: f64, u: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("∫J_α needs α > -1, got {alpha}")));
    }
    check_arg(u)?;
    if u == 0.0 {
        return Ok(0.0);
    }
    if u <= 10.0 {
        // u^{α+1} / (2^α Γ(α+2)) = 2 (u/2)^{α+1} / Γ(α+2)
        let prefactor = (alpha + 1.0) * (0.5 * u).ln() + 2f64.ln();
        let series = pfq_complex(
            &[Complex64::new(0.5 * (alpha + 1.0), 0.0)],
            &[Complex64::new(alpha + 1.0, 0.0), Complex64::new(0.5 * (alpha + 3.0), 0.0)],
            Complex64::new(-0.25 * u * u, 0.0),
        )?;
        return Ok(prefactor.exp() * rgamma_real(alpha + 2.0) * series.re);
    }
    if u >= integral_tail_threshold(alpha) {
        let (tail, _) = bessel_j_tail_series(alpha, 16, u);
        return Ok(1.0 - tail.eval(u).re);
    }
    // ∫₀ᵘ J_α = 2 Σ_k J_{α+2k+1}(u)
    let count = (u + 40.0 + 10.0 * u.cbrt()).ceil() as usize;
    let seq = bessel_j_sequence(alpha + 1.0, u, 2 * count)?;
    Ok(2.0 * seq.iter().step_by(2).sum::<f64>())
}

fn mcmahon(nu: f64, n: usize) -> f64 {
    let b = (n as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    let e = 8.0 * b;
    b - (mu - 1.0) / e
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e.powi(5))
}

fn newton_polish(nu: f64, mut x: f64, lo: f64, hi: f64) -> f64 {
    for _ in 0..60 {
        let j = bessel_j_unchecked(nu, x);
        let dj = -bessel_j_unchecked(nu + 1.0, x) + nu / x * j;
        let mut next = x - j / dj;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo.max(x - 1.0) + hi.min(x + 1.0));
        }
        let step = (next - x).abs();
        x = next;
        if step <= 4.0 * f64::EPSILON * x {
            break;
        }
    }
    x
}

fn bisect(nu: f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = bessel_j_unchecked(nu, a);
    for _ in 0..30 {
        let m = 0.5 * (a + b);
        let fm = bessel_j_unchecked(nu, m);
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    newton_polish(nu, 0.5 * (a + b), a, b)
}

/// Zeros below this index come from a sign-change scan; later ones from McMahon's expansion.
fn scan_count(nu: f64) -> usize {
    nu.max(0.0).ceil() as usize + 3
}

/// The first `count` positive zeros of J_ν, ν > -1.
pub fn bessel_zeros(nu: f64, count: usize) -> Result<Vec<f64>> {
    if !(nu > -1.0) {
        return Err(Error::Domain(format!("zeros need ν > -1, got {nu}")));
    }
    let mut zeros = Vec::with_capacity(count);
    let scanned = scan_count(nu).min(count);
    // j_{ν,1} >= 2 sqrt(ν+1) since ζ_ν(2) = 1/(4(ν+1))
    let mut x = 1.999 * (nu + 1.0).sqrt();
    let step = 0.1;
    let mut fx = bessel_j_unchecked(nu, x);
    while zeros.len() < scanned {
        let next = x + step;
        let fnext = bessel_j_unchecked(nu, next);
        if fnext == 0.0 {
            zeros.push(next);
            x = next + 1e-9;
            fx = bessel_j_unchecked(nu, x);
            continue;
        }
        if (fx < 0.0) != (fnext < 0.0) {
            zeros.push(bisect(nu, x, next));
        }
        x = next;
        fx = fnext;
    }
    for n in scanned + 1..=count {
        let guess = mcmahon(nu, n);
        let prev = *zeros.last().unwrap_or(&0.0);
        let z = newton_polish(nu, guess, prev + 0.5, guess + 0.5 * PI);
        zeros.push(z);
    }
    Ok(zeros)
}

/// The n-th positive zero j_{ν,n}.
pub fn bessel_zero(nu: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("zero index starts at 1".into()));
    }
    if n > scan_count(nu) && nu > -1.0 {
        let guess = mcmahon(nu, n);
        return Ok(newton_polish(nu, guess, guess - 0.5 * PI, guess + 0.5 * PI));
    }
    Ok(*bessel_zeros(nu, n)?.last().expect("n >= 1"))
}

/// E_{a,γ}(s) = ∫₀^∞ u^{s-1} J_a(u) J_γ(u) du.
pub fn mellin_bessel_pair(a: f64, g: f64, s: Complex64) -> Result<Complex64> {
    if !(a + g + s.re > 0.0) || !(s.re < 1.0) {
        return Err(Error::Domain(format!(
            "Mellin pair needs Re(a+γ+s) > 0 and Re s < 1, got a={a}, γ={g}, s={s}"
        )));
    }
    let num = gamma(1.0 - s)? * gamma(0.5 * (a + g + s))?;
    let den = rgamma(0.5 * (g - a - s + 2.0))
        * rgamma(0.5 * (a + g - s + 2.0))
        * rgamma(0.5 * (a - g - s + 2.0));
    Ok(num * den / Complex64::new(2.0, 0.0).powc(1.0 - s))
}
