//! One-point densities of the β = 2 Laguerre ensemble, the three hard-edge
//! limits, the Marchenko–Pastur law, and a Mellin-transform integrator over
//! them that reports a certified error bound.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{self, gauss_laguerre, Integral, MAX_LAGUERRE_NODES};
use crate::scalar::Field;
use crate::specfun::asymptotic::OscSeries;
use crate::specfun::{bessel_j, bessel_j_integral, ln_gamma, ln_gamma_real};

/// Error bound a hard-edge Mellin transform must certify.
pub const HARD_EDGE_TOL: f64 = 1e-7;
/// Relative error bound for the finite-N and Marchenko–Pastur transforms.
pub const FINITE_TOL: f64 = 1e-10;

const HANKEL_ORDER: usize = 14;
const NEAR_CUT: f64 = 8.0;
const RESCALE: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    One,
    Two,
    Four,
}

impl EdgeClass {
    pub fn from_beta(beta: f64) -> Result<Self> {
        match beta {
            b if b == 1.0 => Ok(EdgeClass::One),
            b if b == 2.0 => Ok(EdgeClass::Two),
            b if b == 4.0 => Ok(EdgeClass::Four),
            other => Err(Error::Domain(format!("hard-edge densities exist for β ∈ {{1, 2, 4}}, got {other}"))),
        }
    }

    pub fn beta(self) -> u32 {
        match self {
            EdgeClass::One => 1,
            EdgeClass::Two => 2,
            EdgeClass::Four => 4,
        }
    }

    /// The factor c in u = y²/c that turns the profile into a function of a Bessel argument y.
    fn stretch(self) -> f64 {
        match self {
            EdgeClass::Two => 1.0,
            EdgeClass::One | EdgeClass::Four => 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensitySpec {
    FiniteBeta2 { n: u64, alpha: f64 },
    HardEdge { class: EdgeClass, alpha: f64 },
    MarchenkoPastur { c: f64 },
}

impl DensitySpec {
    /// Support endpoints; `f64::INFINITY` for the half-line.
    pub fn domain(&self) -> (f64, f64) {
        match *self {
            DensitySpec::MarchenkoPastur { c } => mp_edges(c),
            _ => (0.0, f64::INFINITY),
        }
    }

    pub fn density(&self, x: f64) -> Result<f64> {
        match *self {
            DensitySpec::FiniteBeta2 { n, alpha } => density_finite_beta2(n, alpha, x),
            DensitySpec::HardEdge { class, alpha } => hard_edge_density(class, alpha, x),
            DensitySpec::MarchenkoPastur { c } => marchenko_pastur_density(x, c),
        }
    }

    /// Total mass: N, 1, or infinite for the hard edge.
    pub fn mass(&self) -> f64 {
        match *self {
            DensitySpec::FiniteBeta2 { n, .. } => n as f64,
            DensitySpec::HardEdge { .. } => f64::INFINITY,
            DensitySpec::MarchenkoPastur { .. } => 1.0,
        }
    }
}

/// L_n^{(α)}(x) by the three-term recurrence.
pub fn laguerre_poly<F: Field>(n: usize, alpha: &F, x: &F) -> F {
    let mut prev = F::one();
    if n == 0 {
        return prev;
    }
    let mut cur = F::one() + alpha.clone() - x.clone();
    for k in 1..n as i64 {
        let next = ((F::from_i64(2 * k + 1) + alpha.clone() - x.clone()) * cur.clone()
            - (F::from_i64(k) + alpha.clone()) * prev)
            / F::from_i64(k + 1);
        prev = cur;
        cur = next;
    }
    cur
}

/// Runs the recurrence to degree `n` with rescaling; returns
/// (L_{n-1}, L_n, ln scale) with L_j = value · e^{ln scale}, and L_{-1} = 0.
fn laguerre_pair(n: usize, alpha: f64, x: f64) -> (f64, f64, f64) {
    if n == 0 {
        return (0.0, 1.0, 0.0);
    }
    let (mut prev, mut cur, mut log_scale) = (1.0, 1.0 + alpha - x, 0.0);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            prev /= RESCALE;
            cur /= RESCALE;
            log_scale += RESCALE.ln();
        }
    }
    (prev, cur, log_scale)
}

fn check_finite(n: u64, alpha: f64, x: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("ensemble size must be at least 1".into()));
    }
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("α must exceed -1, got {alpha}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("density argument must be positive, got {x}")));
    }
    Ok(())
}

/// ρ_N^{(2)}(x) in Christoffel–Darboux form, using d/dx L_n^{(α)} = -L_{n-1}^{(α+1)}.
pub fn density_finite_beta2(n: u64, alpha: f64, x: f64) -> Result<f64> {
    check_finite(n, alpha, x)?;
    let n = n as usize;
    let (l_prev, l_cur, s0) = laguerre_pair(n, alpha, x);
    // derivatives of L_{N-1} and L_N are -L_{N-2}^{(α+1)} and -L_{N-1}^{(α+1)}
    let (d_prev, d_cur, s1) = laguerre_pair(n - 1, alpha + 1.0, x);
    let (d_prev, d_cur) = if n == 1 { (0.0, -d_cur) } else { (-d_prev, -d_cur) };
    let wronskian = d_prev * l_cur - d_cur * l_prev;
    let (lg_fact, _) = ln_gamma_real(n as f64 + 1.0)?;
    let (lg_norm, _) = ln_gamma_real(n as f64 + alpha)?;
    let log_factor = lg_fact - lg_norm + alpha * x.ln() - x + s0 + s1;
    Ok((wronskian * log_factor.exp()).max(0.0))
}

/// ρ_N^{(2)}(x) as x^α e^{-x} Σ_{j<N} L_j²/h_j with h_j = Γ(j+α+1)/j!.
pub fn density_finite_beta2_sum(n: u64, alpha: f64, x: f64) -> Result<f64> {
    check_finite(n, alpha, x)?;
    let (lg, _) = ln_gamma_real(alpha + 1.0)?;
    let mut inv_h = 1.0;
    let (mut prev, mut cur) = (0.0, 1.0);
    let mut log_scale = 0.0;
    let mut sum = 0.0;
    for j in 0..n as usize {
        let jf = j as f64;
        if j > 0 {
            inv_h *= jf / (jf + alpha);
            let next = ((2.0 * jf - 1.0 + alpha - x) * cur - (jf - 1.0 + alpha) * prev) / jf;
            prev = cur;
            cur = next;
            if cur.abs() > RESCALE {
                prev /= RESCALE;
                cur /= RESCALE;
                sum /= RESCALE * RESCALE;
                log_scale += 2.0 * RESCALE.ln();
            }
        }
        sum += cur * cur * inv_h;
    }
    Ok(sum * (alpha * x.ln() - x + log_scale - lg).exp())
}

fn check_edge(class: EdgeClass, alpha: f64) -> Result<()> {
    if !(alpha > -0.5) {
        return Err(Error::Domain(format!("hard-edge density needs α > -1/2, got {alpha}")));
    }
    if class == EdgeClass::One && !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "the β = 1 hard edge uses ∫J_{{2α-1}}, which needs α > 0, got {alpha}"
        )));
    }
    Ok(())
}

/// ¼(J_a(y)² - J_{a+1}(y) J_{a-1}(y)).
fn bessel_kernel(a: f64, y: f64) -> Result<f64> {
    let j = bessel_j(a, y)?;
    Ok(0.25 * (j * j - bessel_j(a + 1.0, y)? * bessel_j(a - 1.0, y)?))
}

/// The hard-edge density written in the Bessel argument y = √(c u).
fn edge_profile(class: EdgeClass, alpha: f64, y: f64) -> Result<f64> {
    match class {
        EdgeClass::Two => bessel_kernel(alpha, y),
        EdgeClass::Four => {
            let correction = bessel_j(alpha - 1.0, y)? * bessel_j_integral(alpha + 1.0, y)? / (4.0 * y);
            Ok(bessel_kernel(alpha, y)? - correction)
        }
        EdgeClass::One => {
            let a = 2.0 * alpha;
            let tail = 1.0 - bessel_j_integral(a - 1.0, y)?;
            Ok(2.0 * bessel_kernel(a, y)? + bessel_j(a + 1.0, y)? * tail / (2.0 * y))
        }
    }
}

/// ρ_HE^{(β)}(u) for β ∈ {1, 2, 4}.
pub fn hard_edge_density(class: EdgeClass, alpha: f64, u: f64) -> Result<f64> {
    check_edge(class, alpha)?;
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::Domain(format!("density argument must be positive, got {u}")));
    }
    edge_profile(class, alpha, (class.stretch() * u).sqrt())
}

fn mp_edges(c: f64) -> (f64, f64) {
    let r = c.sqrt();
    ((1.0 - r).powi(2), (1.0 + r).powi(2))
}

fn check_mp(c: f64) -> Result<()> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::Domain(format!("Marchenko–Pastur ratio must lie in (0, 1], got {c}")));
    }
    Ok(())
}

/// The density given the distance `from_lo` to the lower edge.
fn mp_from_edge(c: f64, from_lo: f64) -> f64 {
    let (lo, hi) = mp_edges(c);
    let x = lo + from_lo;
    (from_lo * (hi - x)).max(0.0).sqrt() / (2.0 * PI * c * x)
}

/// √((x - c₋)(c₊ - x)) / (2π c x) on (c₋, c₊).
pub fn marchenko_pastur_density(x: f64, c: f64) -> Result<f64> {
    check_mp(c)?;
    let (lo, hi) = mp_edges(c);
    if !(x > lo && x < hi) {
        return Err(Error::Domain(format!("x = {x} lies outside the support ({lo}, {hi})")));
    }
    Ok(mp_from_edge(c, x - lo))
}

fn power(x: f64, exponent: Complex64) -> Complex64 {
    (exponent * x.ln()).exp()
}

/// ∫ x^{-s} ρ(x) dx with its error bound.
pub fn mellin_quadrature(spec: &DensitySpec, s: Complex64) -> Result<Integral> {
    match *spec {
        DensitySpec::FiniteBeta2 { n, alpha } => mellin_finite_beta2(n, alpha, s),
        DensitySpec::HardEdge { class, alpha } => mellin_hard_edge(class, alpha, s),
        DensitySpec::MarchenkoPastur { c } => mellin_mp(c, s),
    }
}

fn certify(value: Integral, required: f64) -> Result<Integral> {
    if value.error <= required && value.value.re.is_finite() && value.value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Tolerance { achieved: value.error, required })
    }
}

fn mellin_finite_beta2(n: u64, alpha: f64, s: Complex64) -> Result<Integral> {
    check_finite(n, alpha, 1.0)?;
    if !(s.re < alpha + 1.0) {
        return Err(Error::Domain(format!(
            "∫x^{{-s}}ρ diverges at 0 unless Re s < α + 1 = {}, got s = {s}",
            alpha + 1.0
        )));
    }
    let result = if s.im == 0.0 && (n as usize) < MAX_LAGUERRE_NODES {
        finite_by_gauss(n, alpha, s.re)?
    } else {
        finite_by_panels(n, alpha, s)?
    };
    let scale = result.value.norm().max(1.0);
    certify(result, FINITE_TOL * scale)
}

/// The polynomial factor ρ(x) / (x^α e^{-x}) at a node.
fn finite_polynomial(n: u64, alpha: f64, x: f64) -> Result<f64> {
    let n = n as usize;
    let (l_prev, l_cur, s0) = laguerre_pair(n, alpha, x);
    let (d_prev, d_cur, s1) = laguerre_pair(n - 1, alpha + 1.0, x);
    let (d_prev, d_cur) = if n == 1 { (0.0, -d_cur) } else { (-d_prev, -d_cur) };
    let (lg_fact, _) = ln_gamma_real(n as f64 + 1.0)?;
    let (lg_norm, _) = ln_gamma_real(n as f64 + alpha)?;
    Ok((d_prev * l_cur - d_cur * l_prev) * (lg_fact - lg_norm + s0 + s1).exp())
}

fn finite_by_gauss(n: u64, alpha: f64, s: f64) -> Result<Integral> {
    let rule = |size: usize| -> Result<f64> {
        let (nodes, weights) = gauss_laguerre(size, alpha - s)?;
        let mut total = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            total += w * finite_polynomial(n, alpha, *x)?;
        }
        Ok(total)
    };
    let exact = rule(n as usize)?;
    let check = rule(n as usize + 1)?;
    Ok(Integral {
        value: Complex64::new(exact, 0.0),
        error: (exact - check).abs(),
    })
}

fn finite_by_panels(n: u64, alpha: f64, s: Complex64) -> Result<Integral> {
    let nf = n as f64;
    let tol = FINITE_TOL * 1e-2 * nf;
    let near = |_x: f64, da: f64| -> Complex64 {
        density_finite_beta2(n, alpha, da).map_or(Complex64::new(0.0, 0.0), |rho| power(da, -s) * rho)
    };
    let far = |x: f64| -> Complex64 {
        density_finite_beta2(n, alpha, x).map_or(Complex64::new(0.0, 0.0), |rho| power(x, -s) * rho)
    };
    let mut end = 4.0 * nf + 40.0 + 10.0 * nf.sqrt() + 2.0 * alpha.abs();
    while far(end).norm() > 1e-20 * nf {
        end *= 1.5;
    }
    let head = quad::tanh_sinh(&near, 0.0, 1.0, tol)?;
    let body = quad::panels(&far, 1.0, end, 1.0, tol)?;
    Ok(head + body)
}

fn mellin_mp(c: f64, s: Complex64) -> Result<Integral> {
    check_mp(c)?;
    if c == 1.0 && !(s.re < 0.5) {
        return Err(Error::Domain(format!(
            "at c = 1 the Marchenko–Pastur transform needs Re s < 1/2, got s = {s}"
        )));
    }
    let (lo, hi) = mp_edges(c);
    let f = |_x: f64, da: f64| -> Complex64 { power(lo + da, -s) * mp_from_edge(c, da) };
    let result = quad::tanh_sinh(&f, lo, hi, 1e-13)?;
    let scale = result.value.norm().max(1.0);
    certify(result, FINITE_TOL * scale)
}

/// Bessel orders entering the profile, for sizing the asymptotic cut.
fn top_order(class: EdgeClass, alpha: f64) -> f64 {
    match class {
        EdgeClass::One => 2.0 * alpha + 1.0,
        EdgeClass::Two | EdgeClass::Four => alpha + 1.0,
    }
}

/// Large-y expansion of the profile with `order` Hankel terms per factor,
/// using the tail integral of J taken at `at`.
fn profile_series(class: EdgeClass, alpha: f64, order: usize, at: f64) -> (OscSeries, f64) {
    let j = |nu: f64| OscSeries::bessel_j(nu, order);
    let quarter = Complex64::new(0.25, 0.0);
    let kernel = |a: f64| j(a).mul(&j(a)).plus(&j(a + 1.0).mul(&j(a - 1.0)).scale(-Complex64::new(1.0, 0.0))).scale(quarter);
    let one = Complex64::new(1.0, 0.0);
    match class {
        EdgeClass::Two => (kernel(alpha), 0.0),
        EdgeClass::Four => {
            let (tail, dropped) = j(alpha + 1.0).tail_integral(at);
            // -(1/(4y)) J_{α-1} (1 - ∫_y^∞ J_{α+1})
            let lower = j(alpha - 1.0).shift_power(one);
            let series = kernel(alpha)
                .plus(&lower.clone().scale(-quarter))
                .plus(&lower.mul(&tail).scale(quarter));
            (series.merge(), dropped)
        }
        EdgeClass::One => {
            let a = 2.0 * alpha;
            let (tail, dropped) = j(a - 1.0).tail_integral(at);
            let upper = j(a + 1.0).shift_power(one);
            let series = kernel(a).scale(Complex64::new(2.0, 0.0)).plus(&upper.mul(&tail).scale(Complex64::new(0.5, 0.0)));
            (series.merge(), dropped)
        }
    }
}

fn mellin_hard_edge(class: EdgeClass, alpha: f64, s: Complex64) -> Result<Integral> {
    check_edge(class, alpha)?;
    if !(s.re > 0.5 && s.re < alpha + 1.0) {
        return Err(Error::Domain(format!(
            "the hard-edge transform is integrable only for 1/2 < Re s < α + 1 = {}, got s = {s}",
            alpha + 1.0
        )));
    }
    // u = y²/c turns ∫u^{-s}ρ(u)du into 2c^{s-1}∫y^{1-2s}R(y)dy
    let c = class.stretch();
    let exponent = Complex64::new(1.0, 0.0) - 2.0 * s;
    let nu = top_order(class, alpha);
    let cut = (30.0 + nu * nu).max(40.0);
    let integrand = |y: f64| -> Complex64 {
        match edge_profile(class, alpha, y) {
            Ok(r) if r == 0.0 => Complex64::new(0.0, 0.0),
            Ok(r) => (exponent * y.ln() + r.abs().ln()).exp() * r.signum(),
            Err(_) => Complex64::new(f64::NAN, 0.0),
        }
    };
    let near = quad::tanh_sinh(&|_x: f64, da: f64| integrand(da), 0.0, NEAR_CUT, 1e-11)?;
    let body = quad::panels(&integrand, NEAR_CUT, cut, 2.0, 1e-10)?;
    let tail_at = |order: usize| -> (Complex64, f64) {
        let (series, dropped_inner) = profile_series(class, alpha, order, cut);
        let (tail, dropped) = series.shift_power(-exponent).tail_integral(cut);
        (tail.eval(cut), dropped + dropped_inner)
    };
    let (tail, dropped) = tail_at(HANKEL_ORDER);
    let (coarse, _) = tail_at(HANKEL_ORDER - 2);
    let tail = Integral {
        value: tail,
        error: dropped + (tail - coarse).norm(),
    };
    let total = near + body + tail;
    let factor = 2.0 * power(c, s - 1.0);
    let scaled = Integral {
        value: total.value * factor,
        error: total.error * factor.norm(),
    };
    certify(scaled, HARD_EDGE_TOL)
}

/// The two sides (∫x^{-s}ρ, Γ(α+1-s)/Γ(s+α) ∫x^{s-1}ρ) of the finite-N reflection.
pub fn reflection_check_finite_beta2(n: u64, alpha: f64, s: Complex64) -> Result<(Complex64, Complex64)> {
    if !(s.re < alpha + 1.0 && s.re > -alpha) {
        return Err(Error::Domain(format!(
            "both sides converge only for -α < Re s < α + 1, got s = {s} at α = {alpha}"
        )));
    }
    let spec = DensitySpec::FiniteBeta2 { n, alpha };
    let left = mellin_quadrature(&spec, s)?.value;
    let mirrored = mellin_quadrature(&spec, Complex64::new(1.0, 0.0) - s)?.value;
    let ratio = (ln_gamma(Complex64::new(alpha + 1.0, 0.0) - s)? - ln_gamma(s + alpha)?).exp();
    Ok((left, ratio * mirrored))
}
