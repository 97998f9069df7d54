//! Quadrature rules over complex-valued integrands on finite intervals.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::tridiagonal_eigenvalues;
use crate::specfun::ln_gamma_real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub error: f64,
}

impl std::ops::Add for Integral {
    type Output = Integral;
    fn add(self, rhs: Integral) -> Integral {
        Integral {
            value: self.value + rhs.value,
            error: self.error + rhs.error,
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel with the embedded 7-point Gauss difference as error.
pub fn gauss_kronrod_15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Integral {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    Integral {
        value: kronrod * h,
        error: ((kronrod - gauss) * h).norm(),
    }
}

/// Globally adaptive Gauss–Kronrod bisection.
pub fn adaptive<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, abs_tol: f64, max_panels: usize) -> Result<Integral> {
    let mut panels = vec![(a, b, gauss_kronrod_15(f, a, b))];
    loop {
        let total: f64 = panels.iter().map(|p| p.2.error).sum();
        if total <= abs_tol {
            break;
        }
        if panels.len() >= max_panels {
            return Err(Error::Tolerance { achieved: total, required: abs_tol });
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2.error.total_cmp(&y.1 .2.error))
            .expect("nonempty");
        let (lo, hi, _) = panels.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        panels.push((lo, mid, gauss_kronrod_15(f, lo, mid)));
        panels.push((mid, hi, gauss_kronrod_15(f, mid, hi)));
    }
    panels.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(panels.iter().fold(
        Integral { value: Complex64::new(0.0, 0.0), error: 0.0 },
        |acc, p| acc + p.2,
    ))
}

/// Fixed-width Gauss–Kronrod panels, each refined adaptively to its share of the tolerance.
pub fn panels<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, width: f64, abs_tol: f64) -> Result<Integral> {
    let count = ((b - a) / width).ceil().max(1.0) as usize;
    let h = (b - a) / count as f64;
    let share = abs_tol / count as f64;
    let mut total = Integral { value: Complex64::new(0.0, 0.0), error: 0.0 };
    for i in 0..count {
        let lo = a + i as f64 * h;
        let hi = if i + 1 == count { b } else { lo + h };
        total = total + adaptive(f, lo, hi, share, 200)?;
    }
    Ok(total)
}

const XGL5: [f64; 5] = [
    0.0,
    0.538_469_310_105_683_1,
    -0.538_469_310_105_683_1,
    0.906_179_845_938_664,
    -0.906_179_845_938_664,
];
const WGL5: [f64; 5] = [
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
    0.236_926_885_056_189_1,
];

/// Composite 5-point Gauss–Legendre on equal panels, for smooth real integrands.
pub fn gauss_legendre_panels<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, count: usize) -> f64 {
    let h = (b - a) / count as f64;
    let mut total = 0.0;
    for p in 0..count {
        let mid = a + (p as f64 + 0.5) * h;
        for i in 0..5 {
            total += WGL5[i] * f(mid + 0.5 * h * XGL5[i]);
        }
    }
    total * 0.5 * h
}

/// Tanh-sinh quadrature on [a, b]; tolerates integrable endpoint singularities.
/// The integrand receives the point and its distance to `a`.
pub fn tanh_sinh<F: Fn(f64, f64) -> Complex64>(f: &F, a: f64, b: f64, abs_tol: f64) -> Result<Integral> {
    let width = b - a;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let node = |t: f64| -> (f64, f64, f64) {
        let u = half_pi * t.sinh();
        let from_a = width / (1.0 + (2.0 * u).exp());
        let from_b = width / (1.0 + (-2.0 * u).exp());
        let weight = half_pi * t.cosh() * width / (2.0 * (u.cosh()).powi(2));
        (from_a, from_b, weight)
    };
    let t_max = 6.5;
    let mut h = 0.5;
    let eval = |t: f64| -> Complex64 {
        let (da, db, w) = node(t);
        if w == 0.0 || da <= 0.0 || db <= 0.0 || !w.is_finite() {
            return Complex64::new(0.0, 0.0);
        }
        let x = if da < db { a + da } else { b - db };
        f(x, da) * w
    };
    let mut sum = eval(0.0);
    let mut n = 1;
    while n as f64 * h <= t_max {
        let t = n as f64 * h;
        sum += eval(t) + eval(-t);
        n += 1;
    }
    let mut estimate = sum * h;
    let mut diff = f64::INFINITY;
    for _ in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= t_max {
            let t = k as f64 * h;
            sum += eval(t) + eval(-t);
            k += 2;
        }
        let next = sum * h;
        diff = (next - estimate).norm();
        estimate = next;
        if diff <= 0.1 * abs_tol && h < 0.1 {
            return Ok(Integral { value: estimate, error: diff.max(1e-16 * estimate.norm()) });
        }
    }
    Err(Error::Tolerance { achieved: diff, required: abs_tol })
}

/// Largest generalized Gauss–Laguerre rule built here.
pub const MAX_LAGUERRE_NODES: usize = 100;

/// Nodes and weights of the n-point rule for the weight x^a e^{-x} on (0, ∞),
/// exact for polynomials of degree below 2n.
pub fn gauss_laguerre(n: usize, a: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n > MAX_LAGUERRE_NODES {
        return Err(Error::Domain(format!("Gauss–Laguerre size must be in 1..={MAX_LAGUERRE_NODES}, got {n}")));
    }
    if !(a > -1.0) {
        return Err(Error::Domain(format!("Gauss–Laguerre weight exponent must exceed -1, got {a}")));
    }
    let diag: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + a + 1.0).collect();
    let off: Vec<f64> = (1..n).map(|i| (i as f64 * (i as f64 + a)).sqrt()).collect();
    let mut nodes = tridiagonal_eigenvalues(&diag, &off)?;
    let laguerre = |m: usize, x: f64| -> (f64, f64) {
        let (mut prev, mut cur) = (1.0, 1.0 + a - x);
        if m == 0 {
            return (0.0, 1.0);
        }
        for k in 1..m {
            let next = ((2.0 * k as f64 + 1.0 + a - x) * cur - (k as f64 + a) * prev) / (k as f64 + 1.0);
            prev = cur;
            cur = next;
        }
        (prev, cur)
    };
    for x in &mut nodes {
        for _ in 0..3 {
            let (prev, cur) = laguerre(n, *x);
            let deriv = (n as f64 * cur - (n as f64 + a) * prev) / *x;
            if deriv == 0.0 {
                break;
            }
            *x -= cur / deriv;
        }
    }
    let (lg_top, _) = ln_gamma_real(n as f64 + a + 1.0)?;
    let (lg_n, _) = ln_gamma_real(n as f64 + 1.0)?;
    let log_head = lg_top - lg_n - 2.0 * ((n + 1) as f64).ln();
    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, next) = laguerre(n + 1, x);
            (log_head + x.ln() - 2.0 * next.abs().ln()).exp()
        })
        .collect();
    Ok((nodes, weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_polynomials() {
        let f = |x: f64| Complex64::new(x.powi(20), x);
        let r = gauss_kronrod_15(&f, 0.0, 1.0);
        assert!((r.value.re - 1.0 / 21.0).abs() < 1e-15);
        assert!((r.value.im - 0.5).abs() < 1e-15);
    }

    #[test]
    fn adaptive_oscillatory() {
        let f = |x: f64| Complex64::new(x.cos(), 0.0);
        let r = adaptive(&f, 0.0, 100.0, 1e-12, 500).unwrap();
        assert!((r.value.re - 100f64.sin()).abs() < 1e-12);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        // ∫₀¹ x^{-0.9} dx = 10
        let f = |_x: f64, da: f64| Complex64::new(da.powf(-0.9), 0.0);
        let r = tanh_sinh(&f, 0.0, 1.0, 1e-11).unwrap();
        assert!((r.value.re - 10.0).abs() < 1e-9, "{:?}", r);
        // ∫₀² ln x dx = 2 ln 2 - 2
        let g = |x: f64, _da: f64| Complex64::new(x.ln(), 0.0);
        let r = tanh_sinh(&g, 0.0, 2.0, 1e-12).unwrap();
        assert!((r.value.re - (2.0 * 2f64.ln() - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn gauss_laguerre_moments() {
        // ∫ x^k x^a e^{-x} = Γ(k+a+1), exact for k < 2n
        for &(n, a) in &[(1usize, 0.0), (5, 1.5), (12, -0.4), (40, 3.0)] {
            let (x, w) = gauss_laguerre(n, a).unwrap();
            for k in 0..2 * n as i32 {
                let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(k)).sum();
                let exact = crate::specfun::gamma_real(k as f64 + a + 1.0).unwrap();
                assert!((got - exact).abs() < 1e-11 * exact, "n={n} a={a} k={k}: {got} vs {exact}");
            }
        }
        assert!(gauss_laguerre(0, 0.0).is_err());
        assert!(gauss_laguerre(3, -1.0).is_err());
    }
}
