//! Named invariant suites: each check records the achieved error against
//! the required tolerance, so reports are self-describing.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::densities::{
    density_finite_beta2, hard_edge_density, mellin_quadrature, reflection_check_finite_beta2, DensitySpec, EdgeClass,
};
use crate::ensemble::{laguerre_zeros, mc_inverse_moment, EnsembleConfig};
use crate::error::{Error, Result};
use crate::moments::{
    duality_map, integer_moment, mellin_beta1_at_integer, mellin_beta2_at_integer, mellin_beta4_at_integer,
    mellin_limit_beta1, mellin_limit_beta2, mellin_limit_beta4, moment_finite_n, moment_limit, rayleigh_table,
    recurrence_moment, tabulated_finite_n, tabulated_limit, Beta4Form, BetaClass,
};
use crate::scalar::{Field, Mode, Scalar};
use crate::specfun::{bessel_zeta, ZetaMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    Quadrature,
    Duality,
    Lowtemp,
    MonteCarlo,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::Quadrature => "quadrature",
            Suite::Duality => "duality",
            Suite::Lowtemp => "lowtemp",
            Suite::MonteCarlo => "montecarlo",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "formulas" => Suite::Formulas,
            "quadrature" => Suite::Quadrature,
            "duality" => Suite::Duality,
            "lowtemp" => Suite::Lowtemp,
            "montecarlo" => Suite::MonteCarlo,
            "all" => Suite::All,
            other => return Err(Error::Domain(format!("unknown suite {other:?}"))),
        })
    }
}

/// Exact comparisons record achieved 0 (equal) or 1 with required 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub achieved: f64,
    pub required: f64,
    pub passed: bool,
}

impl Check {
    pub fn within(suite: &'static str, name: impl Into<String>, achieved: f64, required: f64) -> Self {
        Self {
            suite,
            name: name.into(),
            achieved,
            required,
            passed: achieved <= required,
        }
    }

    pub fn exact(suite: &'static str, name: impl Into<String>, equal: bool) -> Self {
        Self {
            suite,
            name: name.into(),
            achieved: if equal { 0.0 } else { 1.0 },
            required: 0.0,
            passed: equal,
        }
    }

    pub fn failed(suite: &'static str, name: impl Into<String>, err: &Error) -> Self {
        Self {
            suite,
            name: format!("{}: {err}", name.into()),
            achieved: f64::INFINITY,
            required: 0.0,
            passed: false,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: achieved {:.3e}, required {:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.achieved,
            self.required
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: Suite,
    pub mode: Mode,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

/// Runs a suite; `mode` selects exact rational or double-precision comparisons
/// where both are meaningful.
pub fn run_suite(suite: Suite, mode: Mode) -> Report {
    let mut checks = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut push = |name: &'static str, r: Result<Vec<Check>>| match r {
        Ok(c) => checks.extend(c),
        Err(e) => checks.push(Check::failed(name, name, &e)),
    };
    if wants(Suite::Formulas) {
        push("formulas", tabulated_limits(mode));
        push("formulas", tabulated_finite(mode));
        push("formulas", beta2_collapse(mode));
        push("formulas", beta4_forms());
        push("formulas", integer_routes(mode));
        push("formulas", rayleigh_values(mode));
    }
    if wants(Suite::Quadrature) {
        push("quadrature", quadrature_closure());
        push("quadrature", finite_reflection());
        push("quadrature", edge_convergence());
    }
    if wants(Suite::Duality) {
        push("duality", duality_grid(mode));
    }
    if wants(Suite::Lowtemp) {
        push("lowtemp", lowtemp_partition());
        push("lowtemp", lowtemp_zeros());
        push("lowtemp", zeta_methods());
    }
    if wants(Suite::MonteCarlo) {
        push("montecarlo", monte_carlo());
    }
    Report { suite, mode, checks }
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }
}

fn crel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// β ∈ {1/2, 1, 2, 4, 10} and α ∈ {9/2, 7, 103/10}.
fn table_grid() -> Vec<(BigRational, BigRational)> {
    let betas = [q(1, 2), q(1, 1), q(2, 1), q(4, 1), q(10, 1)];
    let alphas = [q(9, 2), q(7, 1), q(103, 10)];
    betas
        .iter()
        .flat_map(|b| alphas.iter().map(move |a| (b.clone(), a.clone())))
        .collect()
}

/// Compares a rational computation with a reference, exactly or in floats.
fn compare<G, R>(suite: &'static str, name: String, mode: Mode, tol: f64, got: G, reference: R) -> Result<Check>
where
    G: Fn(Mode) -> Result<Scalar>,
    R: Fn(Mode) -> Result<Scalar>,
{
    let (a, b) = (got(mode)?, reference(mode)?);
    Ok(match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Check::exact(suite, name, x == y),
        (x, y) => Check::within(suite, name, rel(x.to_f64()?, y.to_f64()?), tol),
    })
}

fn lift(x: &BigRational, mode: Mode) -> Scalar {
    match mode {
        Mode::Rational => Scalar::Rational(x.clone()),
        _ => Scalar::Real(to_f64(x)),
    }
}

macro_rules! both {
    ($mode:expr, |$t:ident| $body:expr) => {
        match $mode {
            Mode::Rational => {
                type $t = BigRational;
                let conv = |x: &BigRational| x.clone();
                $body(conv).map(Scalar::Rational)
            }
            _ => {
                type $t = f64;
                let conv = |x: &BigRational| to_f64(x);
                $body(conv).map(Scalar::Real)
            }
        }
    };
}

/// Limiting moments against the displayed k ≤ 4 table.
pub fn tabulated_limits(mode: Mode) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (b, a) in table_grid() {
        for k in 1..=4 {
            let name = format!("limit k={k} β={b} α={a}");
            out.push(compare(
                "formulas",
                name,
                mode,
                1e-12,
                |m| both!(m, |T| |c: fn(&BigRational) -> T| moment_limit::<T>(k, &c(&b), &c(&a))),
                |m| {
                    both!(m, |T| |c: fn(&BigRational) -> T| tabulated_limit::<T>(k, &c(&b), &c(&a))
                        .ok_or_else(|| Error::Domain("no table entry".into())))
                },
            )?);
        }
    }
    Ok(out)
}

/// Finite-N moments against the displayed formulas, N ∈ {2, 3, 5, 8}.
pub fn tabulated_finite(mode: Mode) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (b, a) in table_grid() {
        for n in [2u64, 3, 5, 8] {
            for k in 1..=4 {
                let name = format!("finite k={k} N={n} β={b} α={a}");
                out.push(compare(
                    "formulas",
                    name,
                    mode,
                    1e-12,
                    |m| both!(m, |T| |c: fn(&BigRational) -> T| moment_finite_n::<T>(k, &c(&b), &c(&a), n)),
                    |m| {
                        both!(m, |T| |c: fn(&BigRational) -> T| tabulated_finite_n::<T>(k, &c(&b), &c(&a), n)
                            .ok_or_else(|| Error::Domain("no table entry".into())))
                    },
                )?);
            }
        }
    }
    Ok(out)
}

/// moment_limit(k, 2, α) against the β = 2 Mellin transform at s = k.
pub fn beta2_collapse(mode: Mode) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for a in [q(7, 1), q(103, 10)] {
        for k in 1..=6u32 {
            let two = q(2, 1);
            out.push(compare(
                "formulas",
                format!("β=2 collapse k={k} α={a}"),
                mode,
                1e-11,
                |m| both!(m, |T| |c: fn(&BigRational) -> T| moment_limit::<T>(k, &c(&two), &c(&a))),
                |m| both!(m, |T| |c: fn(&BigRational) -> T| mellin_beta2_at_integer::<T>(k, &c(&a))),
            )?);
            let exact = moment_limit::<BigRational>(k, &two, &a)?;
            let float = mellin_limit_beta2(Complex64::new(k as f64, 0.0), to_f64(&a))?;
            out.push(Check::within(
                "formulas",
                format!("β=2 collapse via hypergeometric form k={k} α={a}"),
                crel(float, Complex64::new(to_f64(&exact), 0.0)),
                1e-11,
            ));
        }
    }
    Ok(out)
}

/// The 3F2 and 4F3 forms of the β = 4 transform on 20 strip points.
pub fn beta4_forms() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut slowest: f64 = 0.0;
    for alpha in [2.5, 5.0] {
        for i in 0..10 {
            let re = 0.6 + (alpha + 0.3) * i as f64 / 10.0;
            let im = if i % 2 == 0 { 0.0 } else { 0.35 * i as f64 };
            let s = Complex64::new(re, im);
            let t0 = Instant::now();
            let a = mellin_limit_beta4(s, alpha, Beta4Form::ThreeFTwo)?;
            slowest = slowest.max(t0.elapsed().as_secs_f64());
            let t1 = Instant::now();
            let b = mellin_limit_beta4(s, alpha, Beta4Form::FourFThree)?;
            slowest = slowest.max(t1.elapsed().as_secs_f64());
            out.push(Check::within("formulas", format!("β=4 forms s={s} α={alpha}"), crel(a, b), 1e-10));
        }
    }
    out.push(Check::within("formulas", "β=4 slowest evaluation (s)", slowest, 0.05));
    Ok(out)
}

/// Partition sum, Mellin form at s = k, closed binomial sums and recurrence
/// solutions for β ∈ {1, 4}.
pub fn integer_routes(mode: Mode) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for a in [q(6, 1), q(19, 2)] {
        for class in [BetaClass::One, BetaClass::Four] {
            let b = q(class.beta(), 1);
            for k in 1..=5u32 {
                let tag = format!("β={} k={k} α={a}", class.beta());
                let partition = |m: Mode| both!(m, |T| |c: fn(&BigRational) -> T| moment_limit::<T>(k, &c(&b), &c(&a)));
                out.push(compare(
                    "formulas",
                    format!("partition = closed sums {tag}"),
                    mode,
                    1e-10,
                    partition,
                    |m| both!(m, |T| |c: fn(&BigRational) -> T| integer_moment::<T>(class, k, &c(&a))),
                )?);
                out.push(compare(
                    "formulas",
                    format!("partition = Mellin at s=k {tag}"),
                    mode,
                    1e-10,
                    partition,
                    |m| match class {
                        BetaClass::One => both!(m, |T| |c: fn(&BigRational) -> T| mellin_beta1_at_integer::<T>(k, &c(&a))),
                        BetaClass::Four => both!(m, |T| |c: fn(&BigRational) -> T| mellin_beta4_at_integer::<T>(k, &c(&a))),
                    },
                )?);
                let exact = to_f64(&moment_limit::<BigRational>(k, &b, &a)?);
                let s = Complex64::new(k as f64, 0.0);
                let float = match class {
                    BetaClass::One => mellin_limit_beta1(s, to_f64(&a))?,
                    BetaClass::Four => mellin_limit_beta4(s, to_f64(&a), Beta4Form::FourFThree)?,
                };
                out.push(Check::within(
                    "formulas",
                    format!("partition = hypergeometric transform {tag}"),
                    crel(float, Complex64::new(exact, 0.0)),
                    1e-10,
                ));
                if class == BetaClass::One || to_f64(&a) > 2.0 * k as f64 {
                    out.push(compare(
                        "formulas",
                        format!("partition = recurrence {tag}"),
                        mode,
                        1e-10,
                        partition,
                        |m| both!(m, |T| |c: fn(&BigRational) -> T| recurrence_moment::<T>(class, k, &c(&a))),
                    )?);
                }
            }
        }
    }
    Ok(out)
}

/// Rayleigh's table and ζ_{1/2}(2) = 1/6 from the recursion.
pub fn rayleigh_values(mode: Mode) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for nu in [q(0, 1), q(1, 2), q(1, 1), q(3, 1), q(-2, 5)] {
        for two_k in [2u32, 4, 6, 8] {
            let arg = lift(&nu, mode);
            let got = bessel_zeta(&arg, two_k, ZetaMethod::Recursion)?;
            let reference = both!(mode, |T| |c: fn(&BigRational) -> T| rayleigh_table::<T>(two_k, &c(&nu))
                .ok_or_else(|| Error::Domain("no table entry".into())))?;
            let name = format!("Rayleigh ζ_ν({two_k}) ν={nu}");
            out.push(match (got, reference) {
                (Scalar::Rational(x), Scalar::Rational(y)) => Check::exact("formulas", name, x == y),
                (x, y) => Check::within("formulas", name, rel(x.to_f64()?, y.to_f64()?), 1e-13),
            });
        }
    }
    let half = bessel_zeta(&Scalar::Rational(q(1, 2)), 2, ZetaMethod::Recursion)?;
    out.push(Check::exact("formulas", "ζ_{1/2}(2) = 1/6", half == Scalar::Rational(q(1, 6))));
    Ok(out)
}

/// 4^s ∫u^{-s}ρ_HE against the closed transforms on 12 real points per β and α.
pub fn quadrature_closure() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for class in [EdgeClass::Two, EdgeClass::Four, EdgeClass::One] {
        let tol = if class == EdgeClass::Two { 1e-6 } else { 1e-5 };
        for alpha in [1.5, 3.5] {
            let mut worst: f64 = 0.0;
            let mut certified: f64 = 0.0;
            for i in 0..12 {
                let s = Complex64::new(0.55 + (alpha + 0.35) * i as f64 / 11.0, 0.0);
                let q = mellin_quadrature(&DensitySpec::HardEdge { class, alpha }, s)?;
                let closed = match class {
                    EdgeClass::Two => mellin_limit_beta2(s, alpha)?,
                    EdgeClass::Four => mellin_limit_beta4(s, alpha, Beta4Form::ThreeFTwo)?,
                    EdgeClass::One => mellin_limit_beta1(s, alpha)?,
                };
                worst = worst.max((q.value * (s * 4f64.ln()).exp() - closed).norm());
                certified = certified.max(q.error);
            }
            let tag = format!("β={} α={alpha}", class.beta());
            out.push(Check::within("quadrature", format!("closure {tag} (12 points)"), worst, tol));
            out.push(Check::within("quadrature", format!("certified error bound {tag}"), certified, 1e-7));
        }
    }
    Ok(out)
}

/// Both sides of the finite-N reflection for β = 2.
pub fn finite_reflection() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [1u64, 3, 6] {
        for alpha in [1.5, 2.5] {
            for s in [Complex64::new(0.75, 0.0), Complex64::new(0.9, 0.0), Complex64::new(0.5, 0.4)] {
                let (l, r) = reflection_check_finite_beta2(n, alpha, s)?;
                out.push(Check::within(
                    "quadrature",
                    format!("reflection N={n} α={alpha} s={s}"),
                    (l - r).norm(),
                    1e-8,
                ));
            }
        }
    }
    Ok(out)
}

/// sup over u ∈ [0.1, 20] of |ρ_N(u/4N)/4N - ρ_HE(u)|.
pub fn edge_sup_gap(n: u64, alpha: f64) -> Result<f64> {
    let scale = 4.0 * n as f64;
    let mut gap: f64 = 0.0;
    for i in 0..=400 {
        let u = 0.1 + 19.9 * i as f64 / 400.0;
        let finite = density_finite_beta2(n, alpha, u / scale)? / scale;
        gap = gap.max((finite - hard_edge_density(EdgeClass::Two, alpha, u)?).abs());
    }
    Ok(gap)
}

/// Hard-edge density convergence along N ∈ {250, 1000, 4000}.
pub fn edge_convergence() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for alpha in [0.5, 1.5] {
        let gaps = [250, 1000, 4000].map(|n| edge_sup_gap(n, alpha));
        let gaps = [gaps[0].clone()?, gaps[1].clone()?, gaps[2].clone()?];
        out.push(Check::exact(
            "quadrature",
            format!("sup-gap decreasing α={alpha}: {:.2e} > {:.2e} > {:.2e}", gaps[0], gaps[1], gaps[2]),
            gaps[0] > gaps[1] && gaps[1] > gaps[2],
        ));
        out.push(Check::within("quadrature", format!("sup-gap at N=4000 α={alpha}"), gaps[2], 5e-3));
    }
    Ok(out)
}

/// Both components of the β ↔ 4/β map.
pub fn duality_grid(mode: Mode) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let betas = [q(1, 2), q(1, 1), q(2, 1), q(3, 1), q(4, 1), q(8, 1)];
    let alphas = [q(13, 2), q(11, 1)];
    for b in &betas {
        for a in &alphas {
            for k in 1..=5u32 {
                let name = format!("duality k={k} β={b} α={a}");
                out.push(match mode {
                    Mode::Rational => {
                        let (x, y) = duality_map::<BigRational>(k, b, a)?;
                        Check::exact("duality", name, x == y)
                    }
                    _ => {
                        let (x, y) = duality_map::<f64>(k, &to_f64(b), &to_f64(a))?;
                        Check::within("duality", name, rel(x, y), 1e-12)
                    }
                });
            }
        }
    }
    Ok(out)
}

/// β^k M(-k, β(ν+1)/2) at β = 10^8 against 8^k ζ_ν(2k).
pub fn lowtemp_partition() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let beta = q(100_000_000, 1);
    for nu in [q(0, 1), q(1, 2), q(1, 1), q(3, 1)] {
        let alpha = beta.clone() * (nu.clone() + q(1, 1)) / q(2, 1);
        for k in 1..=4u32 {
            let scaled = <BigRational as Field>::powi(&beta, k) * moment_limit::<BigRational>(k, &beta, &alpha)?;
            let zeta = bessel_zeta(&Scalar::Rational(nu.clone()), 2 * k, ZetaMethod::Recursion)?;
            let target = f64::powi(8.0, k as i32) * zeta.to_f64()?;
            out.push(Check::within(
                "lowtemp",
                format!("β^k M at β=1e8 k={k} ν={nu}"),
                rel(to_f64(&scaled), target),
                1e-6,
            ));
        }
    }
    Ok(out)
}

/// Σ_n (4N l_n)^{-k} over Laguerre zeros at N = 400 against ζ_ν(2k).
pub fn lowtemp_zeros() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let n = 400;
    for nu in [0.0, 1.0, 3.0] {
        let zeros = laguerre_zeros(n, nu)?;
        for k in [2u32, 3] {
            let sum: f64 = zeros.iter().map(|l| f64::powi(4.0 * n as f64 * l, -(k as i32))).sum();
            let zeta = bessel_zeta(&Scalar::Real(nu), 2 * k, ZetaMethod::Recursion)?.to_f64()?;
            out.push(Check::within(
                "lowtemp",
                format!("Laguerre zero sum N={n} k={k} ν={nu}"),
                rel(sum, zeta),
                0.02,
            ));
        }
    }
    Ok(out)
}

/// Rayleigh recursion against direct zero sums.
pub fn zeta_methods() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for nu in [-0.4, 0.0, 0.5, 1.0, 3.0] {
        for two_k in (2..=10).step_by(2) {
            let a = bessel_zeta(&Scalar::Real(nu), two_k, ZetaMethod::Recursion)?.to_f64()?;
            let b = bessel_zeta(&Scalar::Real(nu), two_k, ZetaMethod::ZeroSum)?.to_f64()?;
            out.push(Check::within("lowtemp", format!("ζ_ν({two_k}) methods ν={nu}"), rel(b, a), 1e-8));
        }
    }
    Ok(out)
}

/// The pinned Monte Carlo configurations: (N, β, α, k, seed).
pub const MC_CONFIGS: [(usize, f64, f64, u32, u64); 12] = [
    (2, 0.8, 4.0, 1, 101),
    (5, 0.8, 6.0, 3, 102),
    (3, 1.0, 4.0, 2, 103),
    (8, 1.0, 6.0, 3, 104),
    (4, 2.0, 4.0, 1, 105),
    (6, 2.0, 6.0, 2, 106),
    (8, 2.0, 4.0, 3, 107),
    (3, 3.7, 6.0, 1, 108),
    (7, 3.7, 4.0, 2, 109),
    (2, 4.0, 6.0, 3, 110),
    (5, 4.0, 4.0, 2, 111),
    (8, 4.0, 6.0, 1, 112),
];

pub const MC_SAMPLES: u64 = 20_000;

/// z-scores of the pinned configurations against the exact finite-N moments,
/// plus a bit-identical rerun of the first.
pub fn monte_carlo() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(n, beta, alpha, k, seed) in &MC_CONFIGS {
        let config = EnsembleConfig::new(n, beta, alpha, MC_SAMPLES, seed)?;
        let estimate = mc_inverse_moment(&config, k)?;
        let exact = moment_finite_n::<f64>(k, &beta, &alpha, n as u64)?;
        out.push(Check::within(
            "montecarlo",
            format!("|z| N={n} β={beta} α={alpha} k={k} seed={seed}"),
            estimate.z_score(exact).abs(),
            4.0,
        ));
    }
    let (n, beta, alpha, k, seed) = MC_CONFIGS[0];
    let config = EnsembleConfig::new(n, beta, alpha, MC_SAMPLES, seed)?;
    let first = mc_inverse_moment(&config, k)?;
    let second = mc_inverse_moment(&config, k)?;
    out.push(Check::exact("montecarlo", "rerun is bit-identical", first == second));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Formulas, Suite::Quadrature, Suite::Duality, Suite::Lowtemp, Suite::MonteCarlo, Suite::All] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn duality_suite_passes_in_both_modes() {
        assert!(run_suite(Suite::Duality, Mode::Rational).passed());
        assert!(run_suite(Suite::Duality, Mode::Real).passed());
    }

    #[test]
    fn failures_are_reported() {
        let c = Check::within("x", "y", 2.0, 1.0);
        assert!(!c.passed);
        assert!(c.to_string().starts_with("FAIL"));
        let report = Report { suite: Suite::All, mode: Mode::Real, checks: vec![c] };
        assert_eq!(report.failures(), 1);
    }
}
