//! Monte Carlo on the bidiagonal χ model of the β-Laguerre ensemble, and the
//! deterministic β → ∞ spectrum given by Laguerre zeros.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::tridiagonal_eigenvalues;

/// Relative floor below which eigenvalues are treated as rounding noise.
pub const CLAMP_RELATIVE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleConfig {
    pub n_size: usize,
    pub beta: f64,
    pub alpha: f64,
    pub samples: u64,
    pub seed: u64,
}

impl EnsembleConfig {
    pub fn new(n_size: usize, beta: f64, alpha: f64, samples: u64, seed: u64) -> Result<Self> {
        let config = Self { n_size, beta, alpha, samples, seed };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_size == 0 {
            return Err(Error::Domain("ensemble size N must be at least 1".into()));
        }
        if !(self.beta > 0.0) || !self.beta.is_finite() {
            return Err(Error::Domain(format!("β must be positive, got {}", self.beta)));
        }
        if !(self.alpha > -1.0) || !self.alpha.is_finite() {
            return Err(Error::Domain(format!("α must exceed -1, got {}", self.alpha)));
        }
        if self.samples == 0 {
            return Err(Error::Domain("at least one sample is required".into()));
        }
        Ok(())
    }

    /// ã = α + (β/2)(N - 1) + 1.
    pub fn tilde_a(&self) -> f64 {
        self.alpha + 0.5 * self.beta * (self.n_size as f64 - 1.0) + 1.0
    }

    /// The generator for sample `index`: one ChaCha stream per sample.
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    pub k: u32,
    /// Eigenvalues raised to the clamp floor across all samples.
    pub clamped: u64,
}

impl MomentEstimate {
    pub fn z_score(&self, exact: f64) -> f64 {
        (self.mean - exact) / self.stderr
    }
}

/// Whether the sampler fans out over a thread pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

/// One χ_c draw, as √(2G) with G ~ Gamma(c/2, 1).
pub fn sample_chi<R: Rng + ?Sized>(c: f64, rng: &mut R) -> Result<f64> {
    let gamma = Gamma::new(0.5 * c, 1.0)
        .map_err(|e| Error::Domain(format!("χ parameter must be positive, got {c}: {e}")))?;
    Ok((2.0 * gamma.sample(rng)).sqrt())
}

/// Diagonal and off-diagonal of L = B Bᵀ for lower bidiagonal B with
/// diagonal `d` and subdiagonal `e` (`e[i]` sits below `d[i]`).
fn gram_tridiagonal(d: &[f64], e: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let diag = (0..d.len())
        .map(|i| d[i] * d[i] + if i > 0 { e[i - 1] * e[i - 1] } else { 0.0 })
        .collect();
    let off = (0..e.len()).map(|i| d[i] * e[i]).collect();
    (diag, off)
}

/// Eigenvalues of L_β = B_β B_βᵀ, ascending, and the number clamped to the floor.
pub fn sample_spectrum_counted<R: Rng + ?Sized>(config: &EnsembleConfig, rng: &mut R) -> Result<(Vec<f64>, u64)> {
    config.validate()?;
    let n = config.n_size;
    let beta = config.beta;
    let two_a = 2.0 * config.tilde_a();
    let half = std::f64::consts::FRAC_1_SQRT_2;
    let mut d = Vec::with_capacity(n);
    let mut e = Vec::with_capacity(n.saturating_sub(1));
    for j in 0..n {
        d.push(half * sample_chi(two_a - beta * j as f64, rng)?);
        if j + 1 < n {
            e.push(half * sample_chi(beta * (n - 1 - j) as f64, rng)?);
        }
    }
    let (diag, off) = gram_tridiagonal(&d, &e);
    let mut spectrum = tridiagonal_eigenvalues(&diag, &off)?;
    let top = spectrum.last().copied().unwrap_or(0.0);
    let floor = CLAMP_RELATIVE * top;
    let mut clamped = 0;
    for v in &mut spectrum {
        if *v < floor {
            if *v < -floor {
                return Err(Error::NonConvergence(format!(
                    "eigenvalue {v:e} is negative beyond rounding (largest {top:e})"
                )));
            }
            *v = floor;
            clamped += 1;
        }
    }
    Ok((spectrum, clamped))
}

/// Eigenvalues of L_β, ascending.
pub fn sample_spectrum<R: Rng + ?Sized>(config: &EnsembleConfig, rng: &mut R) -> Result<Vec<f64>> {
    sample_spectrum_counted(config, rng).map(|(s, _)| s)
}

fn inverse_power_sum(config: &EnsembleConfig, k: u32, index: u64) -> Result<(f64, u64)> {
    let mut rng = config.stream(index);
    let (spectrum, clamped) = sample_spectrum_counted(config, &mut rng)?;
    let total = spectrum.iter().map(|&x| f64::powi(x, -(k as i32))).sum();
    Ok((total, clamped))
}

/// Sample mean and standard error of Σ_j λ_j^{-k}.
pub fn mc_inverse_moment(config: &EnsembleConfig, k: u32) -> Result<MomentEstimate> {
    mc_inverse_moment_with(config, k, Execution::Parallel)
}

/// As [`mc_inverse_moment`] with explicit execution; results are
/// bit-identical either way because every sample owns its stream and the
/// reduction runs in index order.
pub fn mc_inverse_moment_with(config: &EnsembleConfig, k: u32, execution: Execution) -> Result<MomentEstimate> {
    config.validate()?;
    if k == 0 {
        return Err(Error::Domain("moment order k must be at least 1".into()));
    }
    if !(config.alpha > k as f64 - 1.0) {
        return Err(Error::Domain(format!(
            "E Σλ^{{-{k}}} is infinite unless α > k - 1 = {}, got α = {}",
            k - 1,
            config.alpha
        )));
    }
    let draws = sample_values(config, k, execution)?;
    let samples = config.samples;
    let mut mean = 0.0;
    let mut m2 = 0.0;
    let mut clamped = 0;
    for (i, (x, c)) in draws.iter().enumerate() {
        let delta = x - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (x - mean);
        clamped += c;
    }
    let variance = if samples > 1 { m2 / (samples - 1) as f64 } else { 0.0 };
    Ok(MomentEstimate {
        mean,
        stderr: (variance / samples as f64).sqrt(),
        samples,
        seed: config.seed,
        k,
        clamped,
    })
}

fn sample_values(config: &EnsembleConfig, k: u32, execution: Execution) -> Result<Vec<(f64, u64)>> {
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..config.samples)
            .into_par_iter()
            .map(|i| inverse_power_sum(config, k, i))
            .collect(),
        _ => (0..config.samples).map(|i| inverse_power_sum(config, k, i)).collect(),
    }
}

/// Zeros of L_N^{(ν)}, ascending, as the spectrum of the deterministic B Bᵀ.
pub fn laguerre_zeros(n: usize, nu: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Domain("degree N must be at least 1".into()));
    }
    if !(nu > -1.0) {
        return Err(Error::Domain(format!("ν must exceed -1, got {nu}")));
    }
    let nf = n as f64;
    let d: Vec<f64> = (0..n).map(|j| (nf + nu - j as f64).sqrt()).collect();
    let e: Vec<f64> = (1..n).map(|j| (nf - j as f64).sqrt()).collect();
    let (diag, off) = gram_tridiagonal(&d, &e);
    tridiagonal_eigenvalues(&diag, &off)
}

/// 2^k Σ_n l_n^{-k}, the β → ∞ limit of β^k E Σ λ^{-k} at α = β(ν+1)/2.
pub fn lowtemp_moment_sum(n: usize, nu: f64, k: u32) -> Result<f64> {
    let zeros = laguerre_zeros(n, nu)?;
    Ok(f64::powi(2.0, k as i32) * zeros.iter().map(|&l| f64::powi(l, -(k as i32))).sum::<f64>())
}
