use hardedge::densities::marchenko_pastur_density;
use hardedge::ensemble::*;
use hardedge::moments::moment_finite_n;
use hardedge::quad::gauss_legendre_panels;
use hardedge::specfun::{bessel_zeros, bessel_zeta, ZetaMethod};
use hardedge::Scalar;

fn exact(n: usize, beta: f64, alpha: f64, k: u32) -> f64 {
    moment_finite_n::<f64>(k, &beta, &alpha, n as u64).unwrap()
}

fn estimate(n: usize, beta: f64, alpha: f64, k: u32, samples: u64, seed: u64) -> MomentEstimate {
    let config = EnsembleConfig::new(n, beta, alpha, samples, seed).unwrap();
    mc_inverse_moment(&config, k).unwrap()
}

#[test]
fn chi_second_moment() {
    let config = EnsembleConfig::new(1, 1.0, 0.0, 1, 17).unwrap();
    let mut rng = config.stream(0);
    let n = 100_000;
    let squares: Vec<f64> = (0..n).map(|_| sample_chi(5.0, &mut rng).unwrap().powi(2)).collect();
    let mean = squares.iter().sum::<f64>() / n as f64;
    let var = squares.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    assert!((mean - 5.0).abs() <= 5.0 * (var / n as f64).sqrt(), "{mean}");
}

#[test]
fn chi_one_is_half_normal() {
    let config = EnsembleConfig::new(1, 1.0, 0.0, 1, 5).unwrap();
    let mut rng = config.stream(0);
    let n = 10_000;
    let mut draws: Vec<f64> = (0..n).map(|_| sample_chi(1.0, &mut rng).unwrap()).collect();
    draws.sort_by(f64::total_cmp);
    let ks = draws
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let cdf = statrs::function::erf::erf(x / 2f64.sqrt());
            (cdf - i as f64 / n as f64).abs().max((cdf - (i + 1) as f64 / n as f64).abs())
        })
        .fold(0.0, f64::max);
    assert!(ks < 1.628 / (n as f64).sqrt(), "KS statistic {ks}");
}

#[test]
fn chi_draws_are_seeded() {
    let config = EnsembleConfig::new(1, 1.0, 0.0, 1, 42).unwrap();
    let a: Vec<f64> = { let mut r = config.stream(0); (0..20).map(|_| sample_chi(2.5, &mut r).unwrap()).collect() };
    let b: Vec<f64> = { let mut r = config.stream(0); (0..20).map(|_| sample_chi(2.5, &mut r).unwrap()).collect() };
    assert_eq!(a, b);
}

#[test]
fn single_cell_mean() {
    let config = EnsembleConfig::new(1, 2.0, 1.5, 100_000, 3).unwrap();
    let values: Vec<f64> = (0..config.samples)
        .map(|i| sample_spectrum(&config, &mut config.stream(i)).unwrap()[0])
        .collect();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    assert!((mean - 2.5).abs() <= 5.0 * (var / n).sqrt(), "{mean}");
}

#[test]
fn spectra_are_positive_and_sorted() {
    let config = EnsembleConfig::new(8, 2.5, 1.2, 1000, 11).unwrap();
    for i in 0..config.samples {
        let s = sample_spectrum(&config, &mut config.stream(i)).unwrap();
        assert_eq!(s.len(), 8);
        assert!(s[0] > 0.0);
        assert!(s.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn tabulated_targets() {
    let e = estimate(5, 2.0, 3.0, 1, 20_000, 7);
    assert!(e.z_score(5.0 / 3.0).abs() <= 4.0, "{e:?}");
    let e = estimate(3, 1.0, 4.0, 2, 20_000, 8);
    assert!((exact(3, 1.0, 4.0, 2) - 11.0 / 36.0).abs() < 1e-15);
    assert!(e.z_score(11.0 / 36.0).abs() <= 4.0, "{e:?}");
    let e = estimate(4, 4.0, 6.0, 3, 20_000, 9);
    assert!(e.z_score(exact(4, 4.0, 6.0, 3)).abs() <= 4.0, "{e:?}");
}

#[test]
fn calibration_grid() {
    let mut seed = 1000;
    for &beta in &[1.0, 2.0, 4.0, 3.7, 0.8] {
        for &(n, alpha, k) in &[(2usize, 4.0, 1u32), (5, 4.0, 2), (8, 6.0, 3)] {
            seed += 1;
            let e = estimate(n, beta, alpha, k, 20_000, seed);
            let z = e.z_score(exact(n, beta, alpha, k));
            assert!(z.abs() <= 4.0, "N={n} β={beta} α={alpha} k={k}: z={z}");
        }
    }
}

#[test]
fn first_moment_ignores_beta() {
    for (i, &beta) in [0.8, 2.0, 4.0].iter().enumerate() {
        let e = estimate(6, beta, 2.5, 1, 20_000, 300 + i as u64);
        assert!(e.z_score(6.0 / 2.5).abs() <= 4.0, "β={beta}: {e:?}");
    }
}

#[test]
fn hard_edge_order_of_growth() {
    let scaled: Vec<f64> = [8usize, 16, 32]
        .iter()
        .map(|&n| estimate(n, 2.0, 4.0, 2, 20_000, 50 + n as u64).mean / (n * n) as f64)
        .collect();
    // the limit of N^{-2} M is 1/60
    for v in &scaled {
        assert!(*v > 0.5 / 60.0 && *v < 2.0 / 60.0, "{scaled:?}");
    }
}

#[test]
fn execution_modes_are_bit_identical() {
    let config = EnsembleConfig::new(6, 3.7, 4.0, 2000, 77).unwrap();
    let seq = mc_inverse_moment_with(&config, 2, Execution::Sequential).unwrap();
    let par = mc_inverse_moment_with(&config, 2, Execution::Parallel).unwrap();
    assert_eq!(seq.mean.to_bits(), par.mean.to_bits());
    assert_eq!(seq.stderr.to_bits(), par.stderr.to_bits());
    #[cfg(feature = "parallel")]
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let other = pool.install(|| mc_inverse_moment(&config, 2).unwrap());
        assert_eq!(other, par);
    }
}

#[test]
fn laguerre_zero_bounds() {
    let (n, nu) = (50, 1.0);
    let zeros = laguerre_zeros(n, nu).unwrap();
    let j = bessel_zeros(nu, n).unwrap();
    for (l, jz) in zeros.iter().zip(&j) {
        assert!(*l > jz * jz / (4.0 * n as f64 + 2.0 * nu + 2.0));
    }
    let zeros = laguerre_zeros(400, 1.0).unwrap();
    let j = bessel_zeros(1.0, 3).unwrap();
    for i in 0..3 {
        let rel = (1600.0 * zeros[i] / (j[i] * j[i]) - 1.0).abs();
        assert!(rel <= 0.01, "n={} gap {rel}", i + 1);
    }
}

fn scaled_zero_sum(n: usize, nu: f64, k: u32) -> f64 {
    let four_n = 4.0 * n as f64;
    lowtemp_moment_sum(n, nu, k).unwrap() / f64::powi(2.0 * four_n, k as i32)
}

#[test]
fn zero_sums_approach_bessel_zeta() {
    for k in [2u32, 3] {
        let target = bessel_zeta(&Scalar::real(1.0), 2 * k, ZetaMethod::Recursion).unwrap().to_f64().unwrap();
        let far = scaled_zero_sum(400, 1.0, k);
        let near = scaled_zero_sum(100, 1.0, k);
        assert!((far / target - 1.0).abs() <= 0.02, "k={k}: {far} vs {target}");
        assert!((far - target).abs() < (near - target).abs());
    }
}

#[test]
fn bulk_follows_marchenko_pastur() {
    let n = 100;
    let config = EnsembleConfig::new(n, 2.0, 0.0, 1000, 2024).unwrap();
    let bins = 40;
    let width = 4.0 / bins as f64;
    let mut counts = vec![0u64; bins];
    let mut total = 0u64;
    for i in 0..config.samples {
        for v in sample_spectrum(&config, &mut config.stream(i)).unwrap() {
            // λ/N with β = 2, m = N
            let x = v / n as f64;
            let b = ((x / width) as usize).min(bins - 1);
            counts[b] += 1;
            total += 1;
        }
    }
    let tv: f64 = (0..bins)
        .map(|b| {
            let (lo, hi) = (b as f64 * width, (b + 1) as f64 * width);
            let mass = gauss_legendre_panels(&|x: f64| marchenko_pastur_density(x, 1.0).unwrap_or(0.0), lo.max(1e-12), hi.min(4.0 - 1e-12), 50);
            (counts[b] as f64 / total as f64 - mass).abs()
        })
        .sum::<f64>()
        * 0.5;
    assert!(tv <= 0.05, "total variation {tv}");
}
