//! One test per acceptance criterion; each prints its checks and asserts
//! both the tolerances and the runtime budget.

use std::time::{Duration, Instant};

use hardedge::scalar::Mode;
use hardedge::verify::{self, Check};

fn assert_all(label: &str, checks: Vec<Check>, max_required: f64, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    for c in &failed {
        eprintln!("{c}");
    }
    assert!(!checks.is_empty(), "{label}: no checks ran");
    assert!(failed.is_empty(), "{label}: {} of {} checks failed", failed.len(), checks.len());
    let loosest = checks.iter().map(|c| c.required).fold(0.0, f64::max);
    assert!(loosest <= max_required, "{label}: a check used tolerance {loosest:e} > {max_required:e}");
    assert!(elapsed <= budget, "{label}: took {elapsed:?}, budget {budget:?}");
    eprintln!("{label}: {} checks passed in {elapsed:.2?}", checks.len());
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_01_tabulated_limits() {
    let t = Instant::now();
    let checks = verify::tabulated_limits(Mode::Rational).unwrap();
    assert_eq!(checks.len(), 4 * 15);
    assert_all("tabulated limits", checks, 0.0, t, secs(1));
}

#[test]
fn criterion_02_tabulated_finite_n() {
    let t = Instant::now();
    let checks = verify::tabulated_finite(Mode::Rational).unwrap();
    assert_eq!(checks.len(), 4 * 4 * 15);
    assert_all("tabulated finite-N", checks, 0.0, t, secs(1));
}

#[test]
fn criterion_03_beta2_collapse() {
    let t = Instant::now();
    assert_all("β=2 collapse", verify::beta2_collapse(Mode::Rational).unwrap(), 1e-11, t, secs(10));
}

#[test]
fn criterion_04_beta4_dual_representation() {
    let t = Instant::now();
    let checks = verify::beta4_forms().unwrap();
    assert_eq!(checks.len(), 21);
    // the timing check carries the 50 ms per-evaluation bound
    assert_all("β=4 forms", checks, 0.05, t, secs(10));
}

#[test]
fn criterion_05_four_way_integer_agreement() {
    let t = Instant::now();
    let mut checks = verify::integer_routes(Mode::Rational).unwrap();
    checks.extend(verify::integer_routes(Mode::Real).unwrap());
    assert_all("integer routes", checks, 1e-10, t, secs(30));
}

#[test]
fn criterion_06_quadrature_closure() {
    let t = Instant::now();
    assert_all("quadrature closure", verify::quadrature_closure().unwrap(), 1e-5, t, secs(120));
}

#[test]
fn criterion_07_duality() {
    let t = Instant::now();
    let mut checks = verify::duality_grid(Mode::Rational).unwrap();
    let exact = checks.len();
    checks.extend(verify::duality_grid(Mode::Real).unwrap());
    assert_eq!(checks.len(), 2 * exact);
    assert_all("duality", checks, 1e-12, t, secs(1));
}

#[test]
fn criterion_08_low_temperature_two_routes() {
    let t = Instant::now();
    let mut checks = verify::lowtemp_partition().unwrap();
    checks.extend(verify::lowtemp_zeros().unwrap());
    assert_all("low temperature", checks, 0.02, t, secs(30));
}

#[test]
fn criterion_09_bessel_zeta_dual_method() {
    let t = Instant::now();
    let mut checks = verify::zeta_methods().unwrap();
    checks.extend(verify::rayleigh_values(Mode::Rational).unwrap());
    assert_all("Bessel zeta", checks, 1e-8, t, secs(60));
}

#[test]
fn criterion_10_monte_carlo_calibration() {
    let t = Instant::now();
    let checks = verify::monte_carlo().unwrap();
    assert_eq!(checks.len(), 13);
    assert_all("Monte Carlo", checks, 4.0, t, secs(120));
}

#[test]
fn criterion_11_finite_reflection() {
    let t = Instant::now();
    let checks = verify::finite_reflection().unwrap();
    assert_eq!(checks.len(), 18);
    assert_all("reflection", checks, 1e-8, t, secs(10));
}

#[test]
fn criterion_12_hard_edge_convergence() {
    let t = Instant::now();
    assert_all("hard-edge convergence", verify::edge_convergence().unwrap(), 5e-3, t, secs(60));
}
