//! Generalized hypergeometric series pFq.
//!
//! Terminating series are summed exactly in the caller's field. Convergent
//! non-terminating series at z = 1 are summed directly up to a cutoff and
//! completed with the large-n expansion of the terms, summed against
//! Hurwitz zeta values.

use num_complex::Complex64;
use num_rational::BigRational;

use super::gamma::bernoulli_poly;
use super::zeta::hurwitz_zeta;
use crate::error::{Error, Result};
use crate::scalar::{common_mode, Field, Mode, Scalar};

/// Terms smaller than this fraction of the partial sum count towards the stop.
pub const STOP_EPS: f64 = 1e-16;
pub const MAX_TERMS: usize = 1_000_000;
/// Required Re(Σb - Σa) for a non-terminating series at z = 1.
pub const UNIT_MARGIN: f64 = 0.05;

const TAIL_ORDER: usize = 18;

#[derive(Debug, Clone, PartialEq)]
pub struct HypSeriesSpec {
    pub numer: Vec<Scalar>,
    pub denom: Vec<Scalar>,
    pub z: Scalar,
}

impl HypSeriesSpec {
    pub fn new(numer: Vec<Scalar>, denom: Vec<Scalar>, z: Scalar) -> Self {
        Self { numer, denom, z }
    }

    pub fn real(numer: &[f64], denom: &[f64], z: f64) -> Self {
        Self::new(
            numer.iter().copied().map(Scalar::Real).collect(),
            denom.iter().copied().map(Scalar::Real).collect(),
            Scalar::Real(z),
        )
    }

    pub fn complex(numer: &[Complex64], denom: &[Complex64], z: Complex64) -> Self {
        Self::new(
            numer.iter().copied().map(Scalar::Complex).collect(),
            denom.iter().copied().map(Scalar::Complex).collect(),
            Scalar::Complex(z),
        )
    }

    /// Number of the last nonzero term when some numerator parameter is a
    /// nonpositive integer.
    pub fn termination(&self) -> Option<u64> {
        self.numer
            .iter()
            .filter_map(|a| a.as_integer())
            .filter(|n| *n <= 0)
            .map(|n| (-n) as u64)
            .min()
    }
}

fn validate_denominators(spec: &HypSeriesSpec) -> Result<()> {
    let last = spec.termination();
    for b in &spec.denom {
        if let Some(n) = b.as_integer() {
            if n <= 0 {
                let zero_at = (-n) as u64;
                // (b)_m vanishes once m > -b; harmless only if the series stops first
                if last.is_none_or(|m| m > zero_at) {
                    return Err(Error::Pole(format!(
                        "denominator parameter {n} is a nonpositive integer"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Sum of a terminating series whose final term has index `last`.
pub fn terminating_series<F: Field>(a: &[F], b: &[F], z: &F, last: u64) -> Result<F> {
    let mut term = F::one();
    let mut sum = F::one();
    for n in 0..last {
        let nn = F::from_i64(n as i64);
        let mut num = z.clone();
        for ai in a {
            num = num * (ai.clone() + nn.clone());
        }
        let mut den = F::from_i64(n as i64 + 1);
        for bj in b {
            den = den * (bj.clone() + nn.clone());
        }
        term = (term * num).checked_div(den, || {
            format!("denominator parameter reaches zero at term {}", n + 1)
        })?;
        sum = sum + term.clone();
    }
    Ok(sum)
}

fn complex_integer(z: &Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9.0e15).then_some(z.re as i64)
}

/// Evaluates pFq for any parameters in a common mode.
pub fn hyp_pfq(spec: &HypSeriesSpec) -> Result<Scalar> {
    validate_denominators(spec)?;
    let all: Vec<&Scalar> = spec
        .numer
        .iter()
        .chain(spec.denom.iter())
        .chain(std::iter::once(&spec.z))
        .collect();
    let mode = common_mode(&all)?;
    let last = spec.termination();
    if mode == Mode::Rational {
        let Some(last) = last else {
            return Err(Error::ModeMismatch(
                "a non-terminating series has no exact rational value".into(),
            ));
        };
        let a: Vec<BigRational> = spec.numer.iter().map(|v| v.as_rational().cloned()).collect::<Result<_>>()?;
        let b: Vec<BigRational> = spec.denom.iter().map(|v| v.as_rational().cloned()).collect::<Result<_>>()?;
        let z = spec.z.as_rational()?.clone();
        return Ok(Scalar::Rational(terminating_series(&a, &b, &z, last)?));
    }
    let a: Vec<Complex64> = spec.numer.iter().map(Scalar::to_complex).collect();
    let b: Vec<Complex64> = spec.denom.iter().map(Scalar::to_complex).collect();
    let value = pfq_complex(&a, &b, spec.z.to_complex())?;
    Ok(if mode == Mode::Real {
        Scalar::Real(value.re)
    } else {
        Scalar::Complex(value)
    })
}

/// Complex-double core of [`hyp_pfq`].
pub fn pfq_complex(a: &[Complex64], b: &[Complex64], z: Complex64) -> Result<Complex64> {
    let last = a
        .iter()
        .filter_map(complex_integer)
        .filter(|n| *n <= 0)
        .map(|n| (-n) as u64)
        .min();
    for n in b.iter().filter_map(complex_integer).filter(|n| *n <= 0) {
        if last.is_none_or(|m| m > (-n) as u64) {
            return Err(Error::Pole(format!(
                "denominator parameter {n} is a nonpositive integer"
            )));
        }
    }
    if let Some(last) = last {
        return terminating_series(a, b, &z, last);
    }
    let (p, q) = (a.len(), b.len());
    if z.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if p > q + 1 {
        return Err(Error::Divergence(format!(
            "{p}F{q} has zero radius of convergence"
        )));
    }
    if p == q + 1 {
        let unit = (z - 1.0).norm() == 0.0;
        if unit {
            let margin: Complex64 = b.iter().sum::<Complex64>() - a.iter().sum::<Complex64>();
            if margin.re <= UNIT_MARGIN {
                return Err(Error::Divergence(format!(
                    "unit-argument series needs Re(sum b - sum a) > {UNIT_MARGIN}, got {:.4}",
                    margin.re
                )));
            }
            return unit_argument_sum(a, b, margin);
        }
        if z.norm() >= 1.0 {
            return Err(Error::Divergence(format!(
                "|z| = {} is outside the disc of convergence",
                z.norm()
            )));
        }
    }
    direct_sum(a, b, z)
}

fn direct_sum(a: &[Complex64], b: &[Complex64], z: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    // parameters larger than n can make early terms grow; do not stop there
    let warmup = a
        .iter()
        .chain(b.iter())
        .map(|v| v.norm())
        .fold(z.norm(), f64::max) as usize;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for ai in a {
            ratio *= ai + nf;
        }
        for bj in b {
            ratio /= bj + nf;
        }
        term *= ratio;
        sum += term;
        if term.norm() < STOP_EPS * sum.norm() || term.norm() == 0.0 {
            quiet += 1;
            if quiet >= 3 && n > warmup {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "series not converged after {MAX_TERMS} terms"
    )))
}

/// z = 1, p = q + 1, non-terminating, Re(margin) > 0.
fn unit_argument_sum(a: &[Complex64], b: &[Complex64], margin: Complex64) -> Result<Complex64> {
    let scale = a.iter().chain(b.iter()).map(|v| v.norm()).fold(1.0, f64::max);
    let cutoff = (40.0 * scale).max(400.0).ceil() as usize;
    let mut term = Complex64::new(1.0, 0.0);
    let mut head = Complex64::new(0.0, 0.0);
    for n in 0..cutoff {
        head += term;
        let nf = n as f64;
        let mut ratio = Complex64::new(1.0 / (nf + 1.0), 0.0);
        for ai in a {
            ratio *= ai + nf;
        }
        for bj in b {
            ratio /= bj + nf;
        }
        term *= ratio;
    }
    if term.norm() == 0.0 {
        return Ok(head);
    }
    // term is now t_N with N = cutoff. For large x,
    //   ln t_x = const - (margin + 1) ln x + Σ_m d_m x^{-m}
    // with d_m from the Bernoulli-polynomial expansion of ln Γ(x + c).
    let mut d = vec![Complex64::new(0.0, 0.0); TAIL_ORDER + 1];
    let one = Complex64::new(1.0, 0.0);
    for (m, dm) in d.iter_mut().enumerate().skip(1) {
        let mut acc = Complex64::new(0.0, 0.0);
        for ai in a {
            acc += bernoulli_poly(m + 1, *ai);
        }
        for bj in b.iter().chain(std::iter::once(&one)) {
            acc -= bernoulli_poly(m + 1, *bj);
        }
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        *dm = sign * acc / (m * (m + 1)) as f64;
    }
    // exp(Σ d_m y^m) = Σ e_m y^m
    let mut e = vec![Complex64::new(0.0, 0.0); TAIL_ORDER + 1];
    e[0] = one;
    for m in 1..=TAIL_ORDER {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=m {
            acc += j as f64 * d[j] * e[m - j];
        }
        e[m] = acc / m as f64;
    }
    let n = cutoff as f64;
    let power = margin + 1.0;
    let mut shape_at_n = Complex64::new(0.0, 0.0);
    let mut tail = Complex64::new(0.0, 0.0);
    for (m, em) in e.iter().enumerate() {
        shape_at_n += em * n.powi(-(m as i32));
        tail += em * hurwitz_zeta(power + m as f64, n)?;
    }
    let normal = term / (shape_at_n * Complex64::new(n, 0.0).powc(-power));
    Ok(head + normal * tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma_real;
    use approx::assert_relative_eq;

    fn real(spec: &HypSeriesSpec) -> f64 {
        hyp_pfq(spec).unwrap().to_f64().unwrap()
    }

    #[test]
    fn log_series() {
        let v = real(&HypSeriesSpec::real(&[1.0, 1.0], &[2.0], 0.5));
        // partial-sum oracle: Σ (1/2)^n / (n+1)
        let oracle: f64 = (0..200).map(|n| 0.5f64.powi(n) / (n as f64 + 1.0)).sum();
        assert_relative_eq!(v, 2.0 * 2f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(v, oracle, max_relative = 1e-15);
    }

    #[test]
    fn terminates_at_first_term() {
        let spec = HypSeriesSpec::new(
            vec![Scalar::rational(5, 2), Scalar::integer(3), Scalar::integer(0)],
            vec![Scalar::rational(7, 2), Scalar::integer(4)],
            Scalar::integer(1),
        );
        assert_eq!(spec.termination(), Some(0));
        assert_eq!(hyp_pfq(&spec).unwrap(), Scalar::integer(1));
    }

    #[test]
    fn gauss_summation() {
        let (a, b, c) = (0.3, 0.4, 2.1);
        let closed = gamma_real(c).unwrap() * gamma_real(c - a - b).unwrap()
            / (gamma_real(c - a).unwrap() * gamma_real(c - b).unwrap());
        let v = real(&HypSeriesSpec::real(&[a, b], &[c], 1.0));
        assert_relative_eq!(v, closed, max_relative = 1e-12);
    }

    #[test]
    fn gauss_summation_grid_near_margin() {
        for (a, b, c) in [(0.5, 0.5, 1.1), (1.7, -0.3, 1.55), (2.5, 3.25, 5.85), (-1.5, 0.75, 0.4)] {
            let closed = gamma_real(c).unwrap() * gamma_real(c - a - b).unwrap()
                / (gamma_real(c - a).unwrap() * gamma_real(c - b).unwrap());
            let v = real(&HypSeriesSpec::real(&[a, b], &[c], 1.0));
            assert_relative_eq!(v, closed, max_relative = 1e-11);
        }
    }

    #[test]
    fn complex_gauss_summation() {
        let a = Complex64::new(0.4, 0.3);
        let b = Complex64::new(1.1, -0.2);
        let c = Complex64::new(2.0, 0.5);
        use crate::specfun::gamma::gamma;
        let closed = gamma(c).unwrap() * gamma(c - a - b).unwrap()
            / (gamma(c - a).unwrap() * gamma(c - b).unwrap());
        let v = hyp_pfq(&HypSeriesSpec::complex(&[a, b], &[c], Complex64::new(1.0, 0.0)))
            .unwrap()
            .to_complex();
        assert!((v - closed).norm() < 1e-11 * closed.norm());
    }

    #[test]
    fn saalschutz_balanced_3f2() {
        // 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
        let (n, a, b, c) = (4i64, Scalar::rational(1, 3), Scalar::rational(5, 4), Scalar::rational(7, 2));
        let s = Scalar::integer(1).try_add(&a).unwrap().try_add(&b).unwrap().try_sub(&c).unwrap().try_sub(&Scalar::integer(n)).unwrap();
        let spec = HypSeriesSpec::new(vec![Scalar::integer(-n), a.clone(), b.clone()], vec![c.clone(), s], Scalar::integer(1));
        let got = hyp_pfq(&spec).unwrap();
        use crate::specfun::pochhammer;
        let ca = c.try_sub(&a).unwrap();
        let cb = c.try_sub(&b).unwrap();
        let cab = ca.try_sub(&b).unwrap();
        let expected = pochhammer(&ca, n).unwrap().try_mul(&pochhammer(&cb, n).unwrap()).unwrap()
            .try_div(&pochhammer(&c, n).unwrap().try_mul(&pochhammer(&cab, n).unwrap()).unwrap()).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn divergence_and_mode_errors() {
        let slow = HypSeriesSpec::real(&[1.0, 1.0], &[2.02], 1.0);
        assert!(matches!(hyp_pfq(&slow), Err(Error::Divergence(_))));
        let outside = HypSeriesSpec::real(&[1.0, 1.0], &[3.0], 1.5);
        assert!(matches!(hyp_pfq(&outside), Err(Error::Divergence(_))));
        let exact_infinite = HypSeriesSpec::new(
            vec![Scalar::integer(1), Scalar::integer(1)],
            vec![Scalar::integer(3)],
            Scalar::integer(1),
        );
        assert!(matches!(hyp_pfq(&exact_infinite), Err(Error::ModeMismatch(_))));
        let mixed = HypSeriesSpec::new(vec![Scalar::integer(-2)], vec![Scalar::Real(0.5)], Scalar::integer(1));
        assert!(matches!(hyp_pfq(&mixed), Err(Error::ModeMismatch(_))));
    }

    #[test]
    fn denominator_pole_unless_terminated() {
        let bad = HypSeriesSpec::real(&[1.5], &[-2.0], 0.3);
        assert!(matches!(hyp_pfq(&bad), Err(Error::Pole(_))));
        let fine = HypSeriesSpec::real(&[-2.0], &[-3.0], 0.3);
        // 1 + (-2)/(-3) 0.3 + (-2)(-1)/((-3)(-2)) 0.09/2
        assert_relative_eq!(real(&fine), 1.0 + 0.2 + 0.015, max_relative = 1e-15);
    }
}
