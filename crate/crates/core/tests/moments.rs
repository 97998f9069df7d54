use hardedge::moments::*;
use hardedge::partitions::{partitions_of, Partition};
use hardedge::specfun::{bessel_zeta, ZetaMethod};
use hardedge::{Error, Scalar};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn qi(p: i64) -> BigRational {
    q(p, 1)
}

fn eta(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(a.abs())
}

#[test]
fn alpha_minus_examples() {
    assert_eq!(alpha_minus(&eta(&[1]), &qi(2), &q(7, 3)).unwrap(), q(1, 2));
    assert_eq!(alpha_minus(&eta(&[1, 1]), &qi(3), &qi(1)).unwrap(), q(1, 12));
    assert!(matches!(alpha_minus(&eta(&[2]), &qi(1), &qi(1)), Err(Error::Pole(_))));
}

#[test]
fn finite_n_examples() {
    assert_eq!(moment_finite_n(1, &qi(2), &qi(3), 5).unwrap(), q(5, 3));
    assert_eq!(moment_finite_n(2, &qi(2), &qi(4), 3).unwrap(), q(7, 20));
    let (b, a, n) = (qi(2), qi(5), qi(6));
    let p4 = n.clone()
        * (b.clone() * n.clone() + qi(2) * a.clone())
        * (n.clone() * n.clone() * (qi(5) * a.clone() * b.clone() * b.clone() + qi(3) * b.clone() * b.clone() * b.clone() - qi(6) * b.clone() * b.clone())
            + n.clone() * (qi(10) * a.clone() * a.clone() * b.clone() + qi(6) * a.clone() * b.clone() * b.clone() - qi(12) * a.clone() * b.clone())
            + qi(4) * a.clone() * a.clone() * a.clone()
            + qi(2) * a.clone() * a.clone() * b.clone()
            - qi(4) * a.clone() * a.clone()
            + qi(2) * a.clone() * b.clone());
    let den = a.clone()
        * (a.clone() - qi(1))
        * (a.clone() - qi(2))
        * (a.clone() - qi(3))
        * (qi(2) * a.clone() - qi(2) + b.clone())
        * (b.clone() + a.clone())
        * (b.clone() + qi(2) * a.clone())
        * (qi(3) * b.clone() + qi(2) * a.clone());
    assert_eq!(moment_finite_n(4, &b, &a, 6).unwrap(), p4 / den);
    assert!(matches!(moment_finite_n(3, &qi(2), &qi(2), 4), Err(Error::Domain(_))));
}

#[test]
fn limit_examples() {
    assert_eq!(moment_limit(1, &qi(3), &qi(2)).unwrap(), q(1, 2));
    // β/(α(α-1)(2α+β)) = 2/(4·3·10)
    assert_eq!(moment_limit(2, &qi(2), &qi(4)).unwrap(), q(1, 60));
    assert_eq!(moment_limit(3, &qi(2), &qi(4)).unwrap(), q(1, 360));
    // one-part partitions contribute the empty pairwise product
    let single = coeff_limit(&eta(&[3]), &qi(2)).unwrap();
    assert!(!single.is_zero());
}

#[test]
fn finite_n_coefficients_scale_to_limit() {
    for k in 1..=5 {
        for p in partitions_of(k).unwrap() {
            for beta in [3.0, 5.5, 8.0] {
                let lim = coeff_limit(&p, &beta).unwrap();
                let n = 1_000_000u64;
                let fin = coeff_finite_n(&p, &beta, n).unwrap() / (n as f64).powi(k as i32);
                assert!(close(fin, lim, 1e-5), "{p} β={beta}: {fin} vs {lim}");
            }
        }
    }
    // N (N^{-k} A_N / A - 1) → Σ_i Σ_{m<η_i} (m - κ(i-1)) / κ
    for k in 1..=5 {
        for p in partitions_of(k).unwrap() {
            for beta in [0.7, 2.0] {
                let kap = beta / 2.0;
                let mut first = 0.0;
                for (i, &part) in p.parts().iter().enumerate() {
                    for m in 0..part {
                        first += (m as f64 - kap * i as f64) / kap;
                    }
                }
                let n = 1_000_000u64;
                let lim = coeff_limit(&p, &beta).unwrap();
                let fin = coeff_finite_n(&p, &beta, n).unwrap() / (n as f64).powi(k as i32);
                if lim == 0.0 {
                    assert_eq!(fin, 0.0);
                    continue;
                }
                let rate = (fin / lim - 1.0) * n as f64;
                assert!((rate - first).abs() < 1e-3 * first.abs().max(1.0), "{p} β={beta}: {rate} vs {first}");
            }
        }
    }
    let p = eta(&[1, 1]);
    let lim = coeff_limit(&p, &2.0).unwrap();
    let gaps: Vec<f64> = [100u64, 10_000, 1_000_000]
        .iter()
        .map(|&n| (coeff_finite_n(&p, &2.0, n).unwrap() / (n * n) as f64 - lim).abs())
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2]);
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn mellin_examples() {
    assert!((mellin_limit_beta2(c(1.0), 2.0).unwrap() - 0.5).norm() < 1e-15);
    assert!((mellin_limit_beta2(c(2.0), 4.0).unwrap() - 1.0 / 60.0).norm() < 1e-16);
    let v = mellin_limit_beta2(Complex64::new(0.75, 0.5), 3.0).unwrap();
    assert!(v.norm().is_finite() && v.norm() > 0.0);
    assert!(matches!(mellin_limit_beta2(c(0.4), 3.0), Err(Error::Domain(_))));
    assert!(matches!(mellin_limit_beta2(c(4.1), 3.0), Err(Error::Domain(_))));

    let a = mellin_limit_beta4(c(1.3), 2.5, Beta4Form::ThreeFTwo).unwrap();
    let b = mellin_limit_beta4(c(1.3), 2.5, Beta4Form::FourFThree).unwrap();
    assert!((a - b).norm() < 1e-10 * a.norm());
    for form in [Beta4Form::ThreeFTwo, Beta4Form::FourFThree] {
        assert!((mellin_limit_beta4(c(2.0), 5.0, form).unwrap() - 1.0 / 70.0).norm() < 1e-14);
        assert!((mellin_limit_beta4(c(1.0), 3.7, form).unwrap() - 1.0 / 3.7).norm() < 1e-13);
    }
    assert!(matches!(
        mellin_limit_beta4(c(0.51), 2.5, Beta4Form::FourFThree),
        Err(Error::Divergence(_))
    ));
    assert!((mellin_limit_beta1(c(1.0), 3.0).unwrap() - 1.0 / 3.0).norm() < 1e-14);
    assert!((mellin_limit_beta1(c(2.0), 4.0).unwrap() - 1.0 / 108.0).norm() < 1e-15);
}

#[test]
fn beta4_forms_on_complex_grid() {
    for alpha in [2.5, 5.0] {
        for re in [0.6, 1.1, 1.7, 2.4, 3.2] {
            for im in [0.0, 0.4, -1.3, 2.5] {
                let s = Complex64::new(re, im);
                if s.re >= alpha + 1.0 {
                    continue;
                }
                let a = mellin_limit_beta4(s, alpha, Beta4Form::ThreeFTwo).unwrap();
                let b = mellin_limit_beta4(s, alpha, Beta4Form::FourFThree).unwrap();
                assert!((a - b).norm() <= 1e-10 * a.norm(), "s={s} α={alpha}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn beta2_collapse_exact() {
    for alpha in [qi(7), q(103, 10), q(47, 6)] {
        for k in 1..=6 {
            let lhs = moment_limit(k, &qi(2), &alpha).unwrap();
            assert_eq!(lhs, mellin_beta2_at_integer(k, &alpha).unwrap(), "k={k}");
            let s = c(k as f64);
            let float = mellin_limit_beta2(s, alpha.to_f64().unwrap()).unwrap().re;
            assert!(close(float, lhs.to_f64().unwrap(), 1e-12));
        }
    }
}

#[test]
fn integer_routes_examples() {
    let alpha = q(17, 4);
    assert_eq!(integer_moment(BetaClass::Four, 1, &alpha).unwrap(), BigRational::one() / alpha.clone());
    assert_eq!(integer_moment(BetaClass::One, 2, &qi(4)).unwrap(), moment_limit(2, &qi(1), &qi(4)).unwrap());
    assert_eq!(integer_moment(BetaClass::Four, 3, &qi(6)).unwrap(), mellin_beta4_at_integer(3, &qi(6)).unwrap());
    let float = mellin_limit_beta4(c(3.0), 6.0, Beta4Form::FourFThree).unwrap().re;
    assert!(close(float, integer_moment(BetaClass::Four, 3, &6.0).unwrap(), 1e-13));
    assert_eq!(recurrence_moment(BetaClass::One, 1, &qi(2)).unwrap(), q(1, 2));
    assert_eq!(recurrence_moment(BetaClass::One, 2, &qi(4)).unwrap(), mellin_beta1_at_integer(2, &qi(4)).unwrap());
    assert_eq!(recurrence_moment(BetaClass::Four, 2, &qi(6)).unwrap(), moment_limit(2, &qi(4), &qi(6)).unwrap());
}

#[test]
fn four_routes_agree_exactly() {
    for alpha in [qi(6), q(19, 2), qi(13)] {
        for k in 1..=5u32 {
            let one = moment_limit(k, &qi(1), &alpha).unwrap();
            assert_eq!(mellin_beta1_at_integer(k, &alpha).unwrap(), one, "β=1 mellin k={k}");
            assert_eq!(integer_moment(BetaClass::One, k, &alpha).unwrap(), one, "β=1 sums k={k}");
            assert_eq!(recurrence_moment(BetaClass::One, k, &alpha).unwrap(), one, "β=1 rec k={k}");
            assert_eq!(recurrence_iterate(BetaClass::One, k, &alpha).unwrap(), one, "β=1 step k={k}");
            let four = moment_limit(k, &qi(4), &alpha).unwrap();
            assert_eq!(mellin_beta4_at_integer(k, &alpha).unwrap(), four, "β=4 mellin k={k}");
            assert_eq!(integer_moment(BetaClass::Four, k, &alpha).unwrap(), four, "β=4 sums k={k}");
            if alpha > qi(2 * k as i64) {
                assert_eq!(recurrence_moment(BetaClass::Four, k, &alpha).unwrap(), four, "β=4 rec k={k}");
                assert_eq!(recurrence_iterate(BetaClass::Four, k, &alpha).unwrap(), four, "β=4 step k={k}");
            }
        }
    }
}

#[test]
fn duality_grid_exact() {
    for beta in [q(1, 2), qi(1), qi(2), qi(3), qi(4), qi(8)] {
        for k in 1..=5 {
            let (a, b) = duality_map(k, &beta, &q(23, 2)).unwrap();
            assert_eq!(a, b, "β={beta} k={k}");
        }
    }
    let (a, b) = duality_map(2, &qi(2), &qi(4)).unwrap();
    assert_eq!((a, b), (q(1, 60), q(1, 60)));
    let (a, b) = duality_map(2, &qi(1), &qi(4)).unwrap();
    assert_eq!((a.clone(), b), (q(1, 108), q(1, 108)));
    let (a, b) = duality_map(3, &6.0, &7.0).unwrap();
    assert!(close(a, b, 1e-12));
}

#[test]
fn lowtemp_matches_bessel_zeta() {
    assert_eq!(moment_lowtemp(1, &qi(0)).unwrap(), qi(2));
    assert_eq!(moment_lowtemp(2, &qi(1)).unwrap(), q(1, 3));
    for nu in [qi(0), q(1, 2), qi(1), qi(3), q(-2, 5)] {
        for k in 1..=6u32 {
            let zeta = bessel_zeta(&Scalar::Rational(nu.clone()), 2 * k, ZetaMethod::Recursion).unwrap();
            let expected = qi(8).pow(k as i32) * zeta.as_rational().unwrap();
            assert_eq!(moment_lowtemp(k, &nu).unwrap(), expected, "ν={nu} k={k}");
        }
    }
}

#[test]
fn low_temperature_limit_rate() {
    let beta = qi(100_000_000);
    for nu in [qi(0), q(1, 2), qi(1), qi(3)] {
        for k in 1..=4u32 {
            let alpha = beta.clone() * (nu.clone() + qi(1)) / qi(2);
            let scaled = beta.pow(k as i32) * moment_limit(k, &beta, &alpha).unwrap();
            let target = moment_lowtemp(k, &nu).unwrap();
            let gap = ((scaled - target.clone()) / target).abs();
            assert!(gap < q(1, 1_000_000), "ν={nu} k={k}");
        }
    }
}

#[test]
fn query_dispatch() {
    let exact = MomentQuery::integer(2, Scalar::integer(2), Scalar::integer(4), None);
    assert_eq!(exact.evaluate(Method::Auto).unwrap().value, Scalar::rational(1, 60));
    for m in [Method::Mellin, Method::Partition] {
        assert_eq!(exact.evaluate(m).unwrap().value, Scalar::rational(1, 60));
    }
    assert!(exact.evaluate(Method::IntegerCase).is_err());
    let float = MomentQuery::integer(1, Scalar::Real(7.3), Scalar::Real(5.0), Some(12));
    let v = float.evaluate(Method::Auto).unwrap().value.to_f64().unwrap();
    assert!(close(v, 2.4, 1e-15));
    let mixed = MomentQuery::integer(1, Scalar::Real(7.3), Scalar::integer(5), None);
    assert!(matches!(mixed.evaluate(Method::Auto), Err(Error::ModeMismatch(_))));
    let complex = MomentQuery::complex(Complex64::new(0.75, 0.5), Scalar::Real(2.0), Scalar::Real(3.0));
    let v = complex.evaluate(Method::Auto).unwrap().value.to_complex();
    assert_eq!(v, mellin_limit_beta2(Complex64::new(0.75, 0.5), 3.0).unwrap());
}

fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..60, 1i64..12).prop_map(|(p, d)| q(p, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moments_are_positive(k in 1u32..=5, beta in positive_rational(), extra in positive_rational(), n in 1u64..9) {
        let alpha = qi(k as i64 - 1) + extra;
        prop_assert!(moment_limit(k, &beta, &alpha).unwrap().is_positive());
        prop_assert!(moment_finite_n(k, &beta, &alpha, n).unwrap().is_positive());
    }

    #[test]
    fn duality_holds_exactly(k in 1u32..=4, beta in positive_rational(), alpha in positive_rational()) {
        match duality_map(k, &beta, &alpha) {
            Ok((a, b)) => prop_assert_eq!(a, b),
            Err(Error::Pole(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn k1_moment_is_beta_free(beta in positive_rational(), alpha in positive_rational(), n in 1u64..20) {
        prop_assert_eq!(moment_finite_n(1, &beta, &alpha, n).unwrap(), qi(n as i64) / alpha.clone());
        prop_assert_eq!(moment_limit(1, &beta, &alpha).unwrap(), BigRational::one() / alpha);
    }

    #[test]
    fn recurrence_step_chains(alpha in (30i64..200).prop_map(|p| q(p, 7))) {
        let mut a = BigRational::one() / alpha.clone();
        for k in 1..4u32 {
            a = recurrence_step(k, &a, &alpha).unwrap();
            prop_assert_eq!(a.clone(), moment_limit(k + 1, &qi(1), &alpha).unwrap());
        }
    }
}
