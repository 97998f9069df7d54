//! Special functions behind the exact moment formulas.

pub mod asymptotic;
pub mod bessel;
pub mod gamma;
pub mod hypergeometric;
pub mod zeta;

pub use bessel::{bessel_j, bessel_j_integral, bessel_zero, bessel_zeros, mellin_bessel_pair};
pub use gamma::{gamma, gamma_real, ln_gamma, ln_gamma_real, rgamma, rgamma_real};
pub use hypergeometric::{hyp_pfq, HypSeriesSpec};
pub use zeta::{bessel_zeta, hurwitz_zeta, rayleigh_sequence, ZetaMethod};

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Rising factorial extended to negative index:
/// `(x)_n = x(x+1)...(x+n-1)` and `(x)_{-n} = 1/((x-1)(x-2)...(x-n))`.
pub fn pochhammer_in<F: Field>(x: &F, n: i64) -> Result<F> {
    let mut acc = F::one();
    if n >= 0 {
        for j in 0..n {
            acc = acc * (x.clone() + F::from_i64(j));
        }
        return Ok(acc);
    }
    for j in 1..=(-n) {
        let factor = x.clone() - F::from_i64(j);
        if factor.is_zero() {
            return Err(Error::ZeroDivisor(format!(
                "({x:?})_{n}: factor x - {j} vanishes"
            )));
        }
        acc = acc * factor;
    }
    Ok(F::one() / acc)
}

pub fn pochhammer(x: &Scalar, n: i64) -> Result<Scalar> {
    Ok(match x {
        Scalar::Real(v) => Scalar::Real(pochhammer_in::<f64>(v, n)?),
        Scalar::Complex(z) => Scalar::Complex(pochhammer_in::<Complex64>(z, n)?),
        Scalar::Rational(r) => Scalar::Rational(pochhammer_in::<BigRational>(r, n)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&Scalar::integer(3), 2).unwrap(), Scalar::integer(12));
        assert_eq!(pochhammer(&Scalar::rational(7, 3), 0).unwrap(), Scalar::integer(1));
        assert_eq!(pochhammer(&Scalar::integer(5), -2).unwrap(), Scalar::rational(1, 12));
        assert!(matches!(
            pochhammer(&Scalar::integer(2), -3),
            Err(Error::ZeroDivisor(_))
        ));
    }

    proptest! {
        #[test]
        fn splice_identity(p in -40i64..40, q in 1i64..7, m in 0i64..6, n in -5i64..6) {
            let x = BigRational::new(p.into(), q.into());
            let whole = pochhammer_in(&x, m + n);
            let head = pochhammer_in(&x, m).unwrap();
            let shifted = x.clone() + BigRational::from_i64(m);
            let tail = pochhammer_in(&shifted, n);
            // (x)_{m+n} = (x)_m (x+m)_n wherever both sides are defined
            if let (Ok(w), Ok(t)) = (whole, tail) {
                prop_assert_eq!(w, head * t);
            }
        }
    }
}
