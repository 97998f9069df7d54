//! Exact inverse moments M^{(β)}_N(-k, α), their hard-edge limits and
//! the low-temperature limit.
//!
//! Integer-order formulas are generic over [`Field`], so the same code runs
//! in exact rational arithmetic and in double precision. Complex orders go
//! through the closed-form Mellin transforms.

pub mod integer;
pub mod mellin;
pub mod partition_sum;
pub mod tables;

pub use integer::{duality_map, integer_moment, recurrence_iterate, recurrence_moment, recurrence_step, BetaClass};
pub use mellin::{
    check_strip, mellin_beta1_at_integer, mellin_beta2_at_integer, mellin_beta4_at_integer, mellin_limit_beta1,
    mellin_limit_beta2, mellin_limit_beta4, Beta4Form,
};
pub use partition_sum::{
    alpha_minus, coeff_finite_n, coeff_limit, coeff_lowtemp, moment_finite_n, moment_limit, moment_lowtemp,
    partition_sum_finite_n, partition_sum_limit,
};
pub use tables::{rayleigh_table, tabulated_finite_n, tabulated_limit};

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{common_mode, Mode, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Order {
    Integer(u32),
    Complex(Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Partition,
    Mellin,
    IntegerCase,
    Recurrence,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Partition => "partition",
            Method::Mellin => "mellin",
            Method::IntegerCase => "integer-case",
            Method::Recurrence => "recurrence",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentQuery {
    pub order: Order,
    pub beta: Scalar,
    pub alpha: Scalar,
    pub n_size: Option<u64>,
    pub beta4_form: Beta4Form,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: Scalar,
    pub method: Method,
}

enum Args {
    Real(Vec<f64>),
    Exact(Vec<BigRational>),
}

fn args(values: &[&Scalar]) -> Result<Args> {
    match common_mode(values)? {
        Mode::Rational => Ok(Args::Exact(
            values.iter().map(|v| v.as_rational().cloned()).collect::<Result<_>>()?,
        )),
        Mode::Real => Ok(Args::Real(values.iter().map(|v| v.to_f64()).collect::<Result<_>>()?)),
        Mode::Complex => Err(Error::Domain(
            "integer-order formulas take real or rational parameters".into(),
        )),
    }
}

/// Runs a generic formula in the mode shared by its inputs.
macro_rules! in_mode {
    ($values:expr, |$v:ident: $t:ident| $body:expr) => {
        match args($values)? {
            Args::Real($v) => {
                type $t = f64;
                let r: Result<f64> = $body;
                r.map(Scalar::Real)
            }
            Args::Exact($v) => {
                type $t = BigRational;
                let r: Result<BigRational> = $body;
                r.map(Scalar::Rational)
            }
        }
    };
}

fn beta_of(beta: &Scalar) -> Result<f64> {
    beta.to_f64()
}

impl MomentQuery {
    pub fn integer(k: u32, beta: Scalar, alpha: Scalar, n_size: Option<u64>) -> Self {
        Self { order: Order::Integer(k), beta, alpha, n_size, beta4_form: Beta4Form::ThreeFTwo }
    }

    pub fn complex(s: Complex64, beta: Scalar, alpha: Scalar) -> Self {
        Self { order: Order::Complex(s), beta, alpha, n_size: None, beta4_form: Beta4Form::ThreeFTwo }
    }

    pub fn evaluate(&self, method: Method) -> Result<Evaluation> {
        let beta = beta_of(&self.beta)?;
        match self.order {
            Order::Complex(s) => {
                if self.n_size.is_some() {
                    return Err(Error::Domain("complex orders are available in the limiting regime only".into()));
                }
                if !matches!(method, Method::Auto | Method::Mellin) {
                    return Err(Error::Domain(format!("method {} needs an integer order", method.tag())));
                }
                let alpha = self.alpha.to_f64()?;
                let value = if beta == 2.0 {
                    mellin_limit_beta2(s, alpha)?
                } else if beta == 4.0 {
                    mellin_limit_beta4(s, alpha, self.beta4_form)?
                } else if beta == 1.0 {
                    mellin_limit_beta1(s, alpha)?
                } else {
                    return Err(Error::Domain(format!("closed-form Mellin transforms exist for β ∈ {{1,2,4}}, got {beta}")));
                };
                Ok(Evaluation { value: Scalar::Complex(value), method: Method::Mellin })
            }
            Order::Integer(k) => self.evaluate_integer(k, beta, method),
        }
    }

    fn evaluate_integer(&self, k: u32, beta: f64, method: Method) -> Result<Evaluation> {
        let values = [&self.beta, &self.alpha];
        if let Some(n) = self.n_size {
            if !matches!(method, Method::Auto | Method::Partition) {
                return Err(Error::Domain(format!("finite N supports the partition method only, not {}", method.tag())));
            }
            let value = in_mode!(&values, |v: T| moment_finite_n::<T>(k, &v[0], &v[1], n))?;
            return Ok(Evaluation { value, method: Method::Partition });
        }
        let method = if method == Method::Auto { Method::Partition } else { method };
        let value = match method {
            Method::Partition | Method::Auto => in_mode!(&values, |v: T| moment_limit::<T>(k, &v[0], &v[1]))?,
            Method::Mellin => {
                let which = beta;
                in_mode!(&values, |v: T| {
                    partition_sum::require_order(k, &v[1]).and_then(|_| {
                        if which == 2.0 {
                            mellin_beta2_at_integer::<T>(k, &v[1])
                        } else if which == 4.0 {
                            mellin_beta4_at_integer::<T>(k, &v[1])
                        } else if which == 1.0 {
                            mellin_beta1_at_integer::<T>(k, &v[1])
                        } else {
                            Err(Error::Domain(format!("closed-form Mellin transforms exist for β ∈ {{1,2,4}}, got {which}")))
                        }
                    })
                })?
            }
            Method::IntegerCase => {
                let class = BetaClass::from_beta(beta)?;
                in_mode!(&values, |v: T| integer_moment::<T>(class, k, &v[1]))?
            }
            Method::Recurrence => {
                let class = BetaClass::from_beta(beta)?;
                in_mode!(&values, |v: T| recurrence_moment::<T>(class, k, &v[1]))?
            }
        };
        Ok(Evaluation { value, method })
    }
}

/// 8^k ζ_ν(2k) through the low-temperature partition sum.
pub fn lowtemp(k: u32, nu: &Scalar) -> Result<Scalar> {
    in_mode!(&[nu], |v: T| moment_lowtemp::<T>(k, &v[0]))
}

/// Both sides of the duality identity in the mode of the inputs.
pub fn duality(k: u32, beta: &Scalar, alpha: &Scalar) -> Result<(Scalar, Scalar)> {
    match args(&[beta, alpha])? {
        Args::Real(v) => duality_map::<f64>(k, &v[0], &v[1]).map(|(a, b)| (Scalar::Real(a), Scalar::Real(b))),
        Args::Exact(v) => {
            duality_map::<BigRational>(k, &v[0], &v[1]).map(|(a, b)| (Scalar::Rational(a), Scalar::Rational(b)))
        }
    }
}
