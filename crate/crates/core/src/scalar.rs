//! Numeric values in one of three modes, plus the [`Field`] abstraction the
//! exact formulas are written against.
//!
//! Exact-rational values never degrade to floating point: combining a
//! rational with a float is a [`Error::ModeMismatch`]. Real values promote
//! to complex freely.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arithmetic needed by the partition sums and finite Gamma-ratio formulas.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Absolute value as a double, used only for stopping rules and reports.
    fn magnitude(&self) -> f64;
    /// Real part as a double, used for precondition checks.
    fn approx(&self) -> f64;

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p) / Self::from_i64(q)
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Division that reports a vanishing divisor instead of producing inf/NaN.
    fn checked_div(self, rhs: Self, what: impl FnOnce() -> String) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::ZeroDivisor(what()))
        } else {
            Ok(self / rhs)
        }
    }
}

impl Field for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn approx(&self) -> f64 {
        *self
    }
}

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn approx(&self) -> f64 {
        self.re
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Real,
    Complex,
    Rational,
}

/// A value usable in float, complex or exact-rational computations.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Real(f64),
    Complex(Complex64),
    Rational(BigRational),
}

impl Scalar {
    pub fn real(x: f64) -> Self {
        Scalar::Real(x)
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Complex(Complex64::new(re, im))
    }

    pub fn rational(p: i64, q: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn integer(n: i64) -> Self {
        Scalar::rational(n, 1)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Real(_) => Mode::Real,
            Scalar::Complex(_) => Mode::Complex,
            Scalar::Rational(_) => Mode::Rational,
        }
    }

    /// Parses `p/q`, an integer, or a decimal literal.
    ///
    /// With `exact = true` decimals become exact rationals (`10.3` is
    /// `103/10`); otherwise anything that is not written as `p/q` is a float.
    pub fn parse(text: &str, exact: bool) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Domain(format!("cannot parse number `{text}`"));
        if let Some((p, q)) = text.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::ZeroDivisor(format!("denominator of `{text}`")));
            }
            return Ok(Scalar::Rational(BigRational::new(p, q)));
        }
        if !exact {
            return text.parse::<f64>().map(Scalar::Real).map_err(|_| bad());
        }
        decimal_to_rational(text).map(Scalar::Rational).ok_or_else(bad)
    }

    pub fn to_f64(&self) -> Result<f64> {
        match self {
            Scalar::Real(x) => Ok(*x),
            Scalar::Rational(r) => r
                .to_f64()
                .ok_or_else(|| Error::Domain("rational out of double range".into())),
            Scalar::Complex(z) if z.im == 0.0 => Ok(z.re),
            Scalar::Complex(z) => Err(Error::ModeMismatch(format!(
                "expected a real value, got complex {z}"
            ))),
        }
    }

    /// Numeric view as a complex double; rationals are rounded.
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Real(x) => Complex64::new(*x, 0.0),
            Scalar::Complex(z) => *z,
            Scalar::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
        }
    }

    pub fn as_rational(&self) -> Result<&BigRational> {
        match self {
            Scalar::Rational(r) => Ok(r),
            other => Err(Error::ModeMismatch(format!(
                "exact mode requires rational input, got {other}"
            ))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Real(x) => *x == 0.0,
            Scalar::Complex(z) => Field::is_zero(z),
            Scalar::Rational(r) => Field::is_zero(r),
        }
    }

    /// `Some(n)` when the value is exactly the integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Real(x) if x.fract() == 0.0 && x.abs() < 9.0e15 => Some(*x as i64),
            Scalar::Complex(z) if z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9.0e15 => {
                Some(z.re as i64)
            }
            Scalar::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            _ => None,
        }
    }

    fn binary(
        &self,
        rhs: &Scalar,
        real: fn(f64, f64) -> f64,
        cplx: fn(Complex64, Complex64) -> Complex64,
        rat: fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(rat(a, b))),
            (Scalar::Rational(_), _) | (_, Scalar::Rational(_)) => Err(Error::ModeMismatch(
                format!("cannot combine exact {self} with floating {rhs}"),
            )),
            (Scalar::Real(a), Scalar::Real(b)) => Ok(Scalar::Real(real(*a, *b))),
            (a, b) => Ok(Scalar::Complex(cplx(a.to_complex(), b.to_complex()))),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a + b, |a, b| a + b, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a - b, |a, b| a - b, |a, b| a - b)
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binary(rhs, |a, b| a * b, |a, b| a * b, |a, b| a * b)
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor(format!("{self} / 0")));
        }
        self.binary(rhs, |a, b| a / b, |a, b| a / b, |a, b| a / b)
    }
}

/// The mode shared by a set of inputs: rational only if all are rational,
/// complex if any is complex.
pub fn common_mode(values: &[&Scalar]) -> Result<Mode> {
    let rational = values.iter().filter(|v| v.mode() == Mode::Rational).count();
    if rational == values.len() && !values.is_empty() {
        return Ok(Mode::Rational);
    }
    if rational > 0 {
        return Err(Error::ModeMismatch(
            "exact-rational inputs cannot be mixed with floating-point inputs".into(),
        ));
    }
    if values.iter().any(|v| v.mode() == Mode::Complex) {
        Ok(Mode::Complex)
    } else {
        Ok(Mode::Real)
    }
}

fn decimal_to_rational(text: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    if neg {
        num = -num;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// Lowest-terms `p/q` rendering; integers keep the `/1`.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Real(x) => write!(f, "{x:.16e}"),
            Scalar::Complex(z) => write!(f, "{:.16e}{:+.16e}i", z.re, z.im),
            Scalar::Rational(r) => f.write_str(&format_rational(r)),
        }
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Real(x)
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Complex(z)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}
