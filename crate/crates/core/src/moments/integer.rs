//! Integer-order moments for β ∈ {1, 4}: the finite binomial sums, the
//! solved first-order recurrence, and the β ↔ 4/β duality.

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::specfun::pochhammer_in;

use super::mellin::mellin_beta2_at_integer;
use super::partition_sum::partition_sum_limit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaClass {
    One,
    Four,
}

impl BetaClass {
    pub fn from_beta(beta: f64) -> Result<Self> {
        match beta {
            b if b == 1.0 => Ok(BetaClass::One),
            b if b == 4.0 => Ok(BetaClass::Four),
            other => Err(Error::Domain(format!("this route exists only for β ∈ {{1, 4}}, got {other}"))),
        }
    }

    pub fn beta(self) -> i64 {
        match self {
            BetaClass::One => 1,
            BetaClass::Four => 4,
        }
    }
}

fn int<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

fn factorial<F: Field>(n: u32) -> F {
    (1..=n as i64).fold(F::one(), |acc, j| acc * int(j))
}

fn binomial<F: Field>(n: u32, r: u32) -> F {
    factorial::<F>(n) / (factorial::<F>(r) * factorial::<F>(n - r))
}

fn poch<F: Field>(x: &F, n: u32) -> F {
    pochhammer_in(x, n as i64).expect("nonnegative index")
}

fn over<F: Field>(num: F, den: F, what: &str) -> Result<F> {
    num.checked_div(den, || format!("{what} vanishes")).map_err(|e| match e {
        Error::ZeroDivisor(m) => Error::Pole(m),
        other => other,
    })
}

fn require_order<F: Field>(k: u32, alpha: &F) -> Result<()> {
    if k == 0 || !(alpha.approx() > k as f64 - 1.0) {
        return Err(Error::Domain(format!(
            "order {k} needs k >= 1 and α > k - 1, got α = {}",
            alpha.approx()
        )));
    }
    Ok(())
}

/// The finite sums for integer k: a leading 8^{k-1} Γ-ratio term minus a
/// (k-1)-term binomial sum, empty at k = 1.
pub fn integer_moment<F: Field>(class: BetaClass, k: u32, alpha: &F) -> Result<F> {
    require_order(k, alpha)?;
    let half = F::ratio(1, 2);
    let ki = k as i64;
    let eight = int::<F>(8).powi(k - 1) * poch(&half, k - 1);
    let (lead, sum) = match class {
        BetaClass::Four => {
            let lead = over(eight, factorial::<F>(k) * poch(&(alpha.clone() + int(1 - ki)), 2 * k - 1), "(α-k+1)_{2k-1}")?;
            let mut sum = F::zero();
            for j in 0..k.saturating_sub(1) {
                let jj = j as i64;
                let sign = if j % 2 == 0 { F::one() } else { -F::one() };
                let den = (alpha.clone() + int(2 + 2 * jj)) * poch(&(alpha.clone() + int(1 - ki + jj)), k + 1);
                sum = sum + over(sign * binomial::<F>(k - 2, j), den, "(α+2+2j)(α-k+1+j)_{k+1}")?;
            }
            (lead, sum)
        }
        BetaClass::One => {
            let two_alpha = alpha.clone() * int(2);
            let lead = over(
                eight * int(2),
                factorial::<F>(k) * poch(&(two_alpha.clone() + int(1 - ki)), 2 * k - 1),
                "(2α-k+1)_{2k-1}",
            )?;
            let mut sum = F::zero();
            for j in 0..k.saturating_sub(1) {
                let jj = j as i64;
                let sign = if (k + j).is_multiple_of(2) { F::one() } else { -F::one() };
                let den = (int::<F>(1 + jj) - alpha.clone()) * poch(&(two_alpha.clone() + int(-1 - jj)), k + 1);
                sum = sum + over(sign * binomial::<F>(k - 2, j), den, "(1+j-α)(2α-1-j)_{k+1}")?;
            }
            (lead, sum)
        }
    };
    if k == 1 {
        return Ok(lead);
    }
    Ok(lead - int::<F>(2).powi(k - 1) / factorial::<F>(k - 2) * sum)
}

/// The closed solution of the first-order recurrence.
pub fn recurrence_moment<F: Field>(class: BetaClass, k: u32, alpha: &F) -> Result<F> {
    require_order(k, alpha)?;
    let half = F::ratio(1, 2);
    let ki = k as i64;
    let mut sum = F::zero();
    match class {
        BetaClass::One => {
            for m in 1..k {
                let mi = m as i64;
                let num = int::<F>(4).powi(m - 1)
                    * poch(&half, m - 1)
                    * poch(&(alpha.clone() + int(1 - mi)), 2 * m);
                let den = factorial::<F>(m + 1) * poch(&(alpha.clone() * int(2) + int(2 - mi)), 2 * m - 1);
                sum = sum + over(num, den, "(2α-m+2)_{2m-1}")?;
            }
            let pre = over(int::<F>(2).powi(k - 1), poch(&(alpha.clone() + int(1 - ki)), 2 * k), "(α+1-k)_{2k}")?;
            Ok(pre * (alpha.clone() + F::one() - int::<F>(3) * sum))
        }
        BetaClass::Four => {
            let a2 = alpha.clone() * half.clone();
            for m in 1..k {
                let mi = m as i64;
                let num = int::<F>(4).powi(m - 1) * poch(&half, m - 1) * poch(&(a2.clone() - int(mi)), 2 * m);
                let den = factorial::<F>(m + 1) * poch(&(alpha.clone() - int(mi)), 2 * m - 1);
                sum = sum + over(num, den, "(α-m)_{2m-1}")?;
            }
            let pre = over(int::<F>(2).powi(k) / int(4), poch(&(a2.clone() - int(ki)), 2 * k), "(α/2-k)_{2k}")?;
            Ok(pre * (a2 - F::one() - int::<F>(3) * sum))
        }
    }
}

/// One application of a_{k+1} = a_k f_k + g_k for β = 1, with
/// f_k = 2/(α²+α-k(k+1)) and g_k = -6·2^{k+1} M^{(2)}(-k, 2α+1) / (4(k+1)(α²+α-k(k+1))).
pub fn recurrence_step<F: Field>(k: u32, a_k: &F, alpha: &F) -> Result<F> {
    let ki = k as i64;
    let d = alpha.clone() * alpha.clone() + alpha.clone() - int(ki * (ki + 1));
    let f = over(int(2), d.clone(), "α²+α-k(k+1)")?;
    let m2 = mellin_beta2_at_integer(k, &(alpha.clone() * int(2) + F::one()))?;
    let g = over(-int::<F>(6) * int::<F>(2).powi(k + 1) * m2, int::<F>(4 * (ki + 1)) * d, "α²+α-k(k+1)")?;
    Ok(a_k.clone() * f + g)
}

/// Iterates the recurrence from a_1 = 1/α. β = 4 follows from duality:
/// M^{(4)}(-k, α) = -M^{(1)}(-k, -α/2)/2.
pub fn recurrence_iterate<F: Field>(class: BetaClass, k: u32, alpha: &F) -> Result<F> {
    require_order(k, alpha)?;
    let a = match class {
        BetaClass::One => alpha.clone(),
        BetaClass::Four => -(alpha.clone() / int(2)),
    };
    let mut value = over(F::one(), a.clone(), "α")?;
    for j in 1..k {
        value = recurrence_step(j, &value, &a)?;
    }
    Ok(match class {
        BetaClass::One => value,
        BetaClass::Four => -(value / int(2)),
    })
}

/// (M^{(β)}(-k,α), (-2/β) M^{(4/β)}(-k,-2α/β)); the two are equal.
pub fn duality_map<F: Field>(k: u32, beta: &F, alpha: &F) -> Result<(F, F)> {
    let lhs = partition_sum_limit(k, beta, alpha)?;
    let dual_beta = over(int(4), beta.clone(), "β")?;
    let dual_alpha = over(-(alpha.clone() * int(2)), beta.clone(), "β")?;
    let rhs = over(-int::<F>(2), beta.clone(), "β")? * partition_sum_limit(k, &dual_beta, &dual_alpha)?;
    Ok((lhs, rhs))
}
