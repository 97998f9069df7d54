//! Partition-sum formulas for finite N, the hard-edge limit and the
//! low-temperature limit.

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::Field;
use crate::specfun::pochhammer_in;

fn int<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

fn factorial<F: Field>(n: u32) -> F {
    (1..=n as i64).fold(F::one(), |acc, j| acc * int(j))
}

fn poch<F: Field>(x: F, n: u32) -> F {
    pochhammer_in(&x, n as i64).expect("nonnegative index never divides")
}

fn divide<F: Field>(num: F, den: F, what: &str) -> Result<F> {
    num.checked_div(den, || format!("{what} vanishes"))
        .map_err(|e| match e {
            Error::ZeroDivisor(m) => Error::Pole(m),
            other => other,
        })
}

pub fn kappa<F: Field>(beta: &F) -> F {
    beta.clone() / int(2)
}

/// α⁻_η = Π_i (α + 1 + κ(i-1))_{-η_i}.
pub fn alpha_minus<F: Field>(eta: &Partition, alpha: &F, kappa: &F) -> Result<F> {
    let mut acc = F::one();
    for i in 1..=eta.len() {
        let base = alpha.clone() + F::one() + kappa.clone() * int((i - 1) as i64);
        for j in 1..=eta.part(i) {
            let factor = base.clone() - int(j as i64);
            if factor.is_zero() {
                return Err(Error::Pole(format!(
                    "α⁻_{eta}: factor α + κ·{} - {} vanishes",
                    i - 1,
                    j - 1
                )));
            }
            acc = acc / factor;
        }
    }
    Ok(acc)
}

/// Everything in the coefficient except the N-dependent product.
fn coefficient_core<F: Field>(eta: &Partition, kap: &F) -> Result<F> {
    let k = eta.weight();
    let l = eta.len();
    let li = l as i64;
    let mut v = divide(
        int::<F>(k as i64) * factorial(eta.part(1) - 1),
        poch(kap.clone() * int(li - 1) + F::one(), eta.part(1)),
        "(κ(ℓ-1)+1)_{η₁}",
    )?;
    for i in 2..=l {
        let ii = i as i64;
        let num = poch(kap.clone() * int(1 - ii), eta.part(i));
        let den = poch(kap.clone() * int(li - ii) + F::one(), eta.part(i));
        v = divide(v * num, den, "(κ(ℓ-i)+1)_{η_i}")?;
    }
    for i in 1..=l {
        let den = poch(kap.clone() * int(li - i as i64 + 1), eta.part(i));
        v = divide(v, den, "(κ(ℓ-i+1))_{η_i}")?;
    }
    for i in 1..=l {
        for j in i + 1..=l {
            let gap = int::<F>((j - i) as i64);
            let d = eta.part(i) - eta.part(j);
            let kg = kap.clone() * gap;
            let ratio = divide(kg.clone() + int(d as i64), kg.clone(), "κ(j-i)")?;
            let top = poch(kg.clone() + kap.clone(), d);
            let bottom = poch(kg - kap.clone() + F::one(), d);
            v = divide(v * ratio * top, bottom, "(κ(j-i-1)+1)_{η_i-η_j}")?;
        }
    }
    Ok(v)
}

/// A^{(β,N)}_η for the finite-N sum.
pub fn coeff_finite_n<F: Field>(eta: &Partition, beta: &F, n: u64) -> Result<F> {
    let kap = kappa(beta);
    let mut v = coefficient_core(eta, &kap)?;
    for i in 1..=eta.len() {
        let x = kap.clone() * int(n as i64 - i as i64 + 1);
        v = v * poch(x, eta.part(i));
    }
    Ok(v)
}

/// A^{(β)}_η for the hard-edge limit.
pub fn coeff_limit<F: Field>(eta: &Partition, beta: &F) -> Result<F> {
    let kap = kappa(beta);
    Ok(coefficient_core(eta, &kap)? * kap.powi(eta.weight()))
}

/// A_η for the low-temperature limit; always rational.
pub fn coeff_lowtemp<F: Field>(eta: &Partition) -> F {
    let k = eta.weight();
    let l = eta.len();
    let p = |i: usize| eta.part(i) as i64;
    let ip = |base: i64, e: i64| -> F {
        if e >= 0 {
            int::<F>(base).powi(e as u32)
        } else {
            F::one() / int::<F>(base).powi((-e) as u32)
        }
    };
    let sign = if (k - eta.part(1)).is_multiple_of(2) { 1 } else { -1 };
    let mut v = int::<F>(sign) * int::<F>(2).powi(k) * int(k as i64) * factorial(eta.part(1) - 1)
        / factorial(eta.part(l));
    for i in 2..=l {
        v = v * ip((i - 1) as i64, p(i));
    }
    for i in 1..l {
        v = v * ip((l - i) as i64, -p(i));
    }
    for i in 1..=l {
        v = v * ip((l - i + 1) as i64, -p(i));
    }
    for i in 2..=l {
        v = v / factorial(eta.part(i - 1) - eta.part(i));
    }
    for a in 1..=l {
        for b in a + 1..=l {
            v = v * ip((b - a + 1) as i64, p(a) - p(b));
        }
    }
    for b in 3..=l {
        for a in 1..=b - 2 {
            v = v * ip((b - a - 1) as i64, p(b) - p(a));
        }
    }
    v
}

pub(crate) fn require_order<F: Field>(k: u32, alpha: &F) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("moment order k must be at least 1".into()));
    }
    let a = alpha.approx();
    if !(a > k as f64 - 1.0) {
        return Err(Error::Domain(format!(
            "moment of order {k} needs α > {} (k < α+1), got α = {a}",
            k - 1
        )));
    }
    Ok(())
}

fn require_beta<F: Field>(beta: &F) -> Result<()> {
    if !(beta.approx() > 0.0) {
        return Err(Error::Domain(format!("β must be positive, got {}", beta.approx())));
    }
    Ok(())
}

/// Σ_η A^{(β,N)}_η α⁻_η without the k < α+1 check.
pub fn partition_sum_finite_n<F: Field>(k: u32, beta: &F, alpha: &F, n: u64) -> Result<F> {
    require_beta(beta)?;
    let kap = kappa(beta);
    let mut total = F::zero();
    for eta in partitions_of(k)? {
        total = total + coeff_finite_n(&eta, beta, n)? * alpha_minus(&eta, alpha, &kap)?;
    }
    Ok(total)
}

/// Σ_η A^{(β)}_η α⁻_η without the k < α+1 check; this is the analytic
/// continuation used by the duality map.
pub fn partition_sum_limit<F: Field>(k: u32, beta: &F, alpha: &F) -> Result<F> {
    require_beta(beta)?;
    let kap = kappa(beta);
    let mut total = F::zero();
    for eta in partitions_of(k)? {
        total = total + coeff_limit(&eta, beta)? * alpha_minus(&eta, alpha, &kap)?;
    }
    Ok(total)
}

/// M^{(β)}_N(-k, α).
pub fn moment_finite_n<F: Field>(k: u32, beta: &F, alpha: &F, n: u64) -> Result<F> {
    require_order(k, alpha)?;
    if n == 0 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    partition_sum_finite_n(k, beta, alpha, n)
}

/// M^{(β)}(-k, α) = lim N^{-k} M^{(β)}_N(-k, α).
pub fn moment_limit<F: Field>(k: u32, beta: &F, alpha: &F) -> Result<F> {
    require_order(k, alpha)?;
    partition_sum_limit(k, beta, alpha)
}

/// M(-k, ν) = lim β^k M^{(β)}(-k, β(ν+1)/2) = 8^k ζ_ν(2k).
pub fn moment_lowtemp<F: Field>(k: u32, nu: &F) -> Result<F> {
    if !(nu.approx() > -1.0) {
        return Err(Error::Domain(format!("low-temperature moments need ν > -1, got {}", nu.approx())));
    }
    let mut total = F::zero();
    for eta in partitions_of(k)? {
        let mut weight = coeff_lowtemp::<F>(&eta);
        for i in 1..=eta.len() {
            let base = nu.clone() + int(i as i64);
            weight = divide(weight, base.powi(eta.part(i)), "i + ν")?;
        }
        total = total + weight;
    }
    Ok(total)
}
