//! Closed forms of the low-order moments and Rayleigh values, transcribed
//! for use as independent references.

use crate::scalar::Field;

fn int<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

/// M^{(β)}(-k, α) for k ≤ 4 in factored form; `None` above the table.
pub fn tabulated_limit<F: Field>(k: u32, beta: &F, alpha: &F) -> Option<F> {
    let (b, a) = (beta.clone(), alpha.clone());
    let am = |j: i64| alpha.clone() - int(j);
    let two_a_b = int::<F>(2) * a.clone() + b.clone();
    let value = match k {
        1 => F::one() / a,
        2 => b / (a * am(1) * two_a_b),
        3 => b.clone() * b.clone() / (a.clone() * am(1) * am(2) * two_a_b * (a + b)),
        4 => {
            let num = b.clone() * b.clone() * b.clone() * (int::<F>(3) * b.clone() + int::<F>(5) * a.clone() - int(6));
            let den = a.clone()
                * am(1)
                * am(2)
                * am(3)
                * two_a_b.clone()
                * (a.clone() + b.clone())
                * (int::<F>(2) * a.clone() + int::<F>(3) * b.clone())
                * (int::<F>(2) * a - int(2) + b);
            num / den
        }
        _ => return None,
    };
    Some(value)
}

/// M^{(β)}_N(-k, α) for k ≤ 4, including the quartic p_4.
pub fn tabulated_finite_n<F: Field>(k: u32, beta: &F, alpha: &F, n: u64) -> Option<F> {
    let (b, a) = (beta.clone(), alpha.clone());
    let n = int::<F>(n as i64);
    let am = |j: i64| alpha.clone() - int(j);
    let bn = b.clone() * n.clone();
    let b_2a = b.clone() + int::<F>(2) * a.clone();
    let value = match k {
        1 => n / a,
        2 => n * (bn + int::<F>(2) * a.clone()) / (a * am(1) * b_2a),
        3 => {
            n * (bn.clone() + a.clone()) * (bn + int::<F>(2) * a.clone())
                / (a.clone() * am(1) * am(2) * (b.clone() + a) * b_2a)
        }
        4 => {
            let (a2, b2) = (a.clone() * a.clone(), b.clone() * b.clone());
            let quad = n.clone() * n.clone() * (int::<F>(5) * a.clone() * b2.clone() + int::<F>(3) * b2.clone() * b.clone() - int::<F>(6) * b2.clone())
                + n.clone() * (int::<F>(10) * a2.clone() * b.clone() + int::<F>(6) * a.clone() * b2 - int::<F>(12) * a.clone() * b.clone())
                + int::<F>(4) * a2.clone() * a.clone()
                + int::<F>(2) * a2.clone() * b.clone()
                - int::<F>(4) * a2
                + int::<F>(2) * a.clone() * b.clone();
            let p4 = n * (bn + int::<F>(2) * a.clone()) * quad;
            let den = a.clone()
                * am(1)
                * am(2)
                * am(3)
                * (int::<F>(2) * a.clone() - int(2) + b.clone())
                * (b.clone() + a.clone())
                * b_2a
                * (int::<F>(3) * b + int::<F>(2) * a);
            p4 / den
        }
        _ => return None,
    };
    Some(value)
}

/// ζ_ν(2k) for 2k ≤ 8 from the Rayleigh table.
pub fn rayleigh_table<F: Field>(two_k: u32, nu: &F) -> Option<F> {
    let p = |j: i64| nu.clone() + int(j);
    let value = match two_k {
        2 => F::one() / (int::<F>(4) * p(1)),
        4 => F::one() / (int::<F>(16) * p(1).powi(2) * p(2)),
        6 => F::one() / (int::<F>(32) * p(1).powi(3) * p(2) * p(3)),
        8 => (int::<F>(5) * nu.clone() + int(11)) / (int::<F>(256) * p(1).powi(4) * p(2).powi(2) * p(3) * p(4)),
        _ => return None,
    };
    Some(value)
}
