//! Eigenvalues of symmetric tridiagonal matrices.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `off` (`off[i]` couples rows i and i+1), ascending.
/// Implicit-shift QL without eigenvectors.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if off.len() + 1 != n {
        return Err(Error::Domain(format!(
            "off-diagonal length {} does not match dimension {n}",
            off.len()
        )));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NonConvergence(format!(
                    "tridiagonal QL did not converge for eigenvalue {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_spectra() {
        // second-difference matrix: 2 - 2cos(kπ/(n+1))
        let n = 30;
        let ev = tridiagonal_eigenvalues(&vec![2.0; n], &vec![-1.0; n - 1]).unwrap();
        for (k, v) in ev.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13);
        }
        assert_eq!(tridiagonal_eigenvalues(&[3.5], &[]).unwrap(), vec![3.5]);
        let ev = tridiagonal_eigenvalues(&[1.0, 1.0], &[2.0]).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn trace_and_frobenius(diag in prop::collection::vec(-5.0f64..5.0, 1..25), seed in prop::collection::vec(-3.0f64..3.0, 24)) {
            let n = diag.len();
            let off: Vec<f64> = seed[..n - 1].to_vec();
            let ev = tridiagonal_eigenvalues(&diag, &off).unwrap();
            let trace: f64 = diag.iter().sum();
            let frob: f64 = diag.iter().map(|x| x * x).sum::<f64>() + 2.0 * off.iter().map(|x| x * x).sum::<f64>();
            prop_assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-11 * (1.0 + frob.sqrt()));
            prop_assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-10 * (1.0 + frob));
            prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
