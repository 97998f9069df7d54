//! Finite sums of terms `c · x^{-p} · e^{i f x}` for large x.
//!
//! Used for the Hankel expansion of J and for closed-form tails of
//! integrals whose integrands are products of Bessel functions.

use std::f64::consts::PI;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscTerm {
    pub coef: Complex64,
    pub power: Complex64,
    pub freq: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OscSeries {
    pub terms: Vec<OscTerm>,
}

const MAX_PARTS: usize = 40;

impl OscSeries {
    pub fn monomial(coef: Complex64, power: Complex64) -> Self {
        Self {
            terms: vec![OscTerm { coef, power, freq: 0.0 }],
        }
    }

    /// Hankel expansion of J_ν with `order` terms in each exponential.
    pub fn bessel_j(nu: f64, order: usize) -> Self {
        let mu = 4.0 * nu * nu;
        let phase = (0.5 * nu + 0.25) * PI;
        let scale = (2.0 / PI).sqrt();
        let up = Complex64::from_polar(0.5 * scale, -phase);
        let down = up.conj();
        let mut terms = Vec::with_capacity(2 * order);
        let mut a = 1.0;
        let mut rot = Complex64::new(1.0, 0.0);
        for m in 0..order {
            if m > 0 {
                let odd = (2 * m - 1) as f64;
                a *= (mu - odd * odd) / (8.0 * m as f64);
                rot *= Complex64::i();
            }
            let power = Complex64::new(m as f64 + 0.5, 0.0);
            terms.push(OscTerm { coef: up * rot * a, power, freq: 1.0 });
            terms.push(OscTerm { coef: down * rot.conj() * a, power, freq: -1.0 });
        }
        Self { terms }
    }

    pub fn scale(mut self, c: Complex64) -> Self {
        for t in &mut self.terms {
            t.coef *= c;
        }
        self
    }

    /// Multiplies every term by `x^{-q}`.
    pub fn shift_power(mut self, q: Complex64) -> Self {
        for t in &mut self.terms {
            t.power += q;
        }
        self
    }

    pub fn plus(mut self, other: &OscSeries) -> Self {
        self.terms.extend_from_slice(&other.terms);
        self
    }

    pub fn mul(&self, other: &OscSeries) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(OscTerm {
                    coef: a.coef * b.coef,
                    power: a.power + b.power,
                    freq: a.freq + b.freq,
                });
            }
        }
        Self { terms }.merge()
    }

    /// Combines terms with identical power and frequency.
    pub fn merge(self) -> Self {
        let mut out: Vec<OscTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            match out
                .iter_mut()
                .find(|o| o.freq == t.freq && (o.power - t.power).norm() < 1e-13)
            {
                Some(o) => o.coef += t.coef,
                None => out.push(t),
            }
        }
        Self { terms: out }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let lx = x.ln();
        self.terms
            .iter()
            .map(|t| t.coef * (-t.power * lx).exp() * Complex64::from_polar(1.0, t.freq * x))
            .sum()
    }

    /// Sum of term magnitudes at x, a crude size bound.
    pub fn magnitude(&self, x: f64) -> f64 {
        let lx = x.ln();
        self.terms
            .iter()
            .map(|t| t.coef.norm() * (-t.power.re * lx).exp())
            .sum()
    }

    /// The antiderivative vanishing at +∞, `F(x) = ∫_x^∞ f`, expanded at
    /// the point `x0` (which sets where repeated integration by parts is
    /// truncated). Returns the series and the size of the first dropped term.
    pub fn tail_integral(&self, x0: f64) -> (OscSeries, f64) {
        let mut terms = Vec::new();
        let mut dropped = 0.0;
        for t in &self.terms {
            if t.freq == 0.0 {
                terms.push(OscTerm {
                    coef: t.coef / (t.power - 1.0),
                    power: t.power - 1.0,
                    freq: 0.0,
                });
                continue;
            }
            // ∫_x^∞ t^{-p} e^{ift} = -e^{ifx} Σ_r (p)_r x^{-p-r} / (if)^{r+1}
            let w = Complex64::new(0.0, t.freq);
            let mut c = -t.coef / w;
            let mut last = f64::INFINITY;
            let mut r = 0;
            loop {
                let size = c.norm() * x0.powf(-(t.power.re + r as f64));
                if size > last || r == MAX_PARTS {
                    dropped += size;
                    break;
                }
                terms.push(OscTerm {
                    coef: c,
                    power: t.power + r as f64,
                    freq: t.freq,
                });
                last = size;
                if size == 0.0 {
                    break;
                }
                c *= (t.power + r as f64) / w;
                r += 1;
            }
        }
        (Self { terms }.merge(), dropped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_is_exact() {
        // J_{1/2}(x) = sqrt(2/(πx)) sin x, and the expansion stops after one term
        let s = OscSeries::bessel_j(0.5, 6);
        for x in [3.0, 17.5, 200.0] {
            let v = s.eval(x);
            let exact = (2.0 / (PI * x)).sqrt() * x.sin();
            assert!((v.re - exact).abs() < 1e-15, "{x}");
            assert!(v.im.abs() < 1e-15);
        }
    }

    #[test]
    fn tail_of_sine_over_power() {
        // ∫_x^∞ sin t / t^2: panel quadrature out to a far point plus the series there
        let f = OscSeries {
            terms: vec![
                OscTerm { coef: Complex64::new(0.0, -0.5), power: Complex64::new(2.0, 0.0), freq: 1.0 },
                OscTerm { coef: Complex64::new(0.0, 0.5), power: Complex64::new(2.0, 0.0), freq: -1.0 },
            ],
        };
        let x = 40.0;
        let (tail, dropped) = f.tail_integral(x);
        assert!(dropped < 1e-16);
        let far = 40.0 + 2000.0 * PI;
        let g = |t: f64| t.sin() / (t * t);
        let expected = crate::quad::gauss_legendre_panels(&g, x, far, 20_000) + tail.eval(far).re;
        let got = tail.eval(x).re;
        assert!((got - expected).abs() < 1e-13, "{got} vs {expected}");
    }
}
