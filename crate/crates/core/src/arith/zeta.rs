use crate::analysis::{ln_gamma, ComplexSum};
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaValue {
    pub sigma: f64,
    pub t: f64,
    pub value: Complex64,
    /// Size of the first omitted Bernoulli correction.
    pub err_est: f64,
    /// `err_est > 1e-6·|value|`.
    pub accuracy_loss: bool,
}

// B_2 .. B_14
const BERNOULLI: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// Euler–Maclaurin with cutoff `n` and corrections through `B₁₂`; returns
/// the value and the magnitude of the `B₁₄` term. Valid for any `s ≠ 1`.
pub fn zeta_raw(s: Complex64, n: usize) -> (Complex64, f64) {
    let n = n.max(2);
    let mut sum = ComplexSum::new();
    for k in 1..n {
        let lk = (k as f64).ln();
        sum.add(Complex64::from_polar((-s.re * lk).exp(), -s.im * lk));
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = Complex64::from_polar((-s.re * ln_n).exp(), -s.im * ln_n); // N^{-s}
    sum.add(n_pow * nf / (s - 1.0));
    sum.add(0.5 * n_pow);
    // term_k = B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let mut rising = s; // s(s+1)…(s+2k−2)
    let mut fact = 2.0; // (2k)!
    let mut npow = n_pow / nf;
    let mut last = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let term = rising * npow * (b / fact);
        if k == BERNOULLI.len() - 1 {
            last = term.norm();
            break;
        }
        sum.add(term);
        let m = 2.0 * (k + 1) as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        fact *= (m + 1.0) * (m + 2.0);
        npow /= nf * nf;
    }
    (sum.value(), last)
}

/// Doubles the cutoff (at most four times) until the remainder is below
/// `rel·|ζ| + abs`.
fn converged(s: Complex64, mut n: usize, rel: f64, abs: f64) -> (Complex64, f64) {
    let (mut value, mut err) = zeta_raw(s, n);
    for _ in 0..4 {
        if err <= rel * value.norm() + abs {
            break;
        }
        n *= 2;
        (value, err) = zeta_raw(s, n);
    }
    (value, err)
}

fn default_cutoff(t: f64, terms: usize) -> usize {
    terms.max((3.0 + t.abs() / 2.0).ceil() as usize)
}

/// `ζ(σ + it)` for `σ ≥ 1/2`, `|t| ≤ 10⁵`. The cutoff starts at
/// `max(terms, 3 + |t|/2)` and doubles (at most four times) until the
/// remainder estimate drops below `10⁻¹²·|ζ|`.
pub fn zeta_euler_maclaurin(sigma: f64, t: f64, terms: usize) -> Result<ZetaValue> {
    if !(sigma >= 0.5 && sigma.is_finite()) || !(t.abs() <= 1e5) || terms < 10 {
        return Err(Error::DomainError(format!("zeta_euler_maclaurin needs sigma ≥ 0.5, |t| ≤ 1e5, terms ≥ 10 (got {sigma}, {t}, {terms})")));
    }
    if sigma == 1.0 && t == 0.0 {
        return Err(Error::DomainError("pole at s = 1".into()));
    }
    let s = Complex64::new(sigma, t);
    let (value, err) = converged(s, default_cutoff(t, terms), 1e-12, 0.0);
    Ok(ZetaValue { sigma, t, value, err_est: err, accuracy_loss: err > 1e-6 * value.norm() })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogZeta {
    pub value: f64,
    pub err_est: f64,
}

/// `log |ζ(σ + it)|`, refusing points where `|ζ| < 10⁻⁸`.
pub fn log_abs_zeta(sigma: f64, t: f64) -> Result<LogZeta> {
    let z = zeta_euler_maclaurin(sigma, t, 10)?;
    let m = z.value.norm();
    if m < 1e-8 {
        return Err(Error::NearZeroSingularity { sigma, t, modulus: m });
    }
    Ok(LogZeta { value: m.ln(), err_est: z.err_est / m })
}

/// `θ(t) = Im log Γ(1/4 + it/2) − (t/2) log π`.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real for real `t`.
pub fn hardy_z(t: f64) -> f64 {
    let (z, _) = converged(Complex64::new(0.5, t), default_cutoff(t, 10), 1e-13, 1e-13);
    (Complex64::from_polar(1.0, riemann_siegel_theta(t)) * z).re
}
