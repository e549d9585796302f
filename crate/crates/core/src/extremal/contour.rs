use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

fn phase(w: f64) -> Complex64 {
    Complex64::from_polar(1.0, -PI * w)
}

fn check(a: f64, b: f64) -> Result<()> {
    if a > 0.0 && b > 0.0 && a <= b && a.is_finite() && b.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError(format!("need 0 < a ≤ b, got a={a}, b={b}")))
    }
}

/// Fourier transform of `x ↦ log(((x+1/2)² + b²)/((x+1/2)² + a²))`.
pub fn contour_k(w: f64, a: f64, b: f64) -> Result<Complex64> {
    check(a, b)?;
    if w == 0.0 {
        return Ok(Complex64::new(2.0 * PI * (b - a), 0.0));
    }
    let v = w.abs();
    // e^{-2πva} - e^{-2πvb}, kept accurate when a ≈ b
    let gap = -(-2.0 * PI * v * a).exp() * (-2.0 * PI * v * (b - a)).exp_m1();
    Ok(phase(w) * (gap / v))
}

/// Fourier transform of `x ↦ (x+1/2)/((x+1/2)² + a²) − (x+1/2)/((x+1/2)² + b²)`.
pub fn contour_h(w: f64, a: f64, b: f64) -> Result<Complex64> {
    check(a, b)?;
    if w == 0.0 {
        return Err(Error::DomainError("contour_h is not defined at w = 0".into()));
    }
    let v = w.abs();
    let gap = -(-2.0 * PI * v * a).exp() * (-2.0 * PI * v * (b - a)).exp_m1();
    let i_pi = Complex64::new(0.0, PI * w.signum());
    Ok(i_pi * phase(w) * gap)
}

/// `Σ_{n≥0} ε_n E(y+n)/(y+n) − Σ_{n≥1} ε_n E(n−y)/(y−n)` with
/// `E(v) = e^{−2πva} − e^{−2πvb}` and `ε_n = (−1)^n` when `alternating`
/// (else 1). For `0 < y < 1` the alternating bracket is
/// `e^{πiy} Σ_n k(y+n)`, the periodization behind the half-integer lattice.
pub fn poisson_bracket(y: f64, a: f64, b: f64, terms: usize, alternating: bool) -> f64 {
    let e = |v: f64| (-2.0 * PI * v * a).exp() - (-2.0 * PI * v * b).exp();
    let mut s = crate::analysis::CompensatedSum::new();
    for n in 0..terms {
        let sign = if alternating && n % 2 == 1 { -1.0 } else { 1.0 };
        let nf = n as f64;
        s.add(sign * e(y + nf) / (y + nf));
        if n >= 1 {
            s.add(-sign * e(nf - y) / (y - nf));
        }
    }
    s.value()
}
