use num_complex::Complex64;
use std::f64::consts::PI;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// B_2, B_4, ..., B_16
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const SHIFT: f64 = 12.0;

fn needs_shift(s: Complex64) -> bool {
    s.re + s.im.abs() <= SHIFT
}

/// ψ(s) for `Re s > 0`: upward recurrence, then the Stirling series.
pub fn digamma(mut s: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    while needs_shift(s) {
        acc -= s.inv();
        s += 1.0;
    }
    let inv = s.inv();
    let inv2 = inv * inv;
    let mut pow = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI.iter().enumerate() {
        series += pow * (b / (2.0 * (k + 1) as f64));
        pow *= inv2;
    }
    acc + s.ln() - 0.5 * inv - series
}

/// `Re ψ(1/4 + iu/2)`, the archimedean weight of the explicit formula.
pub fn digamma_re_quarter(u: f64) -> f64 {
    digamma(Complex64::new(0.25, 0.5 * u.abs())).re
}

/// Principal branch of log Γ(s) for `Re s > 0`.
pub fn ln_gamma(mut s: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    while needs_shift(s) {
        acc -= s.ln();
        s += 1.0;
    }
    let inv = s.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI.iter().enumerate() {
        let n = 2.0 * (k + 1) as f64;
        series += pow * (b / (n * (n - 1.0)));
        pow *= inv2;
    }
    acc + (s - 0.5) * s.ln() - s + 0.5 * (2.0 * PI).ln() + series
}
