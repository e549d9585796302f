use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Symmetric cutoff used for integrals over the whole line.
    pub truncation_radius: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-11,
            rel_tol: 1e-13,
            max_subdivisions: 200_000,
            truncation_radius: 1e8,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = self.abs_tol > 0.0
            && self.rel_tol >= 0.0
            && self.max_subdivisions >= 1
            && self.truncation_radius > 0.0
            && self.truncation_radius.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("bad quadrature spec {self:?}")))
        }
    }

    pub fn with_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_radius(mut self, r: f64) -> Self {
        self.truncation_radius = r;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quad {
    pub value: f64,
    pub err_est: f64,
    pub intervals: usize,
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut abs = (fc * WGK[7]).abs();
    for j in 0..7 {
        let dx = h * XGK[j];
        let (f1, f2) = (f(c - dx), f(c + dx));
        k += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            g += WG[j / 2] * (f1 + f2);
        }
    }
    let value = k * h;
    let err = ((k - g) * h).abs() + 4.0 * f64::EPSILON * abs * h.abs();
    Panel { a, b, value, err }
}

/// Global adaptive Gauss–Kronrod (7/15) quadrature on `[a, b]`.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Quad> {
    if !(a < b) {
        return Err(Error::DomainError(format!("need a < b, got [{a}, {b}]")));
    }
    adaptive_quad_breaks(f, &[a, b], spec)
}

/// Same as [`adaptive_quad`] but starting from the given partition, which
/// should resolve any oscillation or kink the integrand is known to have.
pub fn adaptive_quad_breaks<F: Fn(f64) -> f64>(f: F, breaks: &[f64], spec: &QuadratureSpec) -> Result<Quad> {
    spec.validate()?;
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::DomainError("breakpoints must be strictly increasing".into()));
    }
    let mut heap: BinaryHeap<Panel> = breaks.windows(2).map(|w| kronrod(&f, w[0], w[1])).collect();
    let mut splits = 0usize;
    loop {
        let (value, err) = totals(&heap);
        if !value.is_finite() {
            return Err(Error::DomainError("integrand produced a non-finite value".into()));
        }
        let tol = spec.abs_tol.max(spec.rel_tol * value.abs());
        if err <= tol {
            return Ok(Quad { value, err_est: err, intervals: heap.len() });
        }
        if splits >= spec.max_subdivisions {
            return Err(Error::SubdivisionLimit { value, err_est: err, subdivisions: splits });
        }
        let worst = heap.pop().expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // cannot split further; keep it and give up cleanly
            heap.push(worst);
            let (value, err) = totals(&heap);
            return Err(Error::SubdivisionLimit { value, err_est: err, subdivisions: splits });
        }
        heap.push(kronrod(&f, worst.a, mid));
        heap.push(kronrod(&f, mid, worst.b));
        splits += 1;
    }
}

fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    let mut v = super::CompensatedSum::new();
    let mut e = 0.0;
    for p in heap.iter() {
        v.add(p.value);
        e += p.err;
    }
    (v.value(), e)
}

/// Breakpoints `0, ±s, ±2s, ±4s, …` out to `±r` (`r` included).
pub fn geometric_breaks(s: f64, r: f64) -> Vec<f64> {
    let mut pos = vec![];
    let mut x = s;
    while x < r {
        pos.push(x);
        x *= 2.0;
    }
    pos.push(r);
    let mut out: Vec<f64> = pos.iter().rev().map(|v| -v).collect();
    out.push(0.0);
    out.extend(pos);
    out
}

/// `n` equal panels on `[a, b]`.
pub fn uniform_breaks(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(1);
    (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}

/// `∫_ℝ f` for an integrand with `|f(x)| ≤ decay/x²` beyond the truncation
/// radius `R`: quadrature on `[−R, R]` plus the tail bound `2·decay/R`.
pub fn integrate_real_line<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec, decay: f64) -> Result<Quad> {
    spec.validate()?;
    let r = spec.truncation_radius;
    let breaks = geometric_breaks(1.0_f64.min(r / 2.0), r);
    let mut q = adaptive_quad_breaks(f, &breaks, spec)?;
    q.err_est += 2.0 * decay.abs() / r;
    Ok(q)
}
