use super::{ExtremalFunction, ExtremalParams, Kind};
use crate::analysis::{adaptive_quad_breaks, f_alpha, f_alpha_hat, f_alpha_integral, uniform_breaks, CompensatedSum, Quad, QuadratureSpec};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const K_MAX: usize = 1_000_000;
const SERIES_TOL: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FtSeries {
    pub value: f64,
    pub tail_bound: f64,
    pub k_terms: usize,
    /// Set when the geometric ratio is so close to 1 that the series was cut
    /// at the hard cap; `tail_bound` is then the honest (large) remainder.
    pub slow_convergence: bool,
}

/// Every term with index `k ≥ 1` is at most `(3/Δ)·r^k`, `r = e^{−(2α−1)πΔ}`.
fn tail_after(p: &ExtremalParams, k: usize) -> f64 {
    let r = p.ratio();
    3.0 / p.delta * r.powi(k as i32) / (-(-2.0 * PI * p.a).exp_m1())
}

pub(crate) fn default_k_terms(p: &ExtremalParams) -> usize {
    let r = p.ratio();
    let one_minus_r = -(-2.0 * PI * p.a).exp_m1();
    let need = (SERIES_TOL * p.delta * one_minus_r / 3.0).ln() / r.ln();
    if !need.is_finite() || need > K_MAX as f64 {
        K_MAX
    } else {
        (need.ceil() as usize).max(1)
    }
}

/// `ĝ_Δ(ξ)` (minorant, alternating series) or `m̂_Δ(ξ)` (majorant).
pub fn ft_series(p: &ExtremalParams, xi: f64) -> FtSeries {
    let k = default_k_terms(p);
    let slow = k >= K_MAX;
    let mut out = ft_series_with(p, xi, k);
    out.slow_convergence = slow;
    out
}

/// The k-series cut after `k_terms` terms.
pub fn ft_series_with(p: &ExtremalParams, xi: f64, k_terms: usize) -> FtSeries {
    let y = xi.abs();
    if y > p.delta {
        return FtSeries { value: 0.0, tail_bound: 0.0, k_terms: 0, slow_convergence: false };
    }
    let k_terms = k_terms.max(1);
    let d = p.delta;
    let mut sum = CompensatedSum::new();
    for k in 0..k_terms {
        let kf = k as f64;
        let term = (kf + 1.0) * (f_alpha_hat(y + kf * d, p.alpha) - f_alpha_hat((kf + 2.0) * d - y, p.alpha));
        let signed = match p.kind {
            Kind::Minorant if k % 2 == 1 => -term,
            _ => term,
        };
        sum.add(signed);
    }
    FtSeries { value: sum.value(), tail_bound: tail_after(p, k_terms), k_terms, slow_convergence: false }
}

/// `2π(5/2 − α) − (2/Δ)·log((1 ± e^{−(2α−1)πΔ})/(1 ± e^{−4πΔ}))`.
pub fn ft_at_zero(p: &ExtremalParams) -> f64 {
    let base = f_alpha_integral(p.alpha);
    match p.kind {
        Kind::Minorant => base - l1_distance(p),
        Kind::Majorant => base + l1_distance(p),
    }
}

/// Closed-form L¹ distance between the extremal function and `f_α`.
pub fn l1_distance(p: &ExtremalParams) -> f64 {
    let e1 = (-2.0 * PI * p.a).exp();
    let e2 = (-4.0 * PI * p.delta).exp();
    let d = p.delta;
    match p.kind {
        Kind::Minorant => 2.0 / d * (e1.ln_1p() - e2.ln_1p()),
        Kind::Majorant => 2.0 / d * ((-e2).ln_1p() - (-e1).ln_1p()),
    }
}

/// Default quadrature settings for integrals of the extremal functions:
/// truncation at `1000/Δ`.
pub fn default_ft_spec(delta: f64) -> QuadratureSpec {
    QuadratureSpec { abs_tol: 1e-12, rel_tol: 1e-13, max_subdivisions: 200_000, truncation_radius: 1000.0 / delta }
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
const WG: [f64; 8] = [0.0, 0.129_484_966_168_869_7, 0.0, 0.279_705_391_489_276_7, 0.0, 0.381_830_050_505_118_9, 0.0, 0.417_959_183_673_469_4];

const MAX_PANELS: usize = 400_000;

/// Numerical Fourier transforms and L¹ distance by quadrature, independent of
/// the k-series. The extremal function is sampled once on a composite
/// Gauss–Kronrod grid over `[0, R]` (panels of half a period); `f_α` is
/// integrated adaptively, and beyond `R` the gap `|f − g|` is handled through
/// its `P(Δx)/x²` decay with `P` measured on the last period.
#[derive(Debug, Clone)]
pub struct FtQuadrature {
    params: ExtremalParams,
    spec: QuadratureSpec,
    radius: f64,
    h: f64,
    // per panel, 15 abscissae and values
    xs: Vec<[f64; 15]>,
    gs: Vec<[f64; 15]>,
    tail_mean: f64,
    tail_drift: f64,
}

impl FtQuadrature {
    pub fn new(params: ExtremalParams, spec: &QuadratureSpec) -> Result<Self> {
        spec.validate()?;
        let h = 0.5 / params.delta;
        let mut panels = (spec.truncation_radius / h).ceil() as usize;
        panels += panels % 2;
        if panels > MAX_PANELS {
            return Err(Error::InvalidParams(format!("truncation radius {} needs {panels} panels", spec.truncation_radius)));
        }
        let panels = panels.max(4);
        let radius = panels as f64 * h;
        let ev = ExtremalFunction::with_cache(params, (params.delta * radius) as usize + 64);
        let mut xs = Vec::with_capacity(panels);
        let mut gs = Vec::with_capacity(panels);
        for i in 0..panels {
            let c = (i as f64 + 0.5) * h;
            let mut px = [0.0; 15];
            let mut pg = [0.0; 15];
            for j in 0..15 {
                let off = if j < 8 { -XGK[j] } else { XGK[14 - j] };
                px[j] = c + 0.5 * h * off;
                pg[j] = ev.eval(px[j]).value;
            }
            xs.push(px);
            gs.push(pg);
        }
        let period = 2.0 * h;
        let mean_at = |end: f64| -> f64 {
            let m = 64;
            let mut s = 0.0;
            for i in 0..m {
                let x = end - period * (i as f64 + 0.5) / m as f64;
                let gap = f_alpha(x, params.alpha) - ev.eval(x).value;
                s += gap.abs() * x * x;
            }
            s / m as f64
        };
        let tail_mean = mean_at(radius);
        let half = (panels / 2) as f64 * h;
        let tail_drift = (tail_mean - mean_at(half)).abs();
        Ok(Self { params, spec: *spec, radius, h, xs, gs, tail_mean, tail_drift })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `∫_{|x|>R} |f − g|`, estimated from the decay profile.
    pub fn tail_mass(&self) -> f64 {
        2.0 * (self.tail_mean + self.tail_drift) / self.radius * (1.0 + 2.0 * self.h / self.radius)
    }

    /// `∫_{−R}^{R} g(x) cos(2πξx) dx` with its embedded error estimate.
    fn grid_cos(&self, xi: f64) -> (f64, f64) {
        let mut total = CompensatedSum::new();
        let mut err = 0.0;
        for (px, pg) in self.xs.iter().zip(&self.gs) {
            let (mut k, mut g) = (0.0, 0.0);
            for j in 0..15 {
                let idx = if j < 8 { j } else { 14 - j };
                let v = pg[j] * (2.0 * PI * xi * px[j]).cos();
                k += WGK[idx] * v;
                g += WG[idx] * v;
            }
            let k = 0.5 * self.h * k;
            let g = 0.5 * self.h * g;
            total.add(k);
            err += (k - g).abs() + 4.0 * f64::EPSILON * k.abs();
        }
        (2.0 * total.value(), 2.0 * err)
    }

    fn f_cos(&self, xi: f64) -> Result<Quad> {
        let panels = ((self.radius / self.h) as usize).max(1);
        let breaks = uniform_breaks(0.0, self.radius, panels);
        let a = self.params.alpha;
        let q = adaptive_quad_breaks(|x| f_alpha(x, a) * (2.0 * PI * xi * x).cos(), &breaks, &self.spec)?;
        Ok(Quad { value: 2.0 * q.value, err_est: 2.0 * q.err_est, intervals: q.intervals })
    }

    /// `∫ g(x) e^{−2πixξ} dx` as `∫_{−R}^{R} g cos + ∫_{|x|>R} f cos` with
    /// the gap beyond `R` charged to the error.
    pub fn transform(&self, xi: f64) -> Result<Quad> {
        let (gq, gerr) = self.grid_cos(xi);
        let fq = self.f_cos(xi)?;
        let f_tail = f_alpha_hat(xi, self.params.alpha) - fq.value;
        Ok(Quad { value: gq + f_tail, err_est: gerr + fq.err_est + self.tail_mass(), intervals: self.xs.len() + fq.intervals })
    }

    /// `∫ |f − g|` by quadrature plus the extrapolated tail `2·P̄/R`.
    pub fn l1(&self) -> Result<Quad> {
        let (gq, gerr) = self.grid_cos(0.0);
        let fq = self.f_cos(0.0)?;
        let inner = match self.params.kind {
            Kind::Minorant => fq.value - gq,
            Kind::Majorant => gq - fq.value,
        };
        let tail = 2.0 * self.tail_mean / self.radius;
        let tail_err = 2.0 * (self.tail_drift + self.tail_mean * 2.0 * self.h / self.radius) / self.radius;
        Ok(Quad { value: inner + tail, err_est: gerr + fq.err_est + tail_err, intervals: self.xs.len() + fq.intervals })
    }
}

/// `∫ g_Δ(x) e^{−2πixξ} dx` by quadrature (see [`FtQuadrature`]).
pub fn ft_numeric(p: &ExtremalParams, xi: f64, spec: &QuadratureSpec) -> Result<Quad> {
    FtQuadrature::new(*p, spec)?.transform(xi)
}
