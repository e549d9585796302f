use super::ExtremalParams;
use crate::analysis::{f_alpha, f_alpha_deriv, CompensatedSum, ComplexSum};
use crate::error::Result;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Truncation policy for the interpolation and Fourier series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesTruncation {
    /// Interpolation nodes `|n| ≤ N` on each side.
    pub node_count: usize,
    /// Length of the Fourier k-series.
    pub k_terms: usize,
    /// Certified remainder of the most recent evaluation.
    pub tail_bound: f64,
}

/// Extra nodes kept beyond the evaluation point.
pub const EXTRA_NODES: usize = 40;

impl SeriesTruncation {
    /// Default: `N = ⌈Δ|Re z|⌉ + 40`.
    pub fn for_point(params: &ExtremalParams, z: Complex64) -> Self {
        Self {
            node_count: default_nodes(params.delta * z.re),
            k_terms: super::fourier::default_k_terms(params),
            tail_bound: 0.0,
        }
    }

    pub fn with_nodes(node_count: usize) -> Self {
        Self { node_count: node_count.max(1), k_terms: 1, tail_bound: 0.0 }
    }
}

fn default_nodes(big_x: f64) -> usize {
    big_x.abs().ceil() as usize + EXTRA_NODES
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub tail_bound: f64,
}

/// Evaluator with cached node values. Create once per parameter set for
/// bulk evaluation.
#[derive(Debug, Clone)]
pub struct ExtremalFunction {
    params: ExtremalParams,
    offset: f64,
    // F(ν_j) and F'(ν_j) in the scaled variable, ν_j = j + offset
    node_f: Vec<f64>,
    node_d: Vec<f64>,
}

const CACHE_NODES: usize = 1 << 13;
const NEAR_NODE: f64 = 1e-7;

impl ExtremalFunction {
    pub fn new(params: ExtremalParams) -> Self {
        Self::with_cache(params, CACHE_NODES)
    }

    pub fn with_cache(params: ExtremalParams, nodes: usize) -> Self {
        let offset = params.kind.lattice_offset();
        let mut node_f = Vec::with_capacity(nodes);
        let mut node_d = Vec::with_capacity(nodes);
        for j in 0..nodes {
            let (f, d) = raw_node(&params, j as f64 + offset);
            node_f.push(f);
            node_d.push(d);
        }
        Self { params, offset, node_f, node_d }
    }

    pub fn params(&self) -> &ExtremalParams {
        &self.params
    }

    #[inline]
    fn node(&self, j: usize) -> (f64, f64) {
        if j < self.node_f.len() {
            (self.node_f[j], self.node_d[j])
        } else {
            raw_node(&self.params, j as f64 + self.offset)
        }
    }

    /// `g_Δ(x)` or `m_Δ(x)` at real `x` with the default truncation.
    pub fn eval(&self, x: f64) -> Evaluation {
        let big_x = self.params.delta * x;
        self.eval_scaled(big_x, default_nodes(big_x))
    }

    pub fn eval_with_nodes(&self, x: f64, nodes: usize) -> Evaluation {
        self.eval_scaled(self.params.delta * x, nodes)
    }

    /// Evaluation in the scaled variable `X = Δx`.
    pub fn eval_scaled(&self, big_x: f64, nodes: usize) -> Evaluation {
        let (_, r) = self.nearest(big_x);
        let w = (PI * r).sin().powi(2) / (PI * PI);
        let mut sum = CompensatedSum::new();
        let mut abs = 0.0;
        let mut direct = 0.0;
        let mut push = |u: f64, f: f64, d: f64, sum: &mut CompensatedSum| {
            if u.abs() < NEAR_NODE {
                direct += sinc2(u) * (f + d * u);
            } else {
                let v = (f / u + d) / u;
                sum.add(v);
                abs += v.abs();
            }
        };
        let jmax = self.last_index(nodes);
        for j in 0..=jmax {
            let (f, d) = self.node(j);
            let nu = j as f64 + self.offset;
            push(big_x - nu, f, d, &mut sum);
            if nu != 0.0 {
                push(big_x + nu, f, -d, &mut sum);
            }
        }
        let s = jmax as f64 + self.offset + 0.5;
        let (fs, ds, dds) = self.edge(s);
        let rhs = |x: f64| {
            let u = x - s;
            -fs / u + (dds / u + 2.0 * ds / (u * u) + 2.0 * fs / (u * u * u)) / 24.0
        };
        sum.add(rhs(big_x) + rhs(-big_x));
        let tail = w * (self.tail_side(big_x, s) + self.tail_side(-big_x, s));
        let value = w * sum.value() + direct;
        let round = 8.0 * f64::EPSILON * (w * abs + direct.abs());
        Evaluation { value, tail_bound: tail + round }
    }

    /// Complex evaluation through the same interpolation series.
    pub fn eval_complex(&self, z: Complex64, nodes: usize) -> (Complex64, f64) {
        let big_z = z * self.params.delta;
        let (nearest, _) = self.nearest(big_z.re);
        let r = big_z - nearest;
        let w = (r * PI).sin().powi(2) / (PI * PI);
        let mut sum = ComplexSum::new();
        let mut abs = 0.0;
        let mut direct = Complex64::new(0.0, 0.0);
        let mut push = |u: Complex64, f: f64, d: f64, sum: &mut ComplexSum| {
            if u.norm() < NEAR_NODE {
                let s2 = 1.0 - (PI * PI / 3.0) * u * u;
                direct += s2 * (f + d * u);
            } else {
                let v = (f / u + d) / u;
                sum.add(v);
                abs += v.norm();
            }
        };
        let jmax = self.last_index(nodes);
        for j in 0..=jmax {
            let (f, d) = self.node(j);
            let nu = j as f64 + self.offset;
            push(big_z - nu, f, d, &mut sum);
            if nu != 0.0 {
                push(big_z + nu, f, -d, &mut sum);
            }
        }
        let s = jmax as f64 + self.offset + 0.5;
        let (fs, ds, dds) = self.edge(s);
        let rhs = |x: Complex64| {
            let u = x - s;
            -fs / u + (dds / u + 2.0 * ds / (u * u) + 2.0 * fs / (u * u * u)) / 24.0
        };
        sum.add(rhs(big_z) + rhs(-big_z));
        // |sin²(π r)| ≤ cosh²(π Im r)
        let wbound = (PI * r.im).cosh().powi(2) / (PI * PI);
        let tail = wbound * (self.tail_side(big_z.re, s) + self.tail_side(-big_z.re, s));
        let value = w * sum.value() + direct;
        let round = 8.0 * f64::EPSILON * (w.norm() * abs + direct.norm());
        (value, tail + round)
    }

    /// Node of the lattice closest to `big_x`, and the offset from it.
    fn nearest(&self, big_x: f64) -> (f64, f64) {
        let n = (big_x - self.offset).round() + self.offset;
        (n, big_x - n)
    }

    fn last_index(&self, nodes: usize) -> usize {
        // nodes |ν| ≤ N + offset
        nodes.max(1)
    }

    /// `F`, `F′`, `F″` at a point of the scaled axis.
    fn edge(&self, nu: f64) -> (f64, f64, f64) {
        let (a2, b2) = (self.params.a * self.params.a, self.params.b * self.params.b);
        let n2 = nu * nu;
        let f = ((b2 - a2) / (n2 + a2)).ln_1p();
        let d = 2.0 * nu * (a2 - b2) / ((n2 + b2) * (n2 + a2));
        let dd = 2.0 * (b2 - n2) / (n2 + b2).powi(2) - 2.0 * (a2 - n2) / (n2 + a2).powi(2);
        (f, d, dd)
    }

    /// Remainder of the corrected midpoint sum for the tail `ν > s` at the
    /// point `x < s`. Each series term is `φ′(ν)` with `φ(ν) = F(ν)/(x − ν)`,
    /// so the tail is `−φ(s) + φ″(s)/24` up to `(1/384)∫_s^∞ |φ⁽⁵⁾|`.
    /// `|F| ≤ (b² − a²)/ν²` and `|F⁽ʲ⁾| ≤ 2·j!·(b − a)/ν^{j+1}` bound the
    /// Leibniz expansion term by term.
    fn tail_side(&self, x: f64, s: f64) -> f64 {
        let d = s - x;
        if d <= 0.0 {
            return f64::INFINITY;
        }
        let (a, b) = (self.params.a, self.params.b);
        let mut total = 120.0 * (b * b - a * a) * d.powi(-6) / s;
        for (p, q) in [(2, 5), (3, 4), (4, 3), (5, 2), (6, 1)] {
            total += 240.0 * (b - a) * d.powi(-q) * s.powi(1 - p) / (p - 1) as f64;
        }
        total / 384.0
    }
}

/// `F(ν)` and `F′(ν)` in the scaled variable.
fn raw_node(p: &ExtremalParams, nu: f64) -> (f64, f64) {
    let x = nu / p.delta;
    (f_alpha(x, p.alpha), f_alpha_deriv(x, p.alpha) / p.delta)
}

#[inline]
fn sinc2(u: f64) -> f64 {
    let pu = PI * u;
    1.0 - pu * pu / 3.0
}

/// One-shot evaluation of `g_Δ(z)` / `m_Δ(z)`; see [`ExtremalFunction`] for
/// repeated use.
pub fn eval_extremal(params: &ExtremalParams, z: Complex64, trunc: SeriesTruncation) -> Result<(Complex64, f64)> {
    let need = (params.delta * z.re).abs().ceil() as usize + 1;
    let nodes = trunc.node_count.max(need);
    let cache = nodes.min(CACHE_NODES) + 1;
    let ev = ExtremalFunction::with_cache(*params, cache);
    if z.im == 0.0 {
        let e = ev.eval_scaled(params.delta * z.re, nodes);
        return Ok((Complex64::new(e.value, 0.0), e.tail_bound));
    }
    Ok(ev.eval_complex(z, nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::Kind;
    use crate::analysis::AlphaParam;
    use proptest::prelude::*;

    fn params(alpha: f64, delta: f64, kind: Kind) -> ExtremalParams {
        ExtremalParams::from_raw(alpha, delta, kind).unwrap()
    }

    fn real(p: &ExtremalParams, x: f64) -> (f64, f64) {
        let (v, t) = eval_extremal(p, Complex64::new(x, 0.0), SeriesTruncation::for_point(p, Complex64::new(x, 0.0))).unwrap();
        (v.re, t)
    }

    #[test]
    fn node_values() {
        let p = params(1.0, 1.0, Kind::Minorant);
        let (v, t) = real(&p, 0.5);
        assert!((v - 8.5f64.ln()).abs() <= t + 1e-14, "{v}");
        assert!((8.5f64.ln() - 2.140_066_163_496_27).abs() < 1e-12);
        let p = params(1.0, 1.0, Kind::Majorant);
        let (v, t) = real(&p, 0.0);
        assert!((v - 16f64.ln()).abs() <= t + 1e-14);
    }

    #[test]
    fn strict_minorant_off_node() {
        let p = params(0.75, 1.0, Kind::Minorant);
        let (v, t) = real(&p, 0.25);
        let f = f_alpha(0.25, AlphaParam::new(0.75).unwrap());
        assert!((f - 32.5f64.ln()).abs() < 1e-14);
        assert!(v + t < f, "{v} {f}");
        // high-node oracle
        let hi = ExtremalFunction::new(p).eval_with_nodes(0.25, 4000);
        assert!((hi.value - v).abs() <= t + hi.tail_bound);
    }

    #[test]
    fn tail_correction_is_certified() {
        // compare the default truncation against a much longer series
        for &(al, d) in &[(0.6, 0.5), (1.0, 1.0), (0.75, 2.0)] {
            for kind in Kind::BOTH {
                let ev = ExtremalFunction::new(params(al, d, kind));
                for &x in &[0.0, 0.33, 3.7, -12.2, 49.9] {
                    let lo = ev.eval(x);
                    let hi = ev.eval_with_nodes(x, 6000);
                    assert!((lo.value - hi.value).abs() <= lo.tail_bound + hi.tail_bound, "{al} {d} {kind} {x}: {lo:?} {hi:?}");
                    assert!(lo.tail_bound < 1e-9, "{lo:?}");
                }
            }
        }
    }

    #[test]
    fn near_node_branch_is_continuous() {
        let p = params(0.6, 1.0, Kind::Minorant);
        let ev = ExtremalFunction::new(p);
        let at = ev.eval_scaled(2.5, 60).value;
        let slope = f_alpha_deriv(2.5, p.alpha);
        for &h in &[1e-9, 5e-8, 2e-7, 1e-6] {
            let v = ev.eval_scaled(2.5 + h, 60).value;
            assert!((v - at - slope * h).abs() < 10.0 * h * h + 1e-13, "h={h}: {v} vs {at}");
        }
    }

    #[test]
    fn complex_matches_real_axis() {
        let p = params(0.75, 1.0, Kind::Majorant);
        let ev = ExtremalFunction::new(p);
        for &x in &[0.1, 1.3, -7.9] {
            let r = ev.eval(x).value;
            let (c, _) = ev.eval_complex(Complex64::new(x, 0.0), default_nodes(x));
            assert!((c.re - r).abs() < 1e-13 && c.im.abs() < 1e-15);
        }
    }

    #[test]
    fn pole_points_are_conjugate() {
        let ev = ExtremalFunction::new(params(0.6, 0.5, Kind::Minorant));
        for &t in &[50.0, 100.0, 500.0] {
            let n = default_nodes(0.5 * t);
            let (u, _) = ev.eval_complex(Complex64::new(t, 0.5), n);
            let (l, _) = ev.eval_complex(Complex64::new(t, -0.5), n);
            assert!((u + l).im.abs() < 1e-12, "{u} {l}");
        }
    }

    #[test]
    fn exponential_type() {
        for &d in &[0.5, 1.0, 2.0] {
            for kind in Kind::BOTH {
                let p = params(0.75, d, kind);
                let ev = ExtremalFunction::new(p);
                for &yy in &[5.0, 10.0, 20.0] {
                    let y = yy / d;
                    let (v, _) = ev.eval_complex(Complex64::new(0.0, y), EXTRA_NODES);
                    let growth = v.norm().ln() / (2.0 * PI * y);
                    assert!(growth <= d * 1.05, "{d} {kind} {y}: {growth}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn even_in_x(x in -60.0f64..60.0, al in 0.55f64..=1.0, d in 0.3f64..3.0, maj in any::<bool>()) {
            let kind = if maj { Kind::Majorant } else { Kind::Minorant };
            let ev = ExtremalFunction::new(params(al, d, kind));
            let (p, m) = (ev.eval(x), ev.eval(-x));
            prop_assert!((p.value - m.value).abs() <= 1e-12 * p.value.abs().max(1.0));
        }

        #[test]
        fn sandwich_random(x in -80.0f64..80.0, al in 0.55f64..=1.0, d in 0.3f64..3.0) {
            let a = AlphaParam::new(al).unwrap();
            let g = ExtremalFunction::new(params(al, d, Kind::Minorant)).eval(x);
            let m = ExtremalFunction::new(params(al, d, Kind::Majorant)).eval(x);
            let f = f_alpha(x, a);
            prop_assert!(g.value <= f + g.tail_bound + 1e-15 * f);
            prop_assert!(m.value >= f - m.tail_bound - 1e-15 * f);
        }
    }
}
