//! Both sides of the explicit formula for the test function
//! `h(z) = g_Δ(t − z)` (or `m_Δ(t − z)`):
//!
//! ```text
//! Σ_γ h(γ) = h(i/2) + h(−i/2) − (1/2π) ĥ(0) log π
//!          + (1/2π) ∫ h(u) Re ψ(1/4 + iu/2) du
//!          − (1/2π) Σ_n Λ(n)/√n · (ĥ(log n/2π) + ĥ(−log n/2π))
//! ```

use crate::analysis::{
    adaptive_quad_breaks, digamma_re_quarter, f_alpha, geometric_breaks, uniform_breaks, CompensatedSum, QuadratureSpec,
};
use crate::arith::{riemann_von_mangoldt, zero_count_tolerance, VonMangoldtTable, ZeroTable};
use crate::error::{Error, Result};
use crate::extremal::{ft_at_zero, ft_series, ExtremalFunction, ExtremalParams, Kind};
use crate::report::Valued;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

/// Sampled `sup x²|f_α(x) − g_Δ(x)|`, inflated by 25%.
///
/// `x²|f − g|` rises towards a periodic limit profile in `Δx`, so the sup
/// is read off two periods at `Δx ≈ 10⁴`.
pub fn gap_envelope(ev: &ExtremalFunction) -> f64 {
    let p = ev.params();
    let mut sup: f64 = 0.0;
    for i in 0..=128 {
        let x = (1e4 + i as f64 / 64.0) / p.delta;
        let gap = f_alpha(x, p.alpha) - ev.eval(x).value;
        sup = sup.max(gap.abs() * x * x);
    }
    1.25 * sup
}

/// Constant `E` with `|g_Δ(x)| ≤ E/x²`: `f_α ≤ (4 − c²)/x²` plus the gap.
pub fn decay_envelope(ev: &ExtremalFunction) -> f64 {
    let c = ev.params().alpha.c();
    4.0 - c * c + gap_envelope(ev)
}

/// Bound for `Σ_{γ > T} [φ(γ − t) + φ(γ + t)]` when `|φ(x)| ≤ e/x²`, a table
/// holding `count` zeros below `T`, and `|N(u) − N₀(u)| ≤ 2 + 0.2 log u`
/// above `T` (`N₀` the Riemann–von Mangoldt main term).
///
/// Stieltjes integration by parts against `N(u)`.
pub fn zero_tail_bound(e: f64, t: f64, coverage: f64, count: usize) -> f64 {
    let big_t = coverage;
    debug_assert!(big_t > t && t >= 0.0);
    let phi = e * ((big_t - t).powi(-2) + (big_t + t).powi(-2));
    let excess = (riemann_von_mangoldt(big_t) + zero_count_tolerance(big_t) - count as f64).max(0.0);
    let lt = (big_t / (2.0 * PI)).ln();
    // ∫_T^∞ log(u/2π)/(u ∓ t)² du
    let (minus, plus) = if t > 0.0 {
        (
            lt / (big_t - t) + (big_t / (big_t - t)).ln() / t,
            lt / (big_t + t) + ((big_t + t) / big_t).ln() / t,
        )
    } else {
        ((lt + 1.0) / big_t, (lt + 1.0) / big_t)
    };
    let density = e / (2.0 * PI) * (minus + plus);
    let drift = e * 0.2 / big_t * (1.0 / (big_t - t) + 1.0 / (big_t + t));
    excess * phi + density + drift
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroSide {
    pub sum: f64,
    /// Bound on the omitted zeros above the coverage height.
    pub tail: f64,
    /// Accumulated interpolation-series truncation.
    pub truncation: f64,
    pub zeros_used: usize,
}

fn check_t(t: f64) -> Result<()> {
    if !(t >= 20.0 && t.is_finite()) {
        return Err(Error::InvalidParams(format!("t must be ≥ 20, got {t}")));
    }
    Ok(())
}

/// `Σ_γ h(γ) = Σ_{γ>0} [g(t − γ) + g(t + γ)]` over a table with coverage
/// at least `2t`.
pub fn zero_side(params: &ExtremalParams, t: f64, zeros: &ZeroTable) -> Result<ZeroSide> {
    zero_side_with(&ExtremalFunction::new(*params), t, zeros)
}

pub fn zero_side_with(ev: &ExtremalFunction, t: f64, zeros: &ZeroTable) -> Result<ZeroSide> {
    check_t(t)?;
    zeros.require(2.0 * t)?;
    let mut sum = CompensatedSum::new();
    let mut trunc = 0.0;
    for &g in &zeros.ordinates {
        let a = ev.eval(t - g);
        let b = ev.eval(t + g);
        sum.add(a.value);
        sum.add(b.value);
        trunc += a.tail_bound + b.tail_bound;
    }
    let tail = zero_tail_bound(decay_envelope(ev), t, zeros.coverage_height, zeros.ordinates.len());
    Ok(ZeroSide { sum: sum.value(), tail, truncation: trunc, zeros_used: zeros.ordinates.len() })
}

/// `h(i/2) + h(−i/2) = g(t + i/2) + g(t − i/2)`; returns the complex sum so
/// callers can confirm the imaginary parts cancel.
pub fn pole_terms(ev: &ExtremalFunction, t: f64) -> (Complex64, f64) {
    let nodes = (ev.params().delta * t).abs().ceil() as usize + 40;
    let (u, eu) = ev.eval_complex(Complex64::new(t, 0.5), nodes);
    let (v, ev_) = ev.eval_complex(Complex64::new(t, -0.5), nodes);
    (u + v, eu + ev_)
}

/// `−(1/2π) ĝ(0) log π`.
pub fn log_pi_term(params: &ExtremalParams) -> f64 {
    -ft_at_zero(params) * PI.ln() / (2.0 * PI)
}

/// Inner radius of the archimedean integral.
pub fn archimedean_radius(t: f64) -> f64 {
    let split = 4.0 * t.sqrt() * t.ln().max(1.0);
    split.max(t + 100.0).max(1000.0)
}

/// `(1/2π) ∫ g(x) Re ψ(1/4 + i(t − x)/2) dx`.
///
/// `g` is integrated on `[−R, R]`; outside, `f_α` replaces `g` (quadrature
/// out to `spec.truncation_radius`, then the `4/x²` tail) and the swap is
/// charged `gap_envelope·∫_{|x|>R} |ψ|/x²`.
pub fn archimedean_term(params: &ExtremalParams, t: f64, spec: &QuadratureSpec) -> Result<Valued> {
    archimedean_with(&ExtremalFunction::new(*params), t, spec)
}

pub fn archimedean_with(ev: &ExtremalFunction, t: f64, spec: &QuadratureSpec) -> Result<Valued> {
    check_t(t)?;
    spec.validate()?;
    let p = *ev.params();
    let r = archimedean_radius(t);
    let outer = spec.truncation_radius.max(4.0 * r);
    let psi = |x: f64| digamma_re_quarter(t - x);
    let panels = (4.0 * r * p.delta).ceil() as usize;
    let inner_spec = QuadratureSpec { abs_tol: spec.abs_tol.max(1e-10), ..*spec };
    let inner = adaptive_quad_breaks(|x| ev.eval(x).value * psi(x), &uniform_breaks(-r, r, panels), &inner_spec)?;

    let far = |sign: f64| {
        let mut breaks: Vec<f64> = geometric_breaks(r, outer).into_iter().filter(|&b| b >= r).collect();
        breaks.dedup();
        adaptive_quad_breaks(|x| f_alpha(x, p.alpha) * psi(sign * x), &breaks, spec)
    };
    let right = far(1.0)?;
    let left = far(-1.0)?;
    let ln_edge = |x: f64| (x + t + 2.0).ln() + 1.0;
    // |ψ(u)| ≤ log(|u| + 2) for |u| ≥ 100
    let f_tail = 2.0 * 4.0 * ln_edge(outer) / outer;
    let swap = gap_envelope(ev) * 2.0 * ln_edge(r) / r;
    // the series truncation of each sample is far below the quadrature tolerance
    let value = (inner.value + right.value + left.value) / (2.0 * PI);
    let err = (inner.err_est + right.err_est + left.err_est + f_tail + swap) / (2.0 * PI);
    Ok(Valued::new(value, err))
}

/// `log n ≤ 2πΔ` cutoff: the largest `n` with a nonzero `ĝ(log n / 2π)`.
pub fn prime_cutoff(delta: f64) -> u64 {
    (2.0 * PI * delta).exp().floor() as u64
}

/// `−(1/2π) Σ_{n ≤ e^{2πΔ}} Λ(n)/√n · ĝ(log n/2π) · 2cos(t log n)`.
pub fn prime_side(params: &ExtremalParams, t: f64, table: &VonMangoldtTable) -> Result<Valued> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidParams(format!("t must be ≥ 0, got {t}")));
    }
    let cutoff = prime_cutoff(params.delta);
    if cutoff < 2 {
        return Ok(Valued::new(0.0, 0.0));
    }
    table.require((2.0 * PI * params.delta).exp().ceil() as u64)?;
    let mut sum = CompensatedSum::new();
    let mut err = 0.0;
    for &(n, lambda) in table.entries.iter().take_while(|e| e.0 <= cutoff) {
        let ln = (n as f64).ln();
        let ft = ft_series(params, ln / (2.0 * PI));
        let w = lambda / (n as f64).sqrt();
        sum.add(w * ft.value * 2.0 * (t * ln).cos());
        err += 2.0 * w * ft.tail_bound;
    }
    Ok(Valued::new(-sum.value() / (2.0 * PI), err / (2.0 * PI)))
}

/// Itemized explicit formula; `residual = zero_side − (pole_terms +
/// log_pi_term + archimedean + prime_side)`, `budget` the sum of all
/// certified error components.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExplicitFormulaLedger {
    pub alpha: f64,
    pub delta: f64,
    pub kind: Kind,
    pub t: f64,
    pub coverage_height: f64,
    pub zeros_used: usize,
    pub sieve_limit: u64,
    pub zero_side: Valued,
    pub pole_terms: Valued,
    pub pole_imaginary: f64,
    pub log_pi_term: Valued,
    pub archimedean: Valued,
    pub prime_side: Valued,
    pub residual: Valued,
    pub budget: Valued,
    pub zero_tail: f64,
}

impl ExplicitFormulaLedger {
    pub fn balanced(&self) -> bool {
        self.residual.value.abs() <= self.budget.value
    }
}

pub fn ledger(params: &ExtremalParams, t: f64, zeros: &ZeroTable, table: &VonMangoldtTable) -> Result<ExplicitFormulaLedger> {
    ledger_with(params, t, zeros, table, &QuadratureSpec::default())
}

pub fn ledger_with(
    params: &ExtremalParams,
    t: f64,
    zeros: &ZeroTable,
    table: &VonMangoldtTable,
    spec: &QuadratureSpec,
) -> Result<ExplicitFormulaLedger> {
    check_t(t)?;
    zeros.require(2.0 * t)?;
    let ev = ExtremalFunction::new(*params);
    let zs = zero_side_with(&ev, t, zeros)?;
    let (pole, pole_err) = pole_terms(&ev, t);
    let lp = log_pi_term(params);
    let arch = archimedean_with(&ev, t, spec)?;
    let primes = prime_side(params, t, table)?;

    let rhs = pole.re + lp + arch.value + primes.value;
    let residual = zs.sum - rhs;
    let zero_err = zs.tail + zs.truncation;
    let magnitude = zs.sum.abs() + pole.re.abs() + lp.abs() + arch.value.abs() + primes.value.abs();
    let rounding = 64.0 * f64::EPSILON * magnitude;
    let budget = zero_err + pole_err + arch.error + primes.error + rounding;
    Ok(ExplicitFormulaLedger {
        alpha: params.alpha.get(),
        delta: params.delta,
        kind: params.kind,
        t,
        coverage_height: zeros.coverage_height,
        zeros_used: zs.zeros_used,
        sieve_limit: table.limit,
        zero_side: Valued::new(zs.sum, zero_err),
        pole_terms: Valued::new(pole.re, pole_err),
        pole_imaginary: pole.im,
        log_pi_term: Valued::new(lp, 4.0 * f64::EPSILON * lp.abs()),
        archimedean: arch,
        prime_side: primes,
        residual: Valued::new(residual, budget),
        budget: Valued::new(budget, rounding),
        zero_tail: zs.tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{default_zero_table, sieve_von_mangoldt};
    use std::sync::OnceLock;

    fn zeros() -> &'static ZeroTable {
        static Z: OnceLock<ZeroTable> = OnceLock::new();
        Z.get_or_init(|| default_zero_table().unwrap())
    }

    fn p(alpha: f64, delta: f64, kind: Kind) -> ExtremalParams {
        ExtremalParams::from_raw(alpha, delta, kind).unwrap()
    }

    #[test]
    fn balance_at_reference_point() {
        let table = sieve_von_mangoldt(600).unwrap();
        let l = ledger(&p(1.0, 1.0, Kind::Minorant), 100.0, &zeros().truncated(2000.0), &table).unwrap();
        assert!(l.balanced(), "{l:#?}");
        assert!(l.budget.value <= 0.1, "{}", l.budget.value);
        assert!(l.pole_imaginary.abs() <= 1e-9);
    }

    #[test]
    fn tail_shrinks_with_coverage() {
        let q = p(1.0, 1.0, Kind::Minorant);
        let small = zero_side(&q, 100.0, &zeros().truncated(2000.0)).unwrap();
        let full = zero_side(&q, 100.0, zeros()).unwrap();
        assert!(small.tail <= 0.05, "{}", small.tail);
        assert!((small.sum - full.sum).abs() <= small.tail);
        assert!(full.tail < small.tail);
    }

    #[test]
    fn coverage_precondition() {
        let q = p(1.0, 1.0, Kind::Minorant);
        let z = zeros().truncated(150.0);
        assert!(matches!(zero_side(&q, 100.0, &z), Err(Error::InsufficientCoverage { .. })));
    }

    #[test]
    fn minorant_termwise_and_ordering() {
        let z = zeros().truncated(1000.0);
        // midway between the 10th and 11th zeros
        let t = 0.5 * (z.ordinates[9] + z.ordinates[10]);
        let lo = ExtremalFunction::new(p(0.75, 1.0, Kind::Minorant));
        let alpha = lo.params().alpha;
        for &g in &z.ordinates {
            for x in [t - g, t + g] {
                let e = lo.eval(x);
                assert!(e.value <= f_alpha(x, alpha) + e.tail_bound);
            }
        }
        let a = zero_side(&p(0.75, 1.0, Kind::Minorant), t, &z).unwrap();
        let b = zero_side(&p(0.75, 1.0, Kind::Majorant), t, &z).unwrap();
        assert!(b.sum >= a.sum);
    }

    #[test]
    fn prime_side_cases() {
        let table = sieve_von_mangoldt(600).unwrap();
        let tiny = p(1.0, 0.1, Kind::Minorant);
        assert_eq!(prime_side(&tiny, 50.0, &table).unwrap().value, 0.0);
        assert!(matches!(
            prime_side(&p(1.0, 1.0, Kind::Minorant), 0.0, &sieve_von_mangoldt(500).unwrap()),
            Err(Error::TableTooSmall { .. })
        ));
        // direct sum with quadrature transforms
        let q = p(1.0, 1.0, Kind::Minorant);
        let got = prime_side(&q, 0.0, &table).unwrap();
        let spec = crate::extremal::default_ft_spec(1.0);
        let quad = crate::extremal::FtQuadrature::new(q, &spec).unwrap();
        let mut want = 0.0;
        let mut err = 0.0;
        for &(n, l) in table.entries.iter().take_while(|e| e.0 <= 535) {
            let r = quad.transform((n as f64).ln() / (2.0 * PI)).unwrap();
            want += l / (n as f64).sqrt() * 2.0 * r.value;
            err += l / (n as f64).sqrt() * 2.0 * r.err_est;
        }
        want /= -2.0 * PI;
        err /= 2.0 * PI;
        assert!((got.value - want).abs() <= err + 1e-6, "{} vs {want} ± {err}", got.value);
    }

    #[test]
    fn prime_phase_periodicity() {
        let table = sieve_von_mangoldt(10).unwrap();
        let q = p(1.0, 0.2, Kind::Majorant);
        // only n = 2, 3 survive; shifting t by 2π/log 2 leaves the n = 2 term fixed
        assert_eq!(prime_cutoff(0.2), 3);
        let two = |t: f64| {
            let ln = 2f64.ln();
            ft_series(&q, ln / (2.0 * PI)).value * 2.0 * (t * ln).cos()
        };
        let t = 31.0;
        assert!((two(t) - two(t + 2.0 * PI / 2f64.ln())).abs() < 1e-12);
        assert!(prime_side(&q, t, &table).unwrap().value.is_finite());
    }

    #[test]
    fn archimedean_scaling() {
        let spec = QuadratureSpec::default();
        let q = p(1.0, 1.0, Kind::Minorant);
        let ghat0 = ft_at_zero(&q);
        let a100 = archimedean_term(&q, 100.0, &spec).unwrap();
        let ratio = a100.value / 50f64.ln();
        assert!((ratio - ghat0 / (2.0 * PI)).abs() <= 0.1, "{ratio}");
        let a200 = archimedean_term(&q, 200.0, &spec).unwrap();
        let step = a200.value - a100.value;
        assert!((step - ghat0 * 2f64.ln() / (2.0 * PI)).abs() <= 0.05, "{step}");
    }

    #[test]
    fn archimedean_wide_delta_approaches_target() {
        let spec = QuadratureSpec::default();
        let q = p(0.75, 4.0, Kind::Minorant);
        let t = 60.0;
        let a = archimedean_term(&q, t, &spec).unwrap();
        let ff = crate::analysis::integrate_real_line(
            |x| f_alpha(x, q.alpha) * digamma_re_quarter(t - x),
            &QuadratureSpec::default().with_radius(1e7),
            4.0 * 20.0,
        )
        .unwrap();
        let gap = crate::extremal::l1_distance(&q) * (t + 10.0).ln() / (2.0 * PI);
        assert!((a.value - ff.value / (2.0 * PI)).abs() <= gap + a.error + ff.err_est, "{} vs {}", a.value, ff.value / (2.0 * PI));
    }

    /// The growth hypothesis of the explicit formula, checked on the edges
    /// of the strip: `|h(x ± i/2)|·(1 + |x|)²` stays bounded.
    #[test]
    fn decay_on_strip_edges() {
        let ev = ExtremalFunction::new(p(0.6, 1.0, Kind::Majorant));
        for k in 0..=40 {
            let x = 10f64.powf(k as f64 / 10.0);
            for y in [0.5, -0.5] {
                let (v, _) = ev.eval_complex(Complex64::new(x, y), x.ceil() as usize + 40);
                assert!(v.norm() * (1.0 + x).powi(2) <= 20.0, "{x}: {v}");
            }
        }
    }

    #[test]
    fn tail_bound_envelope() {
        let b = zero_tail_bound(4.0, 100.0, 2000.0, 1520);
        assert!(b > 0.0 && b < 0.05);
        assert!(zero_tail_bound(4.0, 100.0, 4000.0, 3530) < b);
    }
}
