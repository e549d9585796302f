use super::Regime;
use crate::analysis::AlphaParam;
use serde::Serialize;

const SLACK: f64 = 1e-12;

/// `lhs ≥ rhs` up to `SLACK` relative to `scale`, the size of the terms
/// whose difference forms each side.
fn geq(lhs: f64, rhs: f64, scale: f64) -> bool {
    lhs >= rhs - SLACK * scale
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrimeSumBound {
    pub regime: Regime,
    /// `log log x` in the near-one case, else the power term.
    pub main_term: f64,
    pub log_log: f64,
    pub total: f64,
}

/// Closed-form main terms of the bound for the prime-power sum at
/// `x = e^{2πΔ}`: `log log x` when `(1 − α) log x ≤ 1`, otherwise
/// `(2α − 1)/(α(1 − α)) · x^{1−α}/log x · x^{α−1/2}/(x^{α−1/2} + 1)` plus
/// `log log x`.
pub fn prime_sum_bound(x: f64, alpha: AlphaParam) -> PrimeSumBound {
    let a = alpha.get();
    let lx = x.ln();
    let ll = lx.ln();
    if (1.0 - a) * lx <= 1.0 {
        return PrimeSumBound { regime: Regime::NearOne, main_term: ll, log_log: ll, total: ll };
    }
    // x^{β}/(x^{β} + 1) written to avoid overflow
    let beta = a - 0.5;
    let damp = 1.0 / (1.0 + (-beta * lx).exp());
    let main = (2.0 * a - 1.0) / (a * (1.0 - a)) * ((1.0 - a) * lx).exp() / lx * damp;
    PrimeSumBound { regime: Regime::Middle, main_term: main, log_log: ll, total: main + ll }
}

/// `1/log(y) · y^{−β}` with `log y` given.
fn decay(log_y: f64, beta: f64) -> f64 {
    (-beta * log_y).exp() / log_y
}

/// The two-sided difference at index `k`:
/// `(k + 1)(decay(n x^k) − decay(x^{k+2}/n))`.
/// Returns the difference and the magnitude it was formed from.
fn lemma_term(k: u32, ln_n: f64, ln_x: f64, beta: f64) -> (f64, f64) {
    let k = k as f64;
    let u = decay(ln_n + k * ln_x, beta);
    let v = decay((k + 2.0) * ln_x - ln_n, beta);
    ((k + 1.0) * (u - v), (k + 1.0) * (u + v))
}

fn valid(n: f64, x: f64) -> bool {
    n >= 2.0 && n <= x && x.is_finite()
}

/// The consecutive-term inequality: the `k`-th bracketed difference of the
/// alternating prime-power series dominates the `(k + 1)`-th.
pub fn lemma_initial_ineq(k: u32, n: f64, x: f64, alpha: AlphaParam) -> bool {
    if !valid(n, x) {
        return false;
    }
    let (ln_n, ln_x, beta) = (n.ln(), x.ln(), alpha.c());
    let (lhs, s1) = lemma_term(k, ln_n, ln_x, beta);
    let (rhs, s2) = lemma_term(k + 1, ln_n, ln_x, beta);
    geq(lhs, rhs, s1.max(s2))
}

/// Both comparisons with `1/log x − 1/(x^{α−1/2} log x)` for `k ≥ 1`.
pub fn lemma_bound_sum_k(k: u32, n: f64, x: f64, alpha: AlphaParam) -> bool {
    if k < 1 || !valid(n, x) {
        return false;
    }
    let (ln_n, ln_x) = (n.ln(), x.ln());
    let inv = (-alpha.c() * ln_x).exp();
    let k = k as f64;
    let base = (1.0 - inv) / ln_x;
    let (p1, q1) = ((k + 1.0) / (k * ln_x + ln_n), inv * (k + 2.0) / ((k + 1.0) * ln_x + ln_n));
    let (p2, q2) = ((k + 1.0) / ((k + 2.0) * ln_x - ln_n), inv * (k + 2.0) / ((k + 3.0) * ln_x - ln_n));
    let scale = (1.0 + inv) / ln_x;
    geq(p1 - q1, base, scale.max(p1 + q1)) && geq(base, p2 - q2, scale.max(p2 + q2))
}

/// The documented grid: `n ∈ {2, 3, √x, x − 1, x}`, `x ∈ {10², 10⁴, 10⁶}`,
/// `α ∈ {0.55, 0.6, 0.75, 0.9, 1}`.
pub fn lemma_grid() -> Vec<(f64, f64, AlphaParam)> {
    let mut out = Vec::new();
    for &a in &[0.55, 0.6, 0.75, 0.9, 1.0] {
        for &x in &[1e2f64, 1e4, 1e6] {
            for n in [2.0, 3.0, x.sqrt(), x - 1.0, x] {
                out.push((n, x, AlphaParam::new(a).unwrap()));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridResult {
    pub cases: usize,
    pub failures: usize,
}

/// Runs both lemmas over `k ∈ [0, 50]` / `[1, 50]` on [`lemma_grid`].
pub fn lemma_grid_check() -> (GridResult, GridResult) {
    let grid = lemma_grid();
    let mut first = GridResult { cases: 0, failures: 0 };
    let mut second = first;
    for &(n, x, a) in &grid {
        for k in 0..=50 {
            first.cases += 1;
            first.failures += usize::from(!lemma_initial_ineq(k, n, x, a));
            if k >= 1 {
                second.cases += 1;
                second.failures += usize::from(!lemma_bound_sum_k(k, n, x, a));
            }
        }
    }
    (first, second)
}
