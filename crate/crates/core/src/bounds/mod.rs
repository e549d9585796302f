//! Bounds for `log|ζ(α + it)|`: the zero-sum identity and its extremal
//! sandwiches, the prime-sum lemmas and asymptotics, the three-regime
//! theorem evaluators and the `Re s = 1` constants.

mod asymptotics;
mod identity;
mod primes;

pub use asymptotics::{appendix_a1, appendix_a2, appendix_a2_substituted, Asymptotic, A1_ENVELOPE, A1_NEAR_ONE, A2_ENVELOPE};
pub use identity::{hadamard_identity, sandwich_check, IdentityCheck, SandwichCheck, STIRLING_CONSTANT};
pub use primes::{lemma_bound_sum_k, lemma_grid, lemma_grid_check, lemma_initial_ineq, prime_sum_bound, GridResult, PrimeSumBound};

use crate::analysis::{AlphaParam, EULER_GAMMA};
use crate::arith::{log_abs_zeta, VonMangoldtTable};
use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    NearHalf,
    NearOne,
    Middle,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::NearHalf => "near-half",
            Regime::NearOne => "near-one",
            Regime::Middle => "middle",
        })
    }
}

impl std::str::FromStr for Regime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "near-half" => Ok(Regime::NearHalf),
            "near-one" => Ok(Regime::NearOne),
            "middle" => Ok(Regime::Middle),
            _ => Err(Error::InvalidParams(format!("unknown regime {s:?}"))),
        }
    }
}

/// Threshold on `(α − 1/2) log log t` and `(1 − α) log log t`.
pub const REGIME_THRESHOLD: f64 = 1.0;
/// Heights up to which the backend fills in the actual value.
pub const ACTUAL_MAX_T: f64 = 1e5;

/// NearHalf first, then NearOne, else Middle.
pub fn select_regime(alpha: AlphaParam, t: f64) -> Regime {
    let ll = t.ln().ln();
    let tol = 1e-12;
    if alpha.c() * ll <= REGIME_THRESHOLD + tol {
        Regime::NearHalf
    } else if (1.0 - alpha.get()) * ll <= REGIME_THRESHOLD + tol {
        Regime::NearOne
    } else {
        Regime::Middle
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub alpha: f64,
    pub t: f64,
    pub direction: Direction,
    pub delta_used: f64,
    pub regime: Regime,
    /// Whether `regime` came from the threshold rule or was forced.
    pub regime_selected: bool,
    pub main_term: f64,
    pub secondary_terms: f64,
    pub bound_value: f64,
    /// Size of the unspecified `O(·)` term of the branch (constant omitted).
    pub error_scale: f64,
    pub actual: Option<f64>,
    pub slack: Option<f64>,
    pub flagged: bool,
}

fn check_t(t: f64) -> Result<()> {
    if !(t > std::f64::consts::E.exp() && t.is_finite()) {
        return Err(Error::InvalidParams(format!("t must exceed e^e, got {t}")));
    }
    Ok(())
}

/// `(main, secondary, error scale)` of the upper-bound branch.
fn upper_terms(alpha: AlphaParam, t: f64, regime: Regime) -> (f64, f64, f64) {
    let a = alpha.get();
    let l = t.ln();
    let ll = l.ln();
    let p = l.powf(2.0 - 2.0 * a);
    match regime {
        Regime::NearHalf => (l.powf(1.0 - 2.0 * a).ln_1p() * l / (2.0 * ll), 0.0, p / (ll * ll)),
        Regime::NearOne => ((2.0 * ll).ln(), 0.0, 1.0),
        Regime::Middle => {
            let coef = 0.5 + (2.0 * a - 1.0) / (a * (1.0 - a));
            (coef * p / ll, (2.0 * ll).ln(), p / ((1.0 - a).powi(2) * ll * ll))
        }
    }
}

fn lower_terms(alpha: AlphaParam, t: f64, regime: Regime) -> (f64, f64, f64) {
    let a = alpha.get();
    let l = t.ln();
    let ll = l.ln();
    match regime {
        Regime::NearHalf => {
            let q = l.powf(1.0 - 2.0 * a);
            let p = l.powf(2.0 - 2.0 * a);
            ((-q).ln_1p() * l / (2.0 * ll), 0.0, p / (ll * ll * (1.0 - q)))
        }
        _ => {
            let (m, s, e) = upper_terms(alpha, t, regime);
            (-m, -s, e)
        }
    }
}

fn report(alpha: AlphaParam, t: f64, direction: Direction, regime: Regime, selected: bool, with_actual: bool) -> BoundReport {
    let (main, secondary, scale) = match direction {
        Direction::Upper => upper_terms(alpha, t, regime),
        Direction::Lower => lower_terms(alpha, t, regime),
    };
    let bound = main + secondary;
    let actual = if with_actual && t <= ACTUAL_MAX_T { log_abs_zeta(alpha.get(), t).ok().map(|z| z.value) } else { None };
    let slack = actual.map(|v| match direction {
        Direction::Upper => bound - v,
        Direction::Lower => v - bound,
    });
    BoundReport {
        alpha: alpha.get(),
        t,
        direction,
        delta_used: t.ln().ln() / PI,
        regime,
        regime_selected: selected,
        main_term: main,
        secondary_terms: secondary,
        bound_value: bound,
        error_scale: scale,
        actual,
        slack,
        flagged: slack.is_some_and(|s| s < 0.0),
    }
}

/// Main terms of the upper bound for `log|ζ(α + it)|` in the regime picked
/// by [`select_regime`]; `actual` is filled for `t ≤ 10⁵`.
pub fn theorem_upper(alpha: AlphaParam, t: f64) -> Result<BoundReport> {
    check_t(t)?;
    Ok(report(alpha, t, Direction::Upper, select_regime(alpha, t), true, true))
}

pub fn theorem_lower(alpha: AlphaParam, t: f64) -> Result<BoundReport> {
    check_t(t)?;
    Ok(report(alpha, t, Direction::Lower, select_regime(alpha, t), true, true))
}

/// A specific branch, regardless of the threshold rule.
pub fn theorem_branch(alpha: AlphaParam, t: f64, direction: Direction, regime: Regime) -> Result<BoundReport> {
    check_t(t)?;
    Ok(report(alpha, t, direction, regime, false, true))
}

/// `2e^γ`.
pub fn littlewood_upper_constant() -> f64 {
    2.0 * EULER_GAMMA.exp()
}

/// `12e^γ/π²`.
pub fn littlewood_lower_constant() -> f64 {
    12.0 * EULER_GAMMA.exp() / (PI * PI)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Littlewood {
    pub t: f64,
    /// Bound for `|ζ(1 + it)|`.
    pub upper: f64,
    /// Bound for `1/|ζ(1 + it)|`.
    pub lower_reciprocal: f64,
    pub actual_abs: Option<f64>,
    pub upper_slack: Option<f64>,
    pub lower_slack: Option<f64>,
}

pub fn littlewood_bounds(t: f64) -> Result<(f64, f64)> {
    check_t(t)?;
    let ll = t.ln().ln();
    Ok((littlewood_upper_constant() * ll, littlewood_lower_constant() * ll))
}

/// [`littlewood_bounds`] compared with the backend value of `|ζ(1 + it)|`.
pub fn littlewood_check(t: f64) -> Result<Littlewood> {
    let (upper, lower_reciprocal) = littlewood_bounds(t)?;
    let actual = if t <= ACTUAL_MAX_T { Some(log_abs_zeta(1.0, t)?.value.exp()) } else { None };
    Ok(Littlewood {
        t,
        upper,
        lower_reciprocal,
        actual_abs: actual,
        upper_slack: actual.map(|z| upper - z),
        lower_slack: actual.map(|z| lower_reciprocal - 1.0 / z),
    })
}

/// `Σ_{n ≤ x} Λ(n)/(n log n)` and its Mertens approximation
/// `log log x + γ`.
pub fn mertens_sum(x: u64, table: &VonMangoldtTable) -> Result<(f64, f64)> {
    table.require(x)?;
    let s: f64 = table.entries.iter().take_while(|e| e.0 <= x).map(|&(n, l)| l / (n as f64 * (n as f64).ln())).sum();
    Ok((s, (x as f64).ln().ln() + EULER_GAMMA))
}

/// `−log Π_{p ≤ x}(1 + 1/p)` and its limit form `−log((6e^γ/π²) log x)`.
pub fn euler_product_lower(x: u64, table: &VonMangoldtTable) -> Result<(f64, f64)> {
    table.require(x)?;
    let s: f64 = table
        .entries
        .iter()
        .take_while(|e| e.0 <= x)
        .filter(|&&(n, l)| (l.exp() - n as f64).abs() < 0.5)
        .map(|&(p, _)| (1.0 / p as f64).ln_1p())
        .sum();
    Ok((-s, -(6.0 * EULER_GAMMA.exp() / (PI * PI) * (x as f64).ln()).ln()))
}

/// The refined `Re s = 1` bounds at finite `Δ`, without their `O(·)` terms:
/// `log(2e^γ πΔ) + (1/2πΔ) log((1 + e^{−πΔ})/(1 + e^{−4πΔ})) log(t/2)` and
/// `−log((12e^γ/π²) πΔ) + (1/2πΔ) log((1 − e^{−πΔ})/(1 − e^{−4πΔ})) log(t/2)`.
pub fn refined_line_one(t: f64, delta: f64) -> (f64, f64) {
    let pd = PI * delta;
    let lt = (t / 2.0).ln();
    let up = (2.0 * EULER_GAMMA.exp() * pd).ln()
        + ((-pd).exp().ln_1p() - (-4.0 * pd).exp().ln_1p()) / (2.0 * pd) * lt;
    let lo = -(littlewood_lower_constant() * pd).ln()
        + ((-(-pd).exp()).ln_1p() - (-(-4.0 * pd).exp()).ln_1p()) / (2.0 * pd) * lt;
    (up, lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_von_mangoldt;

    fn al(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    #[test]
    fn constants() {
        assert!((littlewood_upper_constant() - 3.562_144_835_980_4).abs() < 1e-13);
        assert!((littlewood_lower_constant() - 2.165_524_386_521_85).abs() < 1e-13);
        let (u, l) = littlewood_bounds(1e10).unwrap();
        assert!((u - 11.173_085_966_294_3).abs() < 1e-11, "{u}");
        assert!((l / u - 6.0 / (PI * PI)).abs() < 1e-15);
    }

    #[test]
    fn littlewood_at_1e4() {
        let l = littlewood_check(1e4).unwrap();
        assert!(l.upper_slack.unwrap() > 0.0 && l.lower_slack.unwrap() > 0.0);
    }

    #[test]
    fn regimes() {
        let t: f64 = 1e10;
        assert_eq!(select_regime(al(1.0), t), Regime::NearOne);
        assert_eq!(select_regime(al(0.5 + 1e-3), t), Regime::NearHalf);
        // log log 10¹⁰ ≈ 3.14 is small, so α = 0.7 still counts as near 1/2
        assert_eq!(select_regime(al(0.7), t), Regime::NearHalf);
        assert_eq!(select_regime(al(0.7), 1e70), Regime::Middle);
        let r = theorem_upper(al(1.0), t).unwrap();
        assert!((r.bound_value - (2.0 * t.ln().ln()).ln()).abs() < 1e-12);
        assert!(r.actual.is_none());
        let r = theorem_lower(al(1.0), t).unwrap();
        assert!((r.bound_value + (2.0 * t.ln().ln()).ln()).abs() < 1e-12);
        assert!(theorem_upper(al(0.7), 10.0).is_err());
    }

    #[test]
    fn middle_branch_formula() {
        let t: f64 = 1e10;
        let (l, ll) = (t.ln(), t.ln().ln());
        let r = theorem_branch(al(0.7), t, Direction::Upper, Regime::Middle).unwrap();
        let want = (0.5 + 0.4 / 0.21) * l.powf(0.6) / ll + (2.0 * ll).ln();
        assert!((r.bound_value - want).abs() < 1e-12 * want);
        assert!(!r.regime_selected);
        let s = theorem_branch(al(0.7), t, Direction::Lower, Regime::Middle).unwrap();
        assert!((s.bound_value + want).abs() < 1e-12 * want);
    }

    #[test]
    fn near_half_limits() {
        let t: f64 = 1e10;
        let target = 2f64.ln() / 2.0 * t.ln() / t.ln().ln();
        let r = theorem_upper(al(0.5 + 1e-9), t).unwrap();
        assert!((r.main_term / target - 1.0).abs() < 1e-6);
        // the lower bound falls without limit as α → 1/2
        let mut prev = f64::INFINITY;
        for k in 1..12 {
            let v = theorem_lower(al(0.5 + 10f64.powi(-k)), t).unwrap().main_term;
            assert!(v < prev);
            prev = v;
        }
        assert!(prev < -8.0);
    }

    #[test]
    fn upper_above_lower() {
        for &t in &[100.0, 1e4, 1e10, 1e30] {
            for i in 1..=50 {
                let a = al(0.5 + i as f64 / 100.0);
                assert!(theorem_upper(a, t).unwrap().bound_value >= theorem_lower(a, t).unwrap().bound_value);
            }
        }
    }

    /// Inside each regime the evaluator is continuous in α; jumps occur only
    /// where the selected branch changes.
    #[test]
    fn piecewise_continuity() {
        let t = 1e30;
        let mut prev: Option<BoundReport> = None;
        for i in 1..=4999 {
            let a = al(0.5 + i as f64 / 10_000.0);
            let r = theorem_upper(a, t).unwrap();
            if let Some(p) = prev {
                if p.regime == r.regime {
                    let scale = p.bound_value.abs().max(1.0);
                    assert!((r.bound_value - p.bound_value).abs() <= 0.01 * scale, "{p:?} {r:?}");
                }
            }
            prev = Some(r);
        }
    }

    #[test]
    fn mertens() {
        let table = sieve_von_mangoldt(100_000).unwrap();
        let (s, approx) = mertens_sum(100_000, &table).unwrap();
        assert!((s - approx).abs() < 3.0 / 100_000f64.ln());
        let (e, lim) = euler_product_lower(100_000, &table).unwrap();
        assert!((e - lim).abs() < 0.01);
    }

    #[test]
    fn refined_line_one_brackets_zeta() {
        for &t in &[1e3, 1e4] {
            let z = log_abs_zeta(1.0, t).unwrap().value;
            let (up, lo) = refined_line_one(t, t.ln().ln() / PI);
            assert!(lo < z && z < up, "{t}: {lo} {z} {up}");
        }
    }
}
