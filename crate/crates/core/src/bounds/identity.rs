use crate::analysis::{f_alpha, AlphaParam, CompensatedSum};
use crate::arith::{log_abs_zeta, ZeroTable};
use crate::error::{Error, Result};
use crate::explicit::{zero_side, zero_tail_bound};
use crate::extremal::{ExtremalParams, Kind};
use serde::Serialize;
use std::f64::consts::PI;

/// Engineering stand-in for the `O(1/t)` Stirling remainder: `C/t`, `C = 10`.
pub const STIRLING_CONSTANT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub alpha: f64,
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub budget: f64,
    pub zero_tail: f64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.abs() <= self.budget
    }
}

fn check(t: f64, zeros: &ZeroTable) -> Result<()> {
    if !(t >= 50.0 && t.is_finite()) {
        return Err(Error::InvalidParams(format!("t must be ≥ 50, got {t}")));
    }
    zeros.require(2.0 * t)
}

/// `(5/4 − α/2)(log(t/2) − log π) + log|ζ(5/2 + it)|`, the part of the
/// identity that does not involve the zeros, with its error estimate.
fn smooth_part(alpha: f64, t: f64) -> Result<(f64, f64)> {
    let z = log_abs_zeta(2.5, t)?;
    let w = 1.25 - 0.5 * alpha;
    Ok((w * ((t / 2.0).ln() - PI.ln()) + z.value, z.err_est))
}

/// `log|ζ(α + it)|` against `(5/4 − α/2) log(t/2) − ½Σ_γ f_α(t − γ) +
/// log|ζ(5/2 + it)| − (5/4 − α/2) log π`; the budget is the zero tail plus
/// `10/t`.
pub fn hadamard_identity(alpha: AlphaParam, t: f64, zeros: &ZeroTable) -> Result<IdentityCheck> {
    check(t, zeros)?;
    let a = alpha.get();
    let lhs = log_abs_zeta(a, t)?;
    let mut sum = CompensatedSum::new();
    for &g in &zeros.ordinates {
        sum.add(f_alpha(t - g, alpha));
        sum.add(f_alpha(t + g, alpha));
    }
    let c = alpha.c();
    let tail = 0.5 * zero_tail_bound(4.0 - c * c, t, zeros.coverage_height, zeros.ordinates.len());
    let (smooth, smooth_err) = smooth_part(a, t)?;
    let rhs = smooth - 0.5 * sum.value();
    let budget = tail + STIRLING_CONSTANT / t + lhs.err_est + smooth_err;
    Ok(IdentityCheck { alpha: a, t, lhs: lhs.value, rhs, residual: lhs.value - rhs, budget, zero_tail: tail })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SandwichCheck {
    pub alpha: f64,
    pub delta: f64,
    pub kind: Kind,
    pub t: f64,
    pub bound: f64,
    pub actual: f64,
    pub budget: f64,
    pub holds: bool,
}

/// The identity with `f_α` replaced by `g_Δ` (an upper bound for
/// `log|ζ(α + it)|`) or `m_Δ` (a lower bound).
pub fn sandwich_check(params: &ExtremalParams, t: f64, zeros: &ZeroTable) -> Result<SandwichCheck> {
    check(t, zeros)?;
    let a = params.alpha.get();
    let actual = log_abs_zeta(a, t)?;
    let zs = zero_side(params, t, zeros)?;
    let (smooth, smooth_err) = smooth_part(a, t)?;
    let bound = smooth - 0.5 * zs.sum;
    let budget = 0.5 * (zs.tail + zs.truncation) + STIRLING_CONSTANT / t + actual.err_est + smooth_err;
    let holds = match params.kind {
        Kind::Minorant => actual.value <= bound + budget,
        Kind::Majorant => actual.value >= bound - budget,
    };
    Ok(SandwichCheck { alpha: a, delta: params.delta, kind: params.kind, t, bound, actual: actual.value, budget, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::default_zero_table;

    #[test]
    fn identity_examples() {
        let z = default_zero_table().unwrap();
        for (a, t) in [(0.75, 100.0), (1.0, 500.0), (0.6, 137.3)] {
            let c = hadamard_identity(AlphaParam::new(a).unwrap(), t, &z).unwrap();
            assert!(c.holds(), "{c:?}");
            assert!(c.lhs.is_finite() && c.rhs.is_finite());
        }
    }

    #[test]
    fn identity_with_smaller_table() {
        // the half-coverage table is the oracle's weaker sibling
        let z = default_zero_table().unwrap();
        let a = AlphaParam::new(0.75).unwrap();
        let full = hadamard_identity(a, 100.0, &z).unwrap();
        let half = hadamard_identity(a, 100.0, &z.truncated(2500.0)).unwrap();
        assert!((full.rhs - half.rhs).abs() <= half.zero_tail);
        assert!(half.zero_tail > full.zero_tail);
    }

    #[test]
    fn coverage_required() {
        let z = default_zero_table().unwrap().truncated(150.0);
        assert!(matches!(
            hadamard_identity(AlphaParam::new(0.75).unwrap(), 100.0, &z),
            Err(Error::InsufficientCoverage { .. })
        ));
    }

    #[test]
    fn sandwich_examples() {
        let z = default_zero_table().unwrap();
        let lo = sandwich_check(&ExtremalParams::from_raw(0.75, 1.0, Kind::Minorant).unwrap(), 100.0, &z).unwrap();
        let hi = sandwich_check(&ExtremalParams::from_raw(0.75, 1.0, Kind::Majorant).unwrap(), 100.0, &z).unwrap();
        assert!(lo.holds && hi.holds);
        assert!(lo.bound >= hi.bound);
        assert!(lo.bound >= lo.actual && lo.actual >= hi.bound);
    }
}
