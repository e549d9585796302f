//! Elementary analytic building blocks.

mod quad;
mod special;
mod sum;

pub use quad::{
    adaptive_quad, adaptive_quad_breaks, geometric_breaks, integrate_real_line, uniform_breaks,
    Quad, QuadratureSpec,
};
pub use special::{digamma, digamma_re_quarter, ln_gamma, EULER_GAMMA};
pub use sum::{CompensatedSum, ComplexSum};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `α ∈ (1/2, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.5 && alpha <= 1.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidAlpha(alpha))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `α − 1/2`, the distance to the critical line.
    #[inline]
    pub fn c(self) -> f64 {
        self.0 - 0.5
    }
}

impl TryFrom<f64> for AlphaParam {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

impl From<AlphaParam> for f64 {
    fn from(a: AlphaParam) -> f64 {
        a.0
    }
}

/// `f_α(x) = log((4 + x²)/((α − 1/2)² + x²))`.
pub fn f_alpha(x: f64, alpha: AlphaParam) -> f64 {
    let c2 = alpha.c() * alpha.c();
    ((4.0 - c2) / (c2 + x * x)).ln_1p()
}

/// `f_α′(x) = 2x/(x² + 4) − 2x/(x² + (α − 1/2)²)`, written without the
/// cancellation for large `|x|`.
pub fn f_alpha_deriv(x: f64, alpha: AlphaParam) -> f64 {
    let c2 = alpha.c() * alpha.c();
    let x2 = x * x;
    2.0 * x * (c2 - 4.0) / ((x2 + 4.0) * (x2 + c2))
}

/// `∫_ℝ f_α = 2π(5/2 − α)`.
pub fn f_alpha_integral(alpha: AlphaParam) -> f64 {
    2.0 * std::f64::consts::PI * (2.5 - alpha.get())
}

/// Fourier transform `∫ f_α(x) e^{−2πixξ} dx = (e^{−2π(α−1/2)|ξ|} − e^{−4π|ξ|})/|ξ|`.
pub fn f_alpha_hat(xi: f64, alpha: AlphaParam) -> f64 {
    let xi = xi.abs();
    if xi == 0.0 {
        return f_alpha_integral(alpha);
    }
    let p = 2.0 * std::f64::consts::PI * alpha.c();
    let q = 4.0 * std::f64::consts::PI;
    // e^{-p xi} - e^{-q xi} = e^{-p xi} * (1 - e^{-(q-p) xi})
    -(-p * xi).exp() * (-(q - p) * xi).exp_m1() / xi
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn a(v: f64) -> AlphaParam {
        AlphaParam::new(v).unwrap()
    }

    #[test]
    fn alpha_range() {
        assert!(AlphaParam::new(0.5).is_err());
        assert!(AlphaParam::new(1.0).is_ok());
        assert!(AlphaParam::new(1.0 + 1e-12).is_err());
        assert!(AlphaParam::new(f64::NAN).is_err());
    }

    #[test]
    fn f_alpha_values() {
        assert_relative_eq!(f_alpha(0.0, a(1.0)), 16f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(f_alpha(0.0, a(0.75)), 64f64.ln(), max_relative = 1e-15);
        let v = f_alpha(1e6, a(0.8));
        assert_relative_eq!(v, 3.91e-12, max_relative = 1e-9);
        assert!(v <= 4e-12);
    }

    #[test]
    fn derivative_values() {
        assert_eq!(f_alpha_deriv(0.0, a(0.6)), 0.0);
        assert_relative_eq!(f_alpha_deriv(1.0, a(1.0)), -1.2, max_relative = 1e-14);
        assert_relative_eq!(f_alpha_deriv(-1.0, a(1.0)), 1.2, max_relative = 1e-14);
    }

    #[test]
    fn derivative_matches_central_difference_on_grid() {
        let h = 1e-6;
        for &al in &[0.55, 0.6, 0.75, 1.0] {
            let al = a(al);
            for i in -2000..=2000 {
                let x = i as f64 * 0.05;
                let fd = (f_alpha(x + h, al) - f_alpha(x - h, al)) / (2.0 * h);
                let d = f_alpha_deriv(x, al);
                assert!((d - fd).abs() <= 1e-6 * (1.0 + d.abs()), "x={x} d={d} fd={fd}");
            }
        }
    }

    #[test]
    fn hat_at_zero_is_limit() {
        let al = a(0.7);
        let near = f_alpha_hat(1e-9, al);
        assert_relative_eq!(near, f_alpha_hat(0.0, al), max_relative = 1e-7);
    }

    proptest! {
        #[test]
        fn f_alpha_even_positive_and_bounded(x in -1e4f64..1e4, al in 0.5001f64..=1.0) {
            let al = a(al);
            let v = f_alpha(x, al);
            prop_assert_eq!(v, f_alpha(-x, al));
            prop_assert!(v > 0.0);
            if x != 0.0 {
                prop_assert!(v <= 4.0 / (x * x + al.c() * al.c()));
            }
        }

        #[test]
        fn deriv_odd(x in -1e3f64..1e3, al in 0.5001f64..=1.0) {
            let al = a(al);
            prop_assert_eq!(f_alpha_deriv(x, al), -f_alpha_deriv(-x, al));
        }
    }
}
