//! Extremal minorant `g_Δ` and majorant `m_Δ` of `f_α` (exponential type
//! `2πΔ`), their Fourier transforms, L¹ gaps and the contour transforms.
//!
//! Everything is evaluated in the scaled variable `X = Δx`, where the
//! functions are the sinc²-Hermite interpolants of `F(X) = f_α(X/Δ)` at the
//! half-integers (minorant) or the integers (majorant).

mod contour;
mod fourier;
mod series;

pub use contour::{contour_h, contour_k, poisson_bracket};
pub use fourier::{default_ft_spec, ft_at_zero, ft_numeric, ft_series, ft_series_with, l1_distance, FtQuadrature, FtSeries};
pub use series::{eval_extremal, ExtremalFunction, SeriesTruncation, Evaluation};

use crate::analysis::AlphaParam;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Minorant,
    Majorant,
}

impl Kind {
    pub const BOTH: [Kind; 2] = [Kind::Minorant, Kind::Majorant];

    /// Offset of the interpolation lattice: nodes are `n + offset`.
    pub(crate) fn lattice_offset(self) -> f64 {
        match self {
            Kind::Minorant => 0.5,
            Kind::Majorant => 0.0,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Minorant => "minorant",
            Kind::Majorant => "majorant",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "minorant" | "min" => Ok(Kind::Minorant),
            "majorant" | "maj" => Ok(Kind::Majorant),
            _ => Err(Error::InvalidParams(format!("unknown kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremalParams {
    pub alpha: AlphaParam,
    pub delta: f64,
    pub kind: Kind,
    /// `(α − 1/2)Δ`
    pub a: f64,
    /// `2Δ`
    pub b: f64,
}

impl ExtremalParams {
    pub fn new(alpha: AlphaParam, delta: f64, kind: Kind) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidParams(format!("delta must be positive, got {delta}")));
        }
        Ok(Self { alpha, delta, kind, a: alpha.c() * delta, b: 2.0 * delta })
    }

    /// Convenience constructor from a raw alpha.
    pub fn from_raw(alpha: f64, delta: f64, kind: Kind) -> Result<Self> {
        Self::new(AlphaParam::new(alpha)?, delta, kind)
    }

    pub fn with_kind(self, kind: Kind) -> Self {
        Self { kind, ..self }
    }

    /// Ratio `e^{−(2α−1)πΔ}` of the geometric Fourier series.
    pub fn ratio(&self) -> f64 {
        (-2.0 * std::f64::consts::PI * self.a).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_store_a_b() {
        let p = ExtremalParams::from_raw(0.75, 2.0, Kind::Minorant).unwrap();
        assert_eq!(p.a, 0.5);
        assert_eq!(p.b, 4.0);
        assert!(0.0 < p.a && p.a < p.b);
        assert!(ExtremalParams::from_raw(0.75, 0.0, Kind::Majorant).is_err());
        assert!(ExtremalParams::from_raw(0.75, -1.0, Kind::Majorant).is_err());
        assert_eq!("maj".parse::<Kind>().unwrap(), Kind::Majorant);
    }
}
