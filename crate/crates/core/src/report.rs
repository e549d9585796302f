//! Output helpers shared by the CLI and the examples.

use serde::Serialize;

/// Decimal rendering with 17 significant digits (enough to round-trip any
/// `f64`). Positional notation in `[1e-5, 1e17)`, scientific elsewhere.
pub fn sig17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let a = x.abs();
    if (1e-5..1e17).contains(&a) {
        let int_digits = a.log10().floor() as i32 + 1;
        let decimals = (17 - int_digits).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.16e}")
    }
}

/// A reported number with the error or budget that accompanies it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Valued {
    pub value: f64,
    pub error: f64,
}

impl Valued {
    pub fn new(value: f64, error: f64) -> Self {
        Self { value, error }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for &x in &[std::f64::consts::PI, 1e-300, -2.5e20, 0.1, 123456.789, 7.0, 6.02e-6] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(sig17(2f64.ln()), "0.69314718055994529");
        assert_eq!(sig17(0.0), "0");
    }
}
