//! Main terms of the conditional bounds across the three regimes.

use extremal_zeta::analysis::AlphaParam;
use extremal_zeta::bounds::{select_regime, theorem_lower, theorem_upper};

fn main() -> anyhow::Result<()> {
    println!("{:>5} {:>8} {:>10} {:>12} {:>12} {:>12}", "alpha", "t", "regime", "upper", "lower", "actual");
    for alpha in [0.55, 0.6, 0.7, 0.8, 0.9, 1.0] {
        let a = AlphaParam::new(alpha)?;
        for t in [1e3, 1e5, 1e10, 1e70] {
            let (u, l) = (theorem_upper(a, t)?, theorem_lower(a, t)?);
            let actual = u.actual.map_or("-".to_string(), |v| format!("{v:.5}"));
            println!("{alpha:5} {t:8.0e} {:>10} {:12.5} {:12.5} {actual:>12}", select_regime(a, t).to_string(), u.bound_value, l.bound_value);
        }
    }
    Ok(())
}
