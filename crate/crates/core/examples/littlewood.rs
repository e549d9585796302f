//! |zeta(1 + it)| against the conditional line-one constants.

use extremal_zeta::bounds::{littlewood_check, littlewood_lower_constant, littlewood_upper_constant};

fn main() -> anyhow::Result<()> {
    println!("upper constant {:.13}, reciprocal constant {:.13}", littlewood_upper_constant(), littlewood_lower_constant());
    for t in [1e3, 5e3, 1e4, 5e4, 1e5] {
        let l = littlewood_check(t)?;
        println!(
            "t={t:8.0e}  |zeta| {:.6}  bound {:.4}  1/|zeta| {:.6}  bound {:.4}",
            l.actual_abs.unwrap_or(f64::NAN),
            l.upper,
            1.0 / l.actual_abs.unwrap_or(f64::NAN),
            l.lower_reciprocal
        );
    }
    Ok(())
}
