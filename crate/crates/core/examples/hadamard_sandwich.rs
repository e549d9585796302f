//! log|zeta(alpha + it)| from the zero sum, and the bracket given by the
//! minorant (upper bound) and majorant (lower bound).

use extremal_zeta::analysis::AlphaParam;
use extremal_zeta::arith::default_zero_table;
use extremal_zeta::bounds::{hadamard_identity, sandwich_check};
use extremal_zeta::extremal::{ExtremalParams, Kind};

fn main() -> anyhow::Result<()> {
    let zeros = default_zero_table()?;
    for alpha in [0.6, 0.75, 1.0] {
        for t in [100.0, 500.0, 1000.0] {
            let c = hadamard_identity(AlphaParam::new(alpha)?, t, &zeros)?;
            let up = sandwich_check(&ExtremalParams::from_raw(alpha, 1.0, Kind::Minorant)?, t, &zeros)?;
            let lo = sandwich_check(&ExtremalParams::from_raw(alpha, 1.0, Kind::Majorant)?, t, &zeros)?;
            println!(
                "a={alpha:<4} t={t:<6} log|zeta| {:>9.6}  zero sum {:>9.6} (budget {:.1e})  bracket [{:.4}, {:.4}]",
                c.lhs, c.rhs, c.budget, lo.bound, up.bound
            );
        }
    }
    Ok(())
}
