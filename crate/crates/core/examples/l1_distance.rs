//! L1 gap between f_alpha and its extremal functions, closed form vs
//! quadrature, and the decay in delta.

use extremal_zeta::analysis::{f_alpha_integral, AlphaParam};
use extremal_zeta::extremal::{default_ft_spec, ft_at_zero, l1_distance, ExtremalParams, FtQuadrature, Kind};

fn main() -> anyhow::Result<()> {
    for alpha in [0.6, 0.75, 1.0] {
        let total = f_alpha_integral(AlphaParam::new(alpha)?);
        println!("alpha = {alpha}: integral of f = {total:.12}");
        for delta in [0.5, 1.0, 2.0] {
            for kind in Kind::BOTH {
                let p = ExtremalParams::from_raw(alpha, delta, kind)?;
                let q = FtQuadrature::new(p, &default_ft_spec(delta))?.l1()?;
                println!(
                    "  delta={delta:<4} {kind}  l1 {:.10e}  quad {:.10e}  ft(0) {:.10}",
                    l1_distance(&p),
                    q.value,
                    ft_at_zero(&p)
                );
            }
        }
    }
    Ok(())
}
