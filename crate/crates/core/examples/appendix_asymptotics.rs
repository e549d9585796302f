//! The two appendix integrals by quadrature against their main terms.

use extremal_zeta::analysis::{AlphaParam, QuadratureSpec};
use extremal_zeta::bounds::{appendix_a1, appendix_a2, appendix_a2_substituted};

fn main() -> anyhow::Result<()> {
    let spec = QuadratureSpec::default();
    for alpha in [0.6, 0.75, 1.0] {
        let a = AlphaParam::new(alpha)?;
        for x in [1e3, 1e4, 1e5, 1e6] {
            let r1 = appendix_a1(x, a, &spec)?;
            print!("a={alpha:<4} x={x:.0e}  A1 {:.6} ~ {:.6} (rel {:.3}{})", r1.numeric, r1.asymptotic, r1.relative_error(), if r1.near_one { ", near one" } else { "" });
            if alpha < 1.0 {
                let r2 = appendix_a2(x, a, &spec)?;
                let (sub, _) = appendix_a2_substituted(x, a, &spec)?;
                print!("  A2 {:.6e} ~ {:.6e} (rel {:.3}, substituted {:.6e})", r2.numeric, r2.asymptotic, r2.relative_error(), sub);
            }
            println!();
        }
    }
    Ok(())
}
