//! The Fourier transform from its k-series next to an independent
//! quadrature, including points outside the support.

use extremal_zeta::extremal::{default_ft_spec, ft_at_zero, ft_series, ExtremalParams, FtQuadrature, Kind};

fn main() -> anyhow::Result<()> {
    for kind in Kind::BOTH {
        let p = ExtremalParams::from_raw(0.6, 1.0, kind)?;
        let q = FtQuadrature::new(p, &default_ft_spec(p.delta))?;
        println!("{kind}: closed form at 0 = {:.12}", ft_at_zero(&p));
        for xi in [0.0, 0.25, 0.5, 0.75, 0.99, 1.2, 2.0] {
            let s = ft_series(&p, xi);
            let n = q.transform(xi)?;
            println!("  xi={xi:<5} series {:>16.12} ({} terms)  quadrature {:>16.12} +- {:.1e}", s.value, s.k_terms, n.value, n.err_est);
        }
    }
    Ok(())
}
