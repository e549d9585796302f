//! Euler-Maclaurin zeta values, Hardy's Z, and the first few zeros.

use extremal_zeta::arith::{default_zero_table, hardy_z, log_abs_zeta, riemann_siegel_theta, zeta_euler_maclaurin};

fn main() -> anyhow::Result<()> {
    for (s, t) in [(2.0, 0.0), (0.5, 14.0), (0.5, 1000.0), (0.75, 100.0), (1.0, 1e4)] {
        let z = zeta_euler_maclaurin(s, t, 10)?;
        println!("zeta({s} + {t}i) = {:.14} {:+.14}i  (err {:.1e})", z.value.re, z.value.im, z.err_est);
    }
    println!("log|zeta(0.6 + 500i)| = {:.12}", log_abs_zeta(0.6, 500.0)?.value);
    let zeros = default_zero_table()?;
    for g in &zeros.ordinates[..5] {
        println!("zero {g:.12}: theta {:.6}, Z {:+.2e}", riemann_siegel_theta(*g), hardy_z(*g));
    }
    Ok(())
}
