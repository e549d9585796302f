//! Runs the two prime-sum lemmas over their parameter grid and shows the
//! prime-sum bound in its two regimes.

use extremal_zeta::analysis::AlphaParam;
use extremal_zeta::bounds::{lemma_grid, lemma_grid_check, prime_sum_bound};

fn main() -> anyhow::Result<()> {
    let (a, b) = lemma_grid_check();
    println!("grid points {}", lemma_grid().len());
    println!("consecutive-term inequality: {}/{} hold", a.cases - a.failures, a.cases);
    println!("k-sum inequality:            {}/{} hold", b.cases - b.failures, b.cases);
    for (x, alpha) in [(20f64.exp(), 0.6), (20f64.exp(), 0.97), (1e6, 0.75)] {
        let p = prime_sum_bound(x, AlphaParam::new(alpha)?);
        println!("x={x:.3e} a={alpha}: {:?} main {:.4} total {:.4}", p.regime, p.main_term, p.total);
    }
    Ok(())
}
