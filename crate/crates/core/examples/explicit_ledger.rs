//! Itemized explicit formula for one test function at one height.
//!
//! cargo run --release --example explicit_ledger -- 1.0 1.0 100 minorant

use extremal_zeta::arith::{default_zero_table, sieve_von_mangoldt};
use extremal_zeta::explicit::{ledger, prime_cutoff};
use extremal_zeta::extremal::{ExtremalParams, Kind};
use extremal_zeta::report::to_json;

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: f64| args.get(i).map_or(Ok(d), |s| s.parse::<f64>());
    let (alpha, delta, t) = (num(0, 1.0)?, num(1, 1.0)?, num(2, 100.0)?);
    let kind: Kind = args.get(3).map_or(Ok(Kind::Minorant), |s| s.parse())?;

    let zeros = default_zero_table()?;
    let table = sieve_von_mangoldt(prime_cutoff(delta).max(2) + 1)?;
    let l = ledger(&ExtremalParams::from_raw(alpha, delta, kind)?, t, &zeros, &table)?;
    print!("{}", to_json(&l));
    println!(
        "residual {:.3e} vs budget {:.3e}: {}",
        l.residual.value,
        l.budget.value,
        if l.balanced() { "balanced" } else { "NOT balanced" }
    );
    Ok(())
}
