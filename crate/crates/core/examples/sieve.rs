//! Von Mangoldt table, Chebyshev psi, and a CSV cache round trip.

use extremal_zeta::arith::{sieve_von_mangoldt, VonMangoldtTable};

fn main() -> anyhow::Result<()> {
    let t = sieve_von_mangoldt(1_000_000)?;
    println!("{} prime powers up to {}", t.entries.len(), t.limit);
    for x in [10u64, 100, 1000, 10_000, 100_000, 1_000_000] {
        let psi = t.chebyshev(x);
        println!("psi({x}) = {psi:.6}  psi/x = {:.6}", psi / x as f64);
    }
    let path = std::env::temp_dir().join("extremal_zeta_sieve_example.csv");
    let cached = VonMangoldtTable::load_or_build(&path, 10_000)?;
    println!("cache {} holds {} rows; Lambda(1024) = {:.6}", path.display(), cached.entries.len(), cached.lambda(1024));
    Ok(())
}
