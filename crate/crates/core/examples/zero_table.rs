//! Generate a zero table by locating sign changes of Hardy's Z function
//! between Gram points, then write it in the table format.
//!
//! cargo run --release --example zero_table -- 5000 data/zeros_5000.txt

use extremal_zeta::arith::{find_first_zero, generate_zeros, riemann_von_mangoldt};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let height: f64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1000.0);
    let out = args.next();

    println!("first zero: {:.12}", find_first_zero());
    let table = generate_zeros(height)?;
    let n = table.ordinates.len();
    println!(
        "{n} zeros below {:.6}; counting formula gives {:.3}",
        table.coverage_height,
        riemann_von_mangoldt(table.coverage_height)
    );
    match out {
        Some(path) => {
            std::fs::write(&path, table.to_text())?;
            println!("wrote {path}");
        }
        None => {
            for g in table.ordinates.iter().rev().take(5).rev() {
                println!("  {g:.12}");
            }
        }
    }
    Ok(())
}
