//! Tabulate the minorant and majorant against f_alpha on a short grid.
//!
//! cargo run --release --example extremal_eval -- 0.75 1.0

use extremal_zeta::analysis::f_alpha;
use extremal_zeta::extremal::{ExtremalFunction, ExtremalParams, Kind};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<f64>());
    let alpha = args.next().transpose()?.unwrap_or(0.75);
    let delta = args.next().transpose()?.unwrap_or(1.0);

    let lo = ExtremalFunction::new(ExtremalParams::from_raw(alpha, delta, Kind::Minorant)?);
    let hi = ExtremalFunction::new(ExtremalParams::from_raw(alpha, delta, Kind::Majorant)?);
    let a = lo.params().alpha;
    println!("{:>8} {:>14} {:>14} {:>14}", "x", "g(x)", "f(x)", "m(x)");
    for i in 0..=16 {
        let x = i as f64 * 0.25;
        let (g, m) = (lo.eval(x), hi.eval(x));
        println!("{x:8.2} {:14.10} {:14.10} {:14.10}", g.value, f_alpha(x, a), m.value);
    }
    // the minorant interpolates at half-integers / delta, the majorant at integers / delta
    let x = 0.5 / delta;
    println!("g({x}) - f({x}) = {:.2e}", lo.eval(x).value - f_alpha(x, a));
    Ok(())
}
