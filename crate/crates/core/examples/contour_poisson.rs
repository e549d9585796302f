//! Transforms of the two contour kernels and the Poisson-summed bracket.

use extremal_zeta::extremal::{contour_h, contour_k, poisson_bracket};

fn main() -> anyhow::Result<()> {
    let (a, b) = (0.25, 2.0);
    for w in [0.0, 0.1, 0.5, 1.0, -0.5] {
        let k = contour_k(w, a, b)?;
        let h = if w == 0.0 { None } else { Some(contour_h(w, a, b)?) };
        println!("w={w:>5}  k^ = {:.10} {:+.10}i  h^ = {:?}", k.re, k.im, h.map(|z| (z.re, z.im)));
    }
    for y in [0.1, 0.25, 0.5, 0.9] {
        let alt = poisson_bracket(y, a, b, 2000, true);
        let plain = poisson_bracket(y, a, b, 2000, false);
        println!("y={y:<4} alternating {alt:.12}  plain {plain:.12}");
    }
    Ok(())
}
