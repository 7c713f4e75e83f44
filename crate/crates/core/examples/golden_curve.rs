//! The parabola y = (1 + x)^2 in G_m^2: free, but its 2-fold pullback splits.

use kummer_core::expr::parse_torus_curve;
use kummer_core::kummer::{analyze, component_count, is_n_kummer_generic};

fn main() -> kummer_core::Result<()> {
    let x = parse_torus_curve("t, (1+t)^2")?;
    let r = analyze(&x)?;
    println!("X = ({x})");
    println!("divisors {}  free {}  index {}", r.divisors, r.free, r.index);
    for n in 1..=8 {
        println!(
            "  [{n}]^-1 X: {} component(s), {}-Kummer-generic: {}",
            component_count(&r, n)?,
            n,
            is_n_kummer_generic(&r, n)?
        );
    }
    // One branch of the square root, y = 1 + x^2, is itself generic.
    let y = parse_torus_curve("t, 1 + t^2")?;
    println!("component ({y}) Kummer-generic: {}", analyze(&y)?.kummer_generic);
    Ok(())
}
