//! Reduction modulo x^p - x and level-one component counts over F_p.

use kummer_core::artin_schreier::{as_component_count, is_free_additive, wp_reduce};
use kummer_core::expr::parse_additive_curve;

fn main() -> kummer_core::Result<()> {
    for (p, text) in [(2, "t^4"), (2, "1/t^2 + t^6"), (3, "t^3 - t + 1/(t^2+1)^3"), (5, "t^10/(t-1)^5")] {
        let f = parse_additive_curve(text, p)?.coords()[0].clone();
        let w = wp_reduce(&f)?;
        println!("F_{p}: {text} = wp({}) + {}", w.g.display_in("t"), w.r.display_in("t"));
    }
    for (p, text) in [(2, "t, t^2 + t"), (2, "t, t^3"), (2, "1, 1"), (3, "t, t^3 + 2*t + 1, t^2")] {
        let x = parse_additive_curve(text, p)?;
        println!(
            "F_{p}: ({text}) components {} free {}",
            as_component_count(&x)?,
            is_free_additive(&x)?
        );
    }
    Ok(())
}
