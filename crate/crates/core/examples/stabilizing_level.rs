use kummer_core::expr::parse_torus_curve;
use kummer_core::kummer::{analyze, component_count, stabilizing_level, verify_stabilizing};

fn main() -> kummer_core::Result<()> {
    for text in ["t, (1+t)^2", "t, (1+t)^6*t^3", "t^4*(t+1)^2, (t+1)^5", "t, t^2"] {
        let r = analyze(&parse_torus_curve(text)?)?;
        match stabilizing_level(&r) {
            Ok(m) => {
                let m: u64 = m.try_into().expect("small level");
                let smaller: Vec<u64> = (1..m).filter(|&l| verify_stabilizing(&r, l, 20).unwrap()).collect();
                println!(
                    "({text}): level {m}, c(m) = {}, verified {}, smaller levels passing {smaller:?}",
                    component_count(&r, m)?,
                    verify_stabilizing(&r, m, 20)?
                );
            }
            Err(e) => println!("({text}): {e}"),
        }
    }
    Ok(())
}
