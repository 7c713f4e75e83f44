use num_rational::BigRational;

use kummer_core::family::{degeneration_candidates, scan, FamilySpec};

fn main() -> kummer_core::Result<()> {
    let family = FamilySpec::parse("t, (1+t)^2 + c*t", "c")?;
    let values: Vec<BigRational> = (-12..=12).map(|v| BigRational::new(v.into(), 2.into())).collect();
    let result = scan(&family, &values);
    for (signature, witnesses) in &result.strata {
        let w: Vec<String> = witnesses.iter().map(ToString::to_string).collect();
        println!("{signature:<12} at c in {{{}}}", w.join(", "));
    }
    println!("max index {:?}", result.max_index.map(|i| i.to_string()));
    for p in degeneration_candidates(&family)? {
        println!("candidate: {}", p.display_in("c"));
    }
    Ok(())
}
