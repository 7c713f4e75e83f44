//! Lattice component counts against brute-force enumeration on random curves.

use kummer_core::corpus::random_corpus;
use kummer_core::kummer::{analyze, component_count, oracle_component_count};

fn main() -> kummer_core::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut mismatches = 0;
    for x in random_corpus(seed, 25) {
        let r = analyze(&x)?;
        let counts: Vec<String> = (2..=8)
            .map(|n| {
                let lattice = component_count(&r, n)?;
                let brute = oracle_component_count(&x, n)?;
                if lattice != brute {
                    mismatches += 1;
                }
                Ok(lattice.to_string())
            })
            .collect::<kummer_core::Result<_>>()?;
        println!("{:<14} c(2..8) = {:<22} {x}", r.signature(), counts.join(" "));
    }
    println!("mismatches: {mismatches}");
    Ok(())
}
