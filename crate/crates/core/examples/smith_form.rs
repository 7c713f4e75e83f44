//! Valuation matrix of a curve and its Smith normal form.

use kummer_core::expr::parse_torus_curve;
use kummer_core::kummer::valuation_matrix;
use kummer_core::lattice::smith_normal_form;

fn main() -> kummer_core::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "t^2*(t-1), (t-1)^3/(t+1)^2, t*(t+1)".into());
    let x = parse_torus_curve(&text)?;
    let vm = valuation_matrix(&x)?;
    println!("basis:");
    for b in &vm.basis {
        println!("  {b}");
    }
    println!("M = {:?}", vm.matrix);
    let snf = smith_normal_form(&vm.matrix);
    println!("U = {:?}", snf.u);
    println!("V = {:?}", snf.v);
    println!("U M V = {:?}", snf.u.mul(&vm.matrix).mul(&snf.v));
    println!("divisors {}", snf.divisors);
    Ok(())
}
