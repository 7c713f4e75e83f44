//! Two independent freeness tests.
//!
//! A curve lies in a translate of a proper subgroup of G_m^k iff some nonzero
//! character `∏ b_i^{a_i}` is constant along it. The rank test reads this off
//! the valuation matrix. The alternant test never builds that matrix: the
//! summation map `X^k → G_m^k` is dominant iff the alternant
//! `det[(b_i'/b_i)(t_j)]` is not identically zero, which happens iff the
//! logarithmic derivatives are linearly independent over the constants.

use crate::algebra::{gcd, linalg, log_derivative, QPoly, Rationals};
use crate::lattice::rank;
use crate::Result;

use super::{valuation_matrix, TorusCurve};

pub fn is_free_rank(x: &TorusCurve) -> Result<bool> {
    Ok(rank(&valuation_matrix(x)?.matrix) == x.k())
}

pub fn is_free_alternant(x: &TorusCurve) -> Result<bool> {
    let logs = x
        .coords()
        .iter()
        .map(log_derivative)
        .collect::<Result<Vec<_>>>()?;
    // Bring everything over one denominator, then compare numerator coefficient vectors.
    let mut common = QPoly::one(Rationals);
    for l in &logs {
        let g = gcd(&common, l.den())?;
        common = &common * &l.den().div_exact(&g)?;
    }
    let nums = logs
        .iter()
        .map(|l| Ok(l.num() * &common.div_exact(l.den())?))
        .collect::<Result<Vec<QPoly>>>()?;
    let width = nums.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Vec<_>> = nums
        .iter()
        .map(|p| (0..width).map(|i| p.coeff(i)).collect())
        .collect();
    Ok(linalg::rank(&Rationals, &rows) == x.k())
}
