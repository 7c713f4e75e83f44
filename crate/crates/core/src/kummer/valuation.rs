//! The valuation matrix of a torus curve.
//!
//! Write every numerator and denominator over a common gcd-free basis
//! `q_1, …, q_s` of Q[t]; row i of `M` holds the exponents of `b_i`.
//!
//! Over an algebraically closed field the places of Q̄(t) are the roots of
//! the `q_j` (plus ∞), and a squarefree `q_j` has every root at the same
//! exponent, so the true place-by-place matrix just repeats column j once
//! per root. Duplicated columns never change `{a : a·M ≡ 0 mod n}`, hence
//! we never need to factor over Q. The infinite place is dropped: its
//! valuation is minus the sum of the others weighted by degree, so it is
//! divisible by n whenever the finite ones are. Constants carry no
//! valuation at all.

use crate::algebra::{gcdfree_basis, QPoly};
use crate::lattice::IntMatrix;
use crate::Result;

use super::TorusCurve;

#[derive(Clone, Debug, PartialEq)]
pub struct ValuationMatrix {
    /// Monic squarefree pairwise coprime finite-place support, in canonical order.
    pub basis: Vec<QPoly>,
    /// `k × s`; numerator exponents count positively, denominator exponents negatively.
    pub matrix: IntMatrix,
}

pub fn valuation_matrix(x: &TorusCurve) -> Result<ValuationMatrix> {
    let polys: Vec<QPoly> = x
        .coords()
        .iter()
        .flat_map(|c| [c.num().clone(), c.den().clone()])
        .collect();
    let gfb = gcdfree_basis(&polys)?;
    let s = gfb.basis.len();
    let rows: Vec<Vec<i64>> = (0..x.k())
        .map(|i| {
            (0..s)
                .map(|j| gfb.exponents[2 * i][j] as i64 - gfb.exponents[2 * i + 1][j] as i64)
                .collect()
        })
        .collect();
    Ok(ValuationMatrix {
        basis: gfb.basis,
        matrix: IntMatrix::from_rows(s, &rows),
    })
}
