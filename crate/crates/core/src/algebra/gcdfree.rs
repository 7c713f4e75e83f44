//! Coprime refinement of a finite set of polynomials.

use super::field::Field;
use super::poly::{gcd, Poly};
use super::squarefree::squarefree_decompose;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct GcdFreeBasis<F: Field> {
    /// Monic, squarefree, pairwise coprime, nonconstant; sorted by degree then coefficients.
    pub basis: Vec<Poly<F>>,
    /// `exponents[i][j]` is the multiplicity of `basis[j]` in the i-th input.
    pub exponents: Vec<Vec<u64>>,
}

/// Refines `polys` into pairwise coprime squarefree factors such that every
/// (monic) input is a product of basis powers.
///
/// Constants get an all-zero exponent row. Zero is rejected.
pub fn gcdfree_basis<F: Field>(polys: &[Poly<F>]) -> Result<GcdFreeBasis<F>> {
    let mut basis: Vec<Poly<F>> = Vec::new();
    for p in polys {
        if p.is_zero() {
            return Err(Error::domain("gcd-free basis of the zero polynomial"));
        }
        for (g, _) in squarefree_decompose(p)?.parts {
            insert(&mut basis, g)?;
        }
    }
    basis.sort_by(|a, b| a.cmp_canonical(b));

    let mut exponents = Vec::with_capacity(polys.len());
    for p in polys {
        let mut rest = p.monic();
        let mut row = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(b)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            row.push(e);
        }
        debug_assert!(rest.is_one(), "basis does not cover input");
        exponents.push(row);
    }
    Ok(GcdFreeBasis { basis, exponents })
}

/// Adds the squarefree `a` to a pairwise coprime squarefree list, splitting on common factors.
fn insert<F: Field>(basis: &mut Vec<Poly<F>>, a: Poly<F>) -> Result<()> {
    let mut a = a.monic();
    let mut i = 0;
    while i < basis.len() && !a.is_constant() {
        let g = gcd(&a, &basis[i])?;
        if g.is_constant() {
            i += 1;
            continue;
        }
        // g holds every common factor, so a/g and b/g are coprime; both are
        // coprime to g because a and b are squarefree.
        let b = basis.remove(i);
        let b_rest = b.div_exact(&g)?;
        a = a.div_exact(&g)?;
        basis.push(g);
        if !b_rest.is_constant() {
            basis.push(b_rest);
        }
    }
    if !a.is_constant() {
        basis.push(a);
    }
    Ok(())
}
