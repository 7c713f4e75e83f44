//! Squarefree decomposition.
//!
//! Characteristic 0 uses Yun's algorithm. In characteristic p the derivative
//! of a p-th power vanishes, so the repeated parts with exponent divisible by p
//! are peeled off by taking a p-th root and recursing.

use super::field::Field;
use super::poly::{gcd, Poly};
use crate::{Error, Result};

/// `scalar * prod(g_j ^ e_j)` with the `g_j` monic, squarefree, pairwise coprime.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreePart<F: Field> {
    pub scalar: F::Elem,
    /// Sorted by exponent; exponents are distinct.
    pub parts: Vec<(Poly<F>, u64)>,
}

impl<F: Field> SquarefreePart<F> {
    pub fn expand(&self, field: &F) -> Poly<F> {
        self.parts.iter().fold(
            Poly::constant(field.clone(), self.scalar.clone()),
            |acc, (g, e)| &acc * &g.pow(*e),
        )
    }
}

pub fn squarefree_decompose<F: Field>(f: &Poly<F>) -> Result<SquarefreePart<F>> {
    let Some(lc) = f.leading_coeff() else {
        return Err(Error::domain("squarefree decomposition of the zero polynomial"));
    };
    let scalar = lc.clone();
    let monic = f.monic();
    let mut parts = if f.field().characteristic() == 0 {
        yun(&monic)?
    } else {
        char_p(&monic)?
    };
    parts.sort_by_key(|(_, e)| *e);
    Ok(SquarefreePart { scalar, parts })
}

fn yun<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, u64)>> {
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = gcd(f, &df)?;
    let mut b = f.div_exact(&a0)?;
    let c = df.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        b = b.div_exact(&a)?;
        let c = d.div_exact(&a)?;
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

fn char_p<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, u64)>> {
    let field = f.field().clone();
    let p = field.characteristic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let mut c = gcd(f, &f.derivative())?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_constant() {
        let y = gcd(&w, &c)?;
        let z = w.div_exact(&y)?;
        if !z.is_constant() {
            out.push((z, i));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_constant() {
        let root = pth_root_poly(&c)?;
        for (g, e) in char_p(&root)? {
            out.push((g, e * p));
        }
    }
    Ok(out)
}

/// The polynomial `h` with `h^p = g`, for `g` whose derivative vanishes.
pub(crate) fn pth_root_poly<F: Field>(g: &Poly<F>) -> Result<Poly<F>> {
    let field = g.field().clone();
    let p = field.characteristic() as usize;
    let mut coeffs = Vec::new();
    for (i, c) in g.coeffs().iter().enumerate() {
        if i % p == 0 {
            let r = field
                .pth_root(c)
                .ok_or_else(|| Error::domain("coefficient field has no p-th roots"))?;
            coeffs.push(r);
        } else if !field.is_zero(c) {
            return Err(Error::domain("polynomial is not a p-th power"));
        }
    }
    Ok(Poly::from_coeffs(field, coeffs))
}
