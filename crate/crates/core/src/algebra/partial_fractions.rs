//! Partial fraction decomposition against irreducible denominators.

use super::factor_fp::factor_fp_seeded;
use super::field::{Field, PrimeField};
use super::poly::{inverse_mod, Poly};
use super::ratfunc::RatFunc;
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct PolePart<F: Field> {
    /// Irreducible monic place.
    pub place: Poly<F>,
    /// `(order, numerator)` with `deg numerator < deg place`, orders descending, no zero numerators.
    pub terms: Vec<(u64, Poly<F>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractions<F: Field> {
    pub poly_part: Poly<F>,
    pub poles: Vec<PolePart<F>>,
}

impl<F: Field> PartialFractions<F> {
    /// Sums the decomposition back into a single rational function.
    pub fn recombine(&self) -> RatFunc<F> {
        let mut acc = RatFunc::from_poly(self.poly_part.clone());
        for pole in &self.poles {
            for (m, c) in &pole.terms {
                acc = acc.add(&RatFunc::new(c.clone(), pole.place.pow(*m)).unwrap());
            }
        }
        acc
    }
}

/// Decomposes `f` given the factorization of its denominator into monic irreducibles.
pub fn partial_fractions_with<F: Field>(
    f: &RatFunc<F>,
    den_factors: &[(Poly<F>, u64)],
) -> Result<PartialFractions<F>> {
    let (poly_part, rem) = f.num().div_rem(f.den())?;
    let mut poles = Vec::with_capacity(den_factors.len());
    for (q, e) in den_factors {
        let local = q.pow(*e);
        let cofactor = f.den().div_exact(&local)?;
        // rem/den = sum over places of A/q^e with A = rem * cofactor^-1 mod q^e
        let mut a = (&rem * &inverse_mod(&cofactor.rem(&local)?, &local)?).rem(&local)?;
        let mut terms = Vec::new();
        for k in 0..*e {
            let (quot, c) = a.div_rem(q)?;
            if !c.is_zero() {
                terms.push((e - k, c));
            }
            a = quot;
        }
        terms.sort_by_key(|x| std::cmp::Reverse(x.0));
        if !terms.is_empty() {
            poles.push(PolePart {
                place: q.clone(),
                terms,
            });
        }
    }
    Ok(PartialFractions { poly_part, poles })
}

pub fn partial_fractions(f: &RatFunc<PrimeField>) -> Result<PartialFractions<PrimeField>> {
    partial_fractions_seeded(f, super::factor_fp::DEFAULT_SEED)
}

pub fn partial_fractions_seeded(
    f: &RatFunc<PrimeField>,
    seed: u64,
) -> Result<PartialFractions<PrimeField>> {
    let factors = if f.den().is_constant() {
        Vec::new()
    } else {
        factor_fp_seeded(f.den(), seed)?
    };
    partial_fractions_with(f, &factors)
}
