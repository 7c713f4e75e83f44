//! The additive analogue in characteristic p: curves in G_a^k pulled back
//! along the Artin–Schreier map ℘(x) = x^p − x.
//!
//! The constant field is taken algebraically closed, so ℘ is onto on
//! constants and "f ∈ ℘(F) + K" is decided by reducing f modulo ℘(F) and
//! asking whether a constant is left. Coefficients stay in the prime field,
//! where Frobenius is the identity.

use num_bigint::BigInt;

use crate::algebra::factor_fp::{factor_fp_seeded, DEFAULT_SEED};
use crate::algebra::partial_fractions::partial_fractions_with;
use crate::algebra::{linalg, pth_root_mod, Field, FpPoly, FpRatFunc, Poly, PrimeField};
use crate::lattice::DEFAULT_KERNEL_CAP;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct AdditiveCurve {
    field: PrimeField,
    coords: Vec<FpRatFunc>,
}

impl AdditiveCurve {
    pub fn new(field: PrimeField, coords: Vec<FpRatFunc>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain("an additive curve needs at least one coordinate"));
        }
        if coords.iter().any(|c| c.field() != &field) {
            return Err(Error::domain("coordinates live over a different prime field"));
        }
        Ok(AdditiveCurve { field, coords })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.modulus()
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FpRatFunc] {
        &self.coords
    }
}

/// `f = ℘(g) + r` with `r` reduced: no polynomial term `t^i` with `p | i ≥ 1`
/// and no pole term of order divisible by p at any place.
#[derive(Clone, Debug, PartialEq)]
pub struct WpReducedForm {
    pub g: FpRatFunc,
    pub r: FpRatFunc,
}

/// `x^p − x`.
pub fn wp(x: &FpRatFunc) -> FpRatFunc {
    let p = x.field().modulus();
    x.pow(p as i64).expect("nonnegative power").sub(x)
}

pub fn wp_reduce(f: &FpRatFunc) -> Result<WpReducedForm> {
    wp_reduce_seeded(f, DEFAULT_SEED)
}

pub fn wp_reduce_seeded(f: &FpRatFunc, seed: u64) -> Result<WpReducedForm> {
    let field = *f.field();
    let p = field.modulus();
    // Reduction only ever removes poles, so the places of f suffice throughout.
    let places: Vec<FpPoly> = if f.den().is_constant() {
        Vec::new()
    } else {
        factor_fp_seeded(f.den(), seed)?
            .into_iter()
            .map(|(q, _)| q)
            .collect()
    };
    let mut g = FpRatFunc::zero(field);
    let mut r = f.clone();
    loop {
        let mut den_factors = Vec::new();
        let mut rest = r.den().clone();
        for q in &places {
            let mut e = 0;
            while let Ok(quot) = rest.div_exact(q) {
                rest = quot;
                e += 1;
            }
            if e > 0 {
                den_factors.push((q.clone(), e));
            }
        }
        debug_assert!(rest.is_constant());
        let pf = partial_fractions_with(&r, &den_factors)?;

        // For each place, strip the top pole term whose order is divisible by p,
        // and likewise the top such polynomial term; ℘ is additive so these
        // corrections can be applied together.
        let mut h = FpRatFunc::zero(field);
        for pole in &pf.poles {
            if let Some((m, c)) = pole.terms.iter().find(|(m, _)| m % p == 0) {
                let e = pth_root_mod(c, &pole.place)?;
                h = h.add(&FpRatFunc::new(e, pole.place.pow(m / p))?);
            }
        }
        let coeffs = pf.poly_part.coeffs();
        if let Some(i) = (1..coeffs.len())
            .rev()
            .find(|&i| (i as u64).is_multiple_of(p) && coeffs[i] != 0)
        {
            let root = field.pth_root(&coeffs[i]).unwrap();
            h = h.add(&FpRatFunc::from_poly(Poly::monomial(field, root, i / p as usize)));
        }
        if h.is_zero() {
            return Ok(WpReducedForm { g, r });
        }
        r = r.sub(&wp(&h));
        g = g.add(&h);
    }
}

/// `f ∈ ℘(F) + K`, i.e. the reduced remainder is constant.
pub fn is_wp_member(f: &FpRatFunc) -> Result<bool> {
    Ok(wp_reduce(f)?.r.is_constant())
}

/// Components of `℘⁻¹(X)`: `#{a ∈ F_p^k : Σ a_i b_i ∈ ℘(F) + K}`.
pub fn as_component_count(x: &AdditiveCurve) -> Result<BigInt> {
    as_component_count_capped(x, DEFAULT_KERNEL_CAP, DEFAULT_SEED)
}

/// Each coordinate is reduced once. A linear combination of reduced forms
/// is again reduced (term orders prime to p survive addition or cancel), so
/// the combination is a member iff the combined remainder is constant.
pub fn as_component_count_capped(x: &AdditiveCurve, cap: u64, seed: u64) -> Result<BigInt> {
    let p = x.p();
    let k = x.k();
    let total = BigInt::from(p).pow(k as u32);
    if total > BigInt::from(cap) {
        return Err(Error::Resource {
            what: format!("enumeration of F_{p}^{k}"),
            needed: total.to_string(),
            cap,
        });
    }
    let field = x.field();
    let reduced = x
        .coords()
        .iter()
        .map(|c| Ok(wp_reduce_seeded(c, seed)?.r))
        .collect::<Result<Vec<_>>>()?;
    let mut count = 0u64;
    let mut a = vec![0u64; k];
    loop {
        let combo = a
            .iter()
            .zip(&reduced)
            .fold(FpRatFunc::zero(field), |acc, (&ai, r)| {
                if ai == 0 {
                    acc
                } else {
                    acc.add(&r.scale(&ai))
                }
            });
        if combo.is_constant() {
            count += 1;
        }
        let mut i = 0;
        while i < k {
            a[i] += 1;
            if a[i] < p {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == k {
            return Ok(BigInt::from(count));
        }
    }
}

/// `℘⁻¹(X)` is irreducible.
pub fn is_as_generic_level1(x: &AdditiveCurve) -> Result<bool> {
    Ok(as_component_count(x)? == BigInt::from(1))
}

/// Dominance of the summation map `X^k → G_a^k`, via linear independence of
/// the derivatives `b_i'` over the constants.
///
/// A parametrization through `t^p` has zero derivative without the curve
/// being special (`t ↦ (t^p, t^{2p})` traces the same curve as
/// `t ↦ (t, t^2)`), so such common Frobenius twists are undone first.
pub fn is_free_additive(x: &AdditiveCurve) -> Result<bool> {
    let field = x.field();
    let mut coords = x.coords().to_vec();
    while coords.iter().all(|c| c.derivative().is_zero()) && !coords.iter().all(|c| c.is_constant())
    {
        coords = coords
            .iter()
            .map(|c| {
                FpRatFunc::new(
                    crate::algebra::squarefree::pth_root_poly(c.num())?,
                    crate::algebra::squarefree::pth_root_poly(c.den())?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let derivs: Vec<FpRatFunc> = coords.iter().map(FpRatFunc::derivative).collect();
    let mut common = FpPoly::one(field);
    for d in &derivs {
        let g = crate::algebra::gcd(&common, d.den())?;
        common = &common * &d.den().div_exact(&g)?;
    }
    let nums = derivs
        .iter()
        .map(|d| Ok(d.num() * &common.div_exact(d.den())?))
        .collect::<Result<Vec<FpPoly>>>()?;
    let width = nums.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Vec<u64>> = nums
        .iter()
        .map(|p| (0..width).map(|i| p.coeff(i)).collect())
        .collect();
    Ok(linalg::rank(&field, &rows) == x.k())
}
