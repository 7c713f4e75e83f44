//! Brute-force component counts that bypass the gcd-free basis and the Smith form.
//!
//! By Kummer theory over Q̄(t), `#comp([n]⁻¹X)` is the number of exponent
//! vectors `a ∈ (Z/n)^k` for which `∏ b_i^{a_i}` is an n-th power up to a
//! constant. The class group of the projective line is trivial, so this is
//! a condition on the multiplicities of the numerator and denominator alone.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::field::is_prime;
use crate::algebra::{
    factor_fp, gcd, squarefree_decompose, Field, FpPoly, Poly, PrimeField, QPoly, QRatFunc,
    Rationals,
};
use crate::lattice::DEFAULT_KERNEL_CAP;
use crate::{Error, Result};

use super::TorusCurve;

/// Whether `f = c · g^n` for a constant `c` and some `g ∈ Q̄(t)`.
pub fn oracle_is_nth_power(f: &QRatFunc, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    if f.is_zero() {
        return Err(Error::domain("zero is not in the multiplicative group"));
    }
    for p in [f.num(), f.den()] {
        if squarefree_decompose(p)?
            .parts
            .iter()
            .any(|(_, e)| e % n != 0)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn oracle_component_count(x: &TorusCurve, n: u64) -> Result<BigInt> {
    oracle_component_count_capped(x, n, DEFAULT_KERNEL_CAP)
}

/// Enumerates `(Z/n)^k`, refusing when `n^k` exceeds `cap`.
///
/// The n-th power condition only depends on the multiplicities of `f` at
/// the roots of `R`, the radical of all numerators and denominators. Modulo
/// a prime ℓ for which the monic data is ℓ-integral and `R mod ℓ` keeps its
/// degree and stays squarefree, distinct roots stay distinct, so these
/// multiplicities can be read off from the irreducible factors of
/// `R mod ℓ`. Each candidate `a` is then a congruence check. If no listed ℓ
/// qualifies, every candidate goes through [`oracle_is_nth_power`].
pub fn oracle_component_count_capped(x: &TorusCurve, n: u64, cap: u64) -> Result<BigInt> {
    check_enumeration(x, n, cap)?;
    let monic = monic_parts(x);
    match modular_valuations(&monic)? {
        Some(vals) => Ok(enumerate(x.k(), n, |a| {
            Ok(vals.iter().all(|col| {
                let s: i128 = col.iter().zip(a).map(|(&v, &e)| v as i128 * e as i128).sum();
                s.rem_euclid(n as i128) == 0
            }))
        })?),
        None => enumerate(x.k(), n, |a| exact_passes(&monic, a, n)),
    }
}

/// Same count, deciding every candidate with the exact n-th power test over Q.
/// Slow for high degrees; meant for cross-checking small cases.
pub fn oracle_component_count_exact(x: &TorusCurve, n: u64, cap: u64) -> Result<BigInt> {
    check_enumeration(x, n, cap)?;
    let monic = monic_parts(x);
    enumerate(x.k(), n, |a| exact_passes(&monic, a, n))
}

fn check_enumeration(x: &TorusCurve, n: u64, cap: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    let k = x.k();
    let total = BigInt::from(n).pow(k as u32);
    if total > BigInt::from(cap) {
        return Err(Error::Resource {
            what: format!("oracle enumeration of (Z/{n})^{k}"),
            needed: total.to_string(),
            cap,
        });
    }
    Ok(())
}

fn monic_parts(x: &TorusCurve) -> Vec<(QPoly, QPoly)> {
    x.coords()
        .iter()
        .map(|c| (c.num().monic(), c.den().clone()))
        .collect()
}

fn enumerate(k: usize, n: u64, mut pass: impl FnMut(&[u64]) -> Result<bool>) -> Result<BigInt> {
    let mut count = BigInt::zero();
    let mut a = vec![0u64; k];
    loop {
        if pass(&a)? {
            count += 1;
        }
        let mut i = 0;
        while i < k {
            a[i] += 1;
            if a[i] < n {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == k {
            return Ok(count);
        }
    }
}

fn exact_passes(monic: &[(QPoly, QPoly)], a: &[u64], n: u64) -> Result<bool> {
    let mut num = QPoly::one(Rationals);
    let mut den = QPoly::one(Rationals);
    for ((p, q), &e) in monic.iter().zip(a) {
        if e == 0 {
            continue;
        }
        num = &num * &p.pow(e);
        den = &den * &q.pow(e);
    }
    oracle_is_nth_power(&QRatFunc::new(num, den)?, n)
}

/// Large primes below 2^31, tried in order.
const GOOD_PRIME_CANDIDATES: [u64; 6] = [
    2_147_483_647,
    2_147_483_629,
    2_147_483_587,
    2_147_483_579,
    2_147_483_563,
    2_147_483_549,
];

/// For each place of `R mod ℓ`, the signed multiplicity of every coordinate.
fn modular_valuations(monic: &[(QPoly, QPoly)]) -> Result<Option<Vec<Vec<i64>>>> {
    let mut radical = QPoly::one(Rationals);
    for (p, q) in monic {
        for r in [p, q] {
            if r.is_constant() {
                continue;
            }
            let s = r.div_exact(&gcd(r, &r.derivative())?)?;
            let g = gcd(&radical, &s)?;
            radical = &radical * &s.div_exact(&g)?;
        }
    }
    if radical.is_constant() {
        return Ok(Some(Vec::new()));
    }
    for &l in &GOOD_PRIME_CANDIDATES {
        debug_assert!(is_prime(l));
        let field = PrimeField::new(l)?;
        let reduce = |p: &QPoly| -> Option<FpPoly> {
            let coeffs = p
                .coeffs()
                .iter()
                .map(|c| field.from_rational(c))
                .collect::<Option<Vec<_>>>()?;
            Some(Poly::from_coeffs(field, coeffs))
        };
        let Some(rbar) = reduce(&radical) else { continue };
        if rbar.degree() != radical.degree() || !gcd(&rbar, &rbar.derivative())?.is_one() {
            continue;
        }
        let Some(coords) = monic
            .iter()
            .map(|(p, q)| Some((reduce(p)?, reduce(q)?)))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let places = factor_fp(&rbar)?;
        let vals = places
            .iter()
            .map(|(pi, _)| {
                coords
                    .iter()
                    .map(|(p, q)| multiplicity(p, pi) as i64 - multiplicity(q, pi) as i64)
                    .collect()
            })
            .collect();
        return Ok(Some(vals));
    }
    Ok(None)
}

fn multiplicity(f: &FpPoly, pi: &FpPoly) -> u64 {
    let mut f = f.clone();
    let mut e = 0;
    while let Ok(q) = f.div_exact(pi) {
        f = q;
        e += 1;
    }
    e
}
