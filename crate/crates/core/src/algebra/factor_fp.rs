//! Factorization over prime fields (Cantor–Zassenhaus) and residue-field p-th roots.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::linalg;
use super::poly::{gcd, Poly};
use super::squarefree::squarefree_decompose;
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed;

type FpPoly = Poly<PrimeField>;

/// Irreducible monic factors with multiplicities, sorted by degree then coefficients.
pub fn factor_fp(f: &FpPoly) -> Result<Vec<(FpPoly, u64)>> {
    factor_fp_seeded(f, DEFAULT_SEED)
}

/// As [`factor_fp`] with an explicit seed for the equal-degree splitting.
/// The output does not depend on the seed.
pub fn factor_fp_seeded(f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, u64)>> {
    if f.is_zero() {
        return Err(Error::domain("factorization of the zero polynomial"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, e) in squarefree_decompose(f)?.parts {
        for (h, d) in distinct_degree(&g)? {
            for irr in equal_degree(&h, d, &mut rng)? {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    Ok(out)
}

/// `t^(p^k) mod m` by repeated p-th powering.
fn frobenius_iterate(x: &FpPoly, m: &FpPoly) -> Result<FpPoly> {
    let p = BigUint::from(m.field().modulus());
    x.pow_mod(&p, m)
}

fn distinct_degree(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let field = *f.field();
    let t = Poly::var(field);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut w = t.rem(&g)?;
    let mut i = 1;
    while g.deg0() >= 2 * i {
        w = frobenius_iterate(&w, &g)?;
        let h = gcd(&g, &(&w - &t))?;
        if !h.is_one() {
            g = g.div_exact(&h)?;
            w = w.rem(&g)?;
            out.push((h, i));
        }
        i += 1;
    }
    if !g.is_constant() {
        let d = g.deg0();
        out.push((g, d));
    }
    Ok(out)
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<FpPoly>> {
    let n = f.deg0();
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = *f.field();
    let p = field.modulus();
    loop {
        let coeffs = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = Poly::from_coeffs(field, coeffs);
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut acc = a.rem(f)?;
            let mut term = acc.clone();
            for _ in 1..d {
                term = (&term * &term).rem(f)?;
                acc = &acc + &term;
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            &a.pow_mod(&e, f)? - &Poly::one(field)
        };
        let g = gcd(&b, f)?;
        if !g.is_constant() && g.deg0() < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.div_exact(&g)?, d, rng)?);
            return Ok(out);
        }
    }
}

/// Irreducibility over F_p: no factor of degree ≤ n/2 divides `t^(p^d) - t`.
pub fn is_irreducible_fp(q: &FpPoly) -> Result<bool> {
    let Some(n) = q.degree() else {
        return Err(Error::domain("irreducibility of the zero polynomial"));
    };
    if n == 0 {
        return Ok(false);
    }
    let t = Poly::var(*q.field());
    let mut w = t.rem(q)?;
    for _ in 1..=n / 2 {
        w = frobenius_iterate(&w, q)?;
        if !gcd(q, &(&w - &t))?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique `e` with `deg e < deg q` and `e^p ≡ c (mod q)`, for irreducible `q`.
///
/// Frobenius `x ↦ x^p` is F_p-linear and bijective on the residue field
/// F_p[t]/q; we write its matrix on the basis 1, t, …, t^(n-1) and solve.
pub fn pth_root_mod(c: &FpPoly, q: &FpPoly) -> Result<FpPoly> {
    if !is_irreducible_fp(q)? {
        return Err(Error::domain(format!(
            "modulus {q} is reducible; factor it first"
        )));
    }
    let field = *q.field();
    let n = q.deg0();
    let c = c.rem(q)?;
    let tp = frobenius_iterate(&Poly::var(field), q)?;
    // column j = (t^j)^p = (t^p)^j mod q
    let mut cols = Vec::with_capacity(n);
    let mut acc = Poly::one(field);
    for _ in 0..n {
        cols.push(acc.clone());
        acc = (&acc * &tp).rem(q)?;
    }
    let matrix: Vec<Vec<u64>> = (0..n)
        .map(|i| cols.iter().map(|col| col.coeff(i)).collect())
        .collect();
    let rhs: Vec<u64> = (0..n).map(|i| c.coeff(i)).collect();
    let e = linalg::solve(&field, &matrix, &rhs)
        .ok_or_else(|| Error::domain("Frobenius is singular on a reducible modulus"))?;
    Ok(Poly::from_coeffs(field, e))
}
