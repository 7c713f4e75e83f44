//! Reports on T/Z and the component-count function of `[n]⁻¹(X)`.
//!
//! Over characteristic 0 the Tate module of G_m^k is Ẑ^k, and the finite
//! quotients of the Kummer image are the cokernels of the valuation matrix
//! modulo n. Everything below is read off its elementary divisors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::lattice::{smith_normal_form, ElementaryDivisors};
use crate::{Error, Result};

use super::{valuation_matrix, TorusCurve, ValuationMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerReport {
    pub k: usize,
    pub divisors: ElementaryDivisors,
    pub free: bool,
    /// `[T : Z] = ∏ d_i`.
    pub index: Index,
    /// `d_k`, the exponent of T/Z; `None` when not free.
    pub exponent: Option<BigInt>,
    /// Primes dividing `d_k`, ascending; empty when not free.
    pub obstruction_primes: Vec<BigInt>,
    pub kummer_generic: bool,
    /// Least m with `mT ≤ Z`; `None` when not free.
    pub stabilizing_level: Option<BigInt>,
}

impl KummerReport {
    pub fn from_divisors(divisors: ElementaryDivisors) -> Self {
        let k = divisors.len();
        let free = divisors.rank() == k;
        let (index, exponent) = match divisors.index() {
            Some(idx) if free => (
                Index::Finite(idx),
                Some(divisors.last().cloned().unwrap_or_else(BigInt::one)),
            ),
            _ => (Index::Infinite, None),
        };
        let obstruction_primes = exponent.as_ref().map(prime_divisors).unwrap_or_default();
        let kummer_generic = exponent.as_ref().is_some_and(One::is_one);
        KummerReport {
            k,
            divisors,
            free,
            index,
            stabilizing_level: exponent.clone(),
            exponent,
            obstruction_primes,
            kummer_generic,
        }
    }

    /// `(free, divisors)` as a stable string, e.g. `free:(1,2)`.
    pub fn signature(&self) -> String {
        let tag = if self.free { "free" } else { "nonfree" };
        format!("{tag}:{}", self.divisors)
    }
}

pub fn analyze(x: &TorusCurve) -> Result<KummerReport> {
    Ok(analyze_with_valuation(x)?.1)
}

/// Like [`analyze`], also handing back the valuation matrix it was computed from.
pub fn analyze_with_valuation(x: &TorusCurve) -> Result<(ValuationMatrix, KummerReport)> {
    let vm = valuation_matrix(x)?;
    let snf = smith_normal_form(&vm.matrix);
    Ok((vm, KummerReport::from_divisors(snf.divisors)))
}

/// `[n]⁻¹(X)` is irreducible iff `Z + nT = T` iff every `gcd(d_i, n) = 1`.
pub fn is_n_kummer_generic(r: &KummerReport, n: u64) -> Result<bool> {
    Ok(component_count(r, n)?.is_one())
}

/// Only primes dividing `d_k` can obstruct, so this is a finite check.
pub fn is_kummer_generic(r: &KummerReport) -> bool {
    r.free && r.divisors.last().is_none_or(One::is_one)
}

/// Number of irreducible components of `[n]⁻¹(X)`: `∏ gcd(d_i, n)`, with `gcd(0, n) = n`.
pub fn component_count(r: &KummerReport, n: u64) -> Result<BigInt> {
    r.divisors.kernel_size_mod(n)
}

pub fn stabilizing_level(r: &KummerReport) -> Result<BigInt> {
    r.stabilizing_level
        .clone()
        .ok_or_else(|| Error::domain("no stabilizing level exists: index infinite"))
}

/// Checks `c(m·n) = c(m)` for all `1 ≤ n ≤ bound`.
///
/// Components of `[m]⁻¹X` are torsion translates of one another, so
/// `c(mn) = c(m) · c_Y(n)` for any component Y; equality means every
/// component is n-Kummer-generic for the tested n.
pub fn verify_stabilizing(r: &KummerReport, m: u64, bound: u64) -> Result<bool> {
    if m == 0 || bound == 0 {
        return Err(Error::domain("level and bound must be at least 1"));
    }
    let base = component_count(r, m)?;
    for n in 1..=bound {
        let mn = m
            .checked_mul(n)
            .ok_or_else(|| Error::domain("level times bound overflows"))?;
        if component_count(r, mn)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distinct prime divisors by trial division, ascending. Zero and units have none.
pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut n = num_traits::Signed::abs(n);
    if n.is_zero() {
        return out;
    }
    if let Some(mut m) = n.to_u64() {
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                out.push(BigInt::from(d));
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            out.push(BigInt::from(m));
        }
        return out;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            while n.is_multiple_of(&d) {
                n /= &d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}
