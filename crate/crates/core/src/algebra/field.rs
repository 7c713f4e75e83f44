//! Coefficient fields.
//!
//! Elements are plain values and all arithmetic goes through the field
//! object, so that a runtime modulus (or any other context) lives in one
//! place instead of inside every coefficient.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::ratfunc::RatFunc;

pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero; callers check first.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Image of a rational number, `None` when its denominator is not invertible.
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;
    /// Total order used only to make outputs deterministic.
    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// Inverse of Frobenius on elements, for fields of positive characteristic.
    fn pth_root(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(&self, r: &BigRational) -> Option<BigRational> {
        Some(r.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn cmp_elem(&self, a: &BigRational, b: &BigRational) -> Ordering {
        a.cmp(b)
    }
    fn fmt_elem(&self, a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
}

/// The prime field F_p for a machine-word prime p ≤ 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub const MAX_PRIME: u64 = 1 << 31;

impl PrimeField {
    pub fn new(p: u64) -> crate::Result<Self> {
        if p > MAX_PRIME {
            return Err(crate::Error::domain(format!(
                "prime {p} exceeds the supported bound 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(crate::Error::domain(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_big(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        // Fermat
        self.pow(a, self.p - 2)
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn from_rational(&self, r: &BigRational) -> Option<u64> {
        let den = self.reduce_big(r.denom());
        if den == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_big(r.numer()), &self.inv(&den)))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn cmp_elem(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }
    fn fmt_elem(&self, a: &u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
    fn pth_root(&self, a: &u64) -> Option<u64> {
        // Frobenius is the identity on the prime field.
        Some(*a)
    }
}

/// The rational function field Q(c) in a parameter, used as the coefficient
/// field when a family of curves is treated generically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RationalFunctions;

impl Field for RationalFunctions {
    type Elem = RatFunc<Rationals>;

    fn zero(&self) -> Self::Elem {
        RatFunc::zero(Rationals)
    }
    fn one(&self) -> Self::Elem {
        RatFunc::one(Rationals)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        a.inv().expect("inverse of zero rational function")
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        RatFunc::constant(Rationals, Rationals.from_int(n))
    }
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem> {
        Some(RatFunc::constant(Rationals, r.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        a.num()
            .cmp_canonical(b.num())
            .then_with(|| a.den().cmp_canonical(b.den()))
    }
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", a.display_in("c"))
    }
}

pub(crate) fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
