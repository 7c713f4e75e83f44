//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::field::{Field, Rationals};
use crate::{Error, Result};

/// A polynomial in one variable, coefficients stored from the constant term up.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and `degree` is simply `len - 1`.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| field.from_int(n)).collect();
        Self::from_coeffs(field, c)
    }

    pub fn zero(field: F) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::constant(field, one)
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The variable itself.
    pub fn var(field: F) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::from_coeffs(field, vec![z, o])
    }

    /// `c * t^n`.
    pub fn monomial(field: F, c: F::Elem, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for size bounds.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| self.field.is_one(c))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::from_coeffs(
            f.clone(),
            self.coeffs.iter().map(|a| f.mul(a, c)).collect(),
        )
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field.is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc)),
        }
    }

    /// Multiplies by `t^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let Some(dd) = d.degree() else {
            return Err(Error::domain("division by the zero polynomial"));
        };
        let inv_lc = f.inv(d.leading_coeff().unwrap());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(&rem[i + dd], &inv_lc);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, dj));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((
            Self::from_coeffs(f.clone(), quot),
            Self::from_coeffs(f.clone(), rem),
        ))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient, provided `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::domain("inexact polynomial division"));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_int(i as i64), c))
            .collect();
        Self::from_coeffs(f.clone(), coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod m` for a big exponent given as a sequence of bits, most significant first.
    pub fn pow_mod_bits(&self, bits: &[bool], m: &Self) -> Result<Self> {
        let mut acc = Self::one(self.field.clone()).rem(m)?;
        let base = self.rem(m)?;
        for &b in bits {
            acc = (&acc * &acc).rem(m)?;
            if b {
                acc = (&acc * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn pow_mod(&self, e: &num_bigint::BigUint, m: &Self) -> Result<Self> {
        let bits: Vec<bool> = (0..e.bits()).rev().map(|i| e.bit(i)).collect();
        self.pow_mod_bits(&bits, m)
    }

    /// Substitutes the polynomial `g` for the variable.
    pub fn compose(&self, g: &Self) -> Self {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Self::zero(f.clone()), |acc, c| {
            &(&acc * g) + &Self::constant(f.clone(), c.clone())
        })
    }

    /// Deterministic ordering: degree first, then coefficients from the constant term up.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                match self.field.cmp_elem(a, b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, var }
    }
}

/// Monic gcd of two polynomials; fails only when both are zero.
pub fn gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd of two zero polynomials"));
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = y;
        y = r.monic();
    }
    Ok(x.monic())
}

/// Extended Euclid: returns `(g, s, u)` with `s*a + u*b = g`, `g` monic.
pub fn ext_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Result<(Poly<F>, Poly<F>, Poly<F>)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd of two zero polynomials"));
    }
    let field = a.field().clone();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(field.clone()), Poly::zero(field.clone()));
    let (mut u0, mut u1) = (Poly::zero(field.clone()), Poly::one(field.clone()));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let u = &u0 - &(&q * &u1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        u0 = std::mem::replace(&mut u1, u);
    }
    let lc_inv = field.inv(r0.leading_coeff().unwrap());
    Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), u0.scale(&lc_inv)))
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn inverse_mod<F: Field>(a: &Poly<F>, m: &Poly<F>) -> Result<Poly<F>> {
    let (g, s, _) = ext_gcd(a, m)?;
    if !g.is_one() {
        return Err(Error::domain("polynomial is not invertible modulo the given modulus"));
    }
    s.rem(m)
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("t"))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

pub struct PolyDisplay<'a, F: Field> {
    poly: &'a Poly<F>,
    var: &'a str,
}

struct ElemDisplay<'a, F: Field>(&'a F, &'a F::Elem);

impl<F: Field> fmt::Display for ElemDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_elem(self.1, f)
    }
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.poly.field();
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs().iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let one = field.is_one(c);
            match i {
                0 => write!(f, "{}", ElemDisplay(field, c))?,
                _ => {
                    if !one {
                        write!(f, "{}*", ElemDisplay(field, c))?;
                    }
                    write!(f, "{}", self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(f.clone(), coeffs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        let f = &self.field;
        Poly {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(),
        }
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f.clone());
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Poly::from_coeffs(f.clone(), coeffs)
    }
}

/// Number of distinct real roots of `p` in the closed interval `[a, b]`, by Sturm's theorem.
pub fn count_real_roots(p: &Poly<Rationals>, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::domain("root count of the zero polynomial"));
    }
    if a > b {
        return Ok(0);
    }
    // Strip rational roots sitting on the endpoints so Sturm's theorem applies.
    let mut p = p.clone();
    let mut on_ends = 0;
    for x in [a, b] {
        if p.eval(x).is_zero() {
            on_ends += 1;
            let lin = Poly::from_coeffs(Rationals, vec![-x.clone(), BigRational::from_integer(1.into())]);
            while p.eval(x).is_zero() {
                p = p.div_exact(&lin)?;
            }
        }
    }
    if a == b {
        return Ok(on_ends.min(1));
    }
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1])?;
        seq.push(-&r);
    }
    seq.pop();
    let sign_changes = |x: &BigRational| {
        let signs: Vec<bool> = seq
            .iter()
            .map(|q| q.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok(sign_changes(a) - sign_changes(b) + on_ends)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    fn q(c: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(Rationals, c)
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let f = q(&[2, 4]);
        assert_eq!(gcd(&f, &Poly::zero(Rationals)).unwrap(), q(&[1, 2]).monic());
        assert!(gcd(&Poly::zero(Rationals), &Poly::zero(Rationals)).is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&q(&[-1, 0, 1]), &q(&[1, -2, 1])).unwrap(), q(&[-1, 1]));
        let f2 = PrimeField::new(2).unwrap();
        let a = Poly::from_ints(f2, &[1, 0, 1]);
        let b = Poly::from_ints(f2, &[1, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), b);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = q(&[3, -1, 4, 1, -5]);
        let d = q(&[2, 0, 7]);
        let (qq, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&qq * &d) + &r, a);
        assert!(r.deg0() < 2);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = q(&[-1, 0, 1]);
        let b = q(&[1, 3, 3, 1]);
        let (g, s, u) = ext_gcd(&a, &b).unwrap();
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert_eq!(g, q(&[1, 1]));
    }

    #[test]
    fn sturm_counts() {
        // (t-1)(t+4) t
        let p = q(&[0, -4, 3, 1]);
        let r = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(count_real_roots(&p, &r(-5), &r(5)).unwrap(), 3);
        assert_eq!(count_real_roots(&p, &r(-4), &r(-4)).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &r(2), &r(7)).unwrap(), 0);
        assert_eq!(count_real_roots(&q(&[1, 0, 1]), &r(-9), &r(9)).unwrap(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(q(&[1, -2, 1]).to_string(), "t^2 + -2*t + 1");
    }
}
