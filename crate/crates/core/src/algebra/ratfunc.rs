//! Rational functions in one variable, kept in lowest terms with a monic denominator.

use std::fmt;

use super::field::Field;
use super::poly::{gcd, Poly};
use crate::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        if num.is_zero() {
            return Ok(Self::zero(num.field().clone()));
        }
        let g = gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let field = den.field().clone();
        let lc_inv = field.inv(den.leading_coeff().unwrap());
        Ok(RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let one = Poly::one(p.field().clone());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: F) -> Self {
        Self::from_poly(Poly::zero(field))
    }

    pub fn one(field: F) -> Self {
        Self::from_poly(Poly::one(field))
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::from_poly(Poly::constant(field, c))
    }

    pub fn var(field: F) -> Self {
        Self::from_poly(Poly::var(field))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn field(&self) -> &F {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// In lowest terms a constant has constant numerator and denominator 1.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).unwrap();
        }
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
        .unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).unwrap()
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of the zero rational function"));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        // Powers of coprime polynomials stay coprime.
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).unwrap()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &F::Elem) -> Option<F::Elem> {
        let d = self.den.eval(x);
        let f = self.field();
        if f.is_zero(&d) {
            return None;
        }
        Some(f.div(&self.num.eval(x), &d))
    }

    /// Substitutes the rational function `g` for the variable.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let f = self.field().clone();
        let horner = |p: &Poly<F>| {
            p.coeffs().iter().rev().fold(Self::zero(f.clone()), |acc, c| {
                acc.mul(g).add(&Self::constant(f.clone(), c.clone()))
            })
        };
        horner(&self.num).div(&horner(&self.den))
    }

    /// Leading coefficient of the numerator; the scalar factor of the function.
    pub fn leading_scalar(&self) -> F::Elem {
        self.num
            .leading_coeff()
            .cloned()
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn display_in<'a>(&'a self, var: &'a str) -> RatFuncDisplay<'a, F> {
        RatFuncDisplay { f: self, var }
    }
}

/// `f'/f` in lowest terms.
pub fn log_derivative<F: Field>(f: &RatFunc<F>) -> Result<RatFunc<F>> {
    if f.is_zero() {
        return Err(Error::domain("logarithmic derivative of zero"));
    }
    // (n/d)'/(n/d) = (n' d - n d') / (n d)
    let num = &(&f.num.derivative() * &f.den) - &(&f.num * &f.den.derivative());
    RatFunc::new(num, &f.num * &f.den)
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.display_in("t"))
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

pub struct RatFuncDisplay<'a, F: Field> {
    f: &'a RatFunc<F>,
    var: &'a str,
}

impl<F: Field> fmt::Display for RatFuncDisplay<'_, F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.den.is_one() {
            write!(out, "{}", self.f.num.display_in(self.var))
        } else {
            write!(
                out,
                "({})/({})",
                self.f.num.display_in(self.var),
                self.f.den.display_in(self.var)
            )
        }
    }
}
