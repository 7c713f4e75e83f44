//! One-parameter families of curves in a fixed torus `G_m^k`.
//!
//! Fibres are analysed by sampling. [`degeneration_candidates`] returns
//! polynomials in the parameter whose roots contain every value where the
//! shape of the gcd-free basis can change, so signatures are constant on
//! the intervals between their real roots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::poly::count_real_roots;
use crate::algebra::{gcd, gcdfree_basis, linalg, Field, Poly, QPoly, RatFunc, RationalFunctions, Rationals};
use crate::expr::{parse_list, Expr};
use crate::kummer::{analyze, Index, KummerReport, TorusCurve};
use crate::{Error, Result};

type GenericPoly = Poly<RationalFunctions>;

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    coords: Vec<Expr>,
    param: String,
}

impl FamilySpec {
    /// Rejects families whose coordinates vanish or are undefined for
    /// generic values of the parameter.
    pub fn new(coords: Vec<Expr>, param: impl Into<String>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain("a family needs at least one coordinate"));
        }
        let spec = FamilySpec { coords, param: param.into() };
        spec.generic_coords()?;
        Ok(spec)
    }

    /// Parses `"b_1, …, b_k"` where the `b_i` may mention `param`.
    pub fn parse(text: &str, param: &str) -> Result<Self> {
        let coords = parse_list(text, Some(param))?.into_iter().map(|(e, _)| e).collect();
        FamilySpec::new(coords, param)
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Expr] {
        &self.coords
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    /// Coordinates as rational functions in `t` over `Q(param)`.
    pub fn generic_coords(&self) -> Result<Vec<RatFunc<RationalFunctions>>> {
        let c = RatFunc::var(Rationals);
        self.coords
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let f = e.eval(&RationalFunctions, Some(&c)).map_err(|err| {
                    Error::domain(format!("coordinate {} is undefined generically: {err}", i + 1))
                })?;
                if f.is_zero() {
                    return Err(Error::domain(format!(
                        "coordinate {} vanishes identically",
                        i + 1
                    )));
                }
                Ok(f)
            })
            .collect()
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, e) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e.display_with(&self.param))?;
        }
        Ok(())
    }
}

pub fn specialize(family: &FamilySpec, c: &BigRational) -> Result<TorusCurve> {
    let coords = family
        .coords
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let bad = |why: &str| {
                Error::domain(format!(
                    "coordinate {} {why} at {} = {}",
                    i + 1,
                    family.param,
                    crate::algebra::field::rational_to_string(c)
                ))
            };
            let f = e.eval(&Rationals, Some(c)).map_err(|_| bad("is undefined"))?;
            if f.is_zero() {
                return Err(bad("vanishes identically"));
            }
            Ok(f)
        })
        .collect::<Result<Vec<_>>>()?;
    TorusCurve::new(coords)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub value: BigRational,
    /// The report, or the reason this value could not be specialized.
    pub outcome: std::result::Result<KummerReport, String>,
}

impl ScanRow {
    pub fn signature(&self) -> Option<String> {
        self.outcome.as_ref().ok().map(KummerReport::signature)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    /// Ascending by value, one row per distinct value.
    pub rows: Vec<ScanRow>,
    /// Signature to the values exhibiting it, ascending. Errors are keyed `"error"`.
    pub strata: BTreeMap<String, Vec<BigRational>>,
    /// Largest index over free fibres; `None` if no sampled fibre is free.
    pub max_index: Option<BigInt>,
}

/// Analyses each fibre. Duplicate values are collapsed.
pub fn scan(family: &FamilySpec, values: &[BigRational]) -> ScanResult {
    let mut values = values.to_vec();
    values.sort();
    values.dedup();
    let rows: Vec<ScanRow> = values
        .into_iter()
        .map(|value| {
            let outcome = specialize(family, &value)
                .and_then(|x| analyze(&x))
                .map_err(|e| e.to_string());
            ScanRow { value, outcome }
        })
        .collect();
    let mut strata: BTreeMap<String, Vec<BigRational>> = BTreeMap::new();
    let mut max_index: Option<BigInt> = None;
    for row in &rows {
        let key = row.signature().unwrap_or_else(|| "error".to_string());
        strata.entry(key).or_default().push(row.value.clone());
        if let Ok(KummerReport { index: Index::Finite(i), .. }) = &row.outcome {
            if max_index.as_ref().is_none_or(|m| i > m) {
                max_index = Some(i.clone());
            }
        }
    }
    ScanResult { rows, strata, max_index }
}

/// Monic nonconstant polynomials in the parameter: leading coefficients,
/// discriminants and pairwise resultants of the generic gcd-free basis,
/// plus numerator and denominator of each coordinate's leading scalar.
pub fn degeneration_candidates(family: &FamilySpec) -> Result<Vec<QPoly>> {
    let coords = family.generic_coords()?;
    let mut polys: Vec<GenericPoly> = Vec::new();
    let mut out: Vec<QPoly> = Vec::new();
    for f in &coords {
        polys.push(f.num().clone());
        polys.push(f.den().clone());
        let s = f.leading_scalar();
        out.push(s.num().clone());
        out.push(s.den().clone());
    }
    let basis: Vec<GenericPoly> = gcdfree_basis(&polys)?
        .basis
        .iter()
        .map(clear_denominators)
        .collect();
    for (i, b) in basis.iter().enumerate() {
        out.push(b.leading_coeff().expect("basis elements are nonzero").num().clone());
        out.push(resultant(b, &b.derivative()));
        for other in &basis[i + 1..] {
            out.push(resultant(b, other));
        }
    }
    let mut out: Vec<QPoly> = out
        .into_iter()
        .filter(|p| !p.is_constant())
        .map(|p| p.monic())
        .collect();
    out.sort_by(|a, b| a.cmp_canonical(b));
    out.dedup();
    Ok(out)
}

/// Whether some candidate has a real root in the closed interval `[a, b]`.
pub fn candidate_root_between(candidates: &[QPoly], a: &BigRational, b: &BigRational) -> Result<bool> {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    for p in candidates {
        if count_real_roots(p, lo, hi)? > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Scales so every coefficient is a polynomial in the parameter, with no
/// common polynomial factor.
fn clear_denominators(b: &GenericPoly) -> GenericPoly {
    let mut l = QPoly::one(Rationals);
    for c in b.coeffs() {
        let g = gcd(&l, c.den()).expect("denominators are nonzero");
        l = &l * &c.den().div_exact(&g).expect("gcd divides");
    }
    let scaled: Vec<QPoly> = b
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mul(&RatFunc::from_poly(l.clone()));
            debug_assert!(r.is_polynomial());
            r.num().clone()
        })
        .collect();
    let content = scaled
        .iter()
        .filter(|p| !p.is_zero())
        .fold(QPoly::zero(Rationals), |g, p| gcd(&g, p).expect("nonzero input"));
    let coeffs = scaled
        .iter()
        .map(|p| RatFunc::from_poly(p.div_exact(&content).expect("content divides")))
        .collect();
    Poly::from_coeffs(RationalFunctions, coeffs)
}

/// Sylvester resultant in `t`, as a polynomial in the parameter.
fn resultant(a: &GenericPoly, b: &GenericPoly) -> QPoly {
    let (m, n) = (a.deg0(), b.deg0());
    if a.is_zero() || b.is_zero() {
        return QPoly::zero(Rationals);
    }
    let size = m + n;
    if size == 0 {
        return QPoly::one(Rationals);
    }
    let f = RationalFunctions;
    let mut rows = vec![vec![f.zero(); size]; size];
    // Rows hold coefficients from the top degree down.
    for i in 0..n {
        for j in 0..=m {
            rows[i][i + j] = a.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            rows[n + i][i + j] = b.coeff(n - j);
        }
    }
    let d = linalg::determinant(&f, &rows);
    debug_assert!(d.is_polynomial());
    d.num().clone()
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// `"a..b"` (inclusive integer range) or a comma-separated list of rationals.
pub fn parse_values(s: &str) -> Option<Vec<BigRational>> {
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().ok()?;
        let b: i64 = b.trim().parse().ok()?;
        if a > b {
            return None;
        }
        return Some((a..=b).map(|v| BigRational::from_integer(v.into())).collect());
    }
    s.split(',').map(parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn cpoly(c: &[i64]) -> QPoly {
        Poly::from_ints(Rationals, c)
    }

    #[test]
    fn specialize_examples() {
        let f = FamilySpec::parse("t, (1+t)^2 + c*t", "c").unwrap();
        assert_eq!(specialize(&f, &q(0)).unwrap(), crate::expr::parse_torus_curve("t, (1+t)^2").unwrap());
        assert_eq!(specialize(&f, &q(1)).unwrap(), crate::expr::parse_torus_curve("t, t^2+3*t+1").unwrap());
        let g = FamilySpec::parse("t, t/c", "c").unwrap();
        let e = specialize(&g, &q(0)).unwrap_err().to_string();
        assert!(e.contains("coordinate 2"), "{e}");
        assert!(FamilySpec::parse("t, c - c", "c").is_err());
    }

    #[test]
    fn scan_example() {
        let f = FamilySpec::parse("t, (1+t)^2 + c*t", "c").unwrap();
        let values: Vec<_> = (-6..=6).map(q).collect();
        let r = scan(&f, &values);
        assert_eq!(r.rows.len(), 13);
        assert_eq!(r.strata["free:(1,2)"], vec![q(-4), q(0)]);
        assert_eq!(r.strata["free:(1,1)"].len(), 11);
        assert_eq!(r.max_index, Some(BigInt::from(2)));
        let generic: Vec<_> = (-5..=5).filter(|v| *v != 0 && *v != -4).map(q).collect();
        assert_eq!(scan(&f, &generic).max_index, Some(BigInt::one()));
    }

    #[test]
    fn scan_records_errors() {
        let f = FamilySpec::parse("t, t/c", "c").unwrap();
        let r = scan(&f, &[q(1), q(0), q(1)]);
        assert_eq!(r.rows.len(), 2);
        assert!(r.rows[0].outcome.is_err());
        assert_eq!(r.strata["error"], vec![q(0)]);
    }

    #[test]
    fn candidate_examples() {
        let f = FamilySpec::parse("t, (1+t)^2 + c*t", "c").unwrap();
        assert!(degeneration_candidates(&f).unwrap().contains(&cpoly(&[0, 4, 1])));
        let g = FamilySpec::parse("t, t + c", "c").unwrap();
        assert!(degeneration_candidates(&g).unwrap().contains(&cpoly(&[0, 1])));
        let h = FamilySpec::parse("t, 1 + t", "c").unwrap();
        assert!(degeneration_candidates(&h).unwrap().is_empty());
        let d = FamilySpec::parse("t, t/c", "c").unwrap();
        assert!(degeneration_candidates(&d).unwrap().contains(&cpoly(&[0, 1])));
    }

    #[test]
    fn signature_changes_are_separated() {
        for text in [
            "t, (1+t)^2 + c*t",
            "t, t + c",
            "t^2 - c, (t - 1)^3",
            "t*(t - c), (t + 1)/(t - 2*c + 1)",
            "(t^2 + c*t + 1)^2, t + 3",
        ] {
            let f = FamilySpec::parse(text, "c").unwrap();
            let cands = degeneration_candidates(&f).unwrap();
            let values: Vec<_> = (-12..=12).map(|v| BigRational::new(v.into(), 2.into())).collect();
            let r = scan(&f, &values);
            for w in r.rows.windows(2) {
                if w[0].signature() != w[1].signature() {
                    assert!(
                        candidate_root_between(&cands, &w[0].value, &w[1].value).unwrap(),
                        "{text}: {} vs {}",
                        w[0].value,
                        w[1].value
                    );
                }
            }
        }
    }

    #[test]
    fn value_lists() {
        assert_eq!(parse_values("-2..1").unwrap().len(), 4);
        assert_eq!(parse_values("1/2, 3").unwrap(), vec![BigRational::new(1.into(), 2.into()), q(3)]);
        assert!(parse_values("1/0").is_none());
        assert!(parse_values("3..1").is_none());
    }
}
