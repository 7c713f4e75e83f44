//! Structured output documents. Field order is the declaration order;
//! integers that do not fit in an `i64` are written as decimal strings and
//! rationals as `"num/den"` strings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::field::rational_to_string;
use crate::algebra::{FpRatFunc, QPoly};
use crate::artin_schreier::WpReducedForm;
use crate::family::{FamilySpec, ScanResult};
use crate::kummer::{Index, KummerReport, TorusCurve, ValuationMatrix};
use crate::lattice::ElementaryDivisors;
use crate::{Error, Result};

pub const VERSION: u32 = 1;

/// An exact integer; `Infinite` is written as `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WireInt {
    Finite(BigInt),
    Infinite,
}

impl From<BigInt> for WireInt {
    fn from(n: BigInt) -> Self {
        WireInt::Finite(n)
    }
}

impl From<&Index> for WireInt {
    fn from(i: &Index) -> Self {
        match i {
            Index::Finite(n) => WireInt::Finite(n.clone()),
            Index::Infinite => WireInt::Infinite,
        }
    }
}

impl WireInt {
    fn finite(&self) -> Result<BigInt> {
        match self {
            WireInt::Finite(n) => Ok(n.clone()),
            WireInt::Infinite => Err(Error::domain("unexpected \"inf\"")),
        }
    }
}

impl Serialize for WireInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            WireInt::Infinite => s.serialize_str("inf"),
            WireInt::Finite(n) => match n.to_i64() {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&n.to_string()),
            },
        }
    }
}

impl<'de> Deserialize<'de> for WireInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = WireInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer, a decimal string or \"inf\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<WireInt, E> {
                Ok(WireInt::Finite(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<WireInt, E> {
                Ok(WireInt::Finite(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<WireInt, E> {
                if v == "inf" {
                    return Ok(WireInt::Infinite);
                }
                v.parse().map(WireInt::Finite).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

fn ints(v: &[BigInt]) -> Vec<WireInt> {
    v.iter().cloned().map(WireInt::from).collect()
}

fn coefficients(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeDoc {
    pub version: u32,
    pub curve: String,
    pub k: usize,
    /// Basis polynomials as coefficient arrays, constant term first.
    pub basis: Vec<Vec<String>>,
    pub matrix: Vec<Vec<WireInt>>,
    pub divisors: Vec<WireInt>,
    pub free: bool,
    pub index: WireInt,
    pub exponent: Option<WireInt>,
    pub obstruction_primes: Vec<WireInt>,
    pub kummer_generic: bool,
    pub stabilizing_level: Option<WireInt>,
    pub component_counts: BTreeMap<u64, WireInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizing_verified: Option<bool>,
}

impl AnalyzeDoc {
    pub fn new(
        curve: &TorusCurve,
        vm: &ValuationMatrix,
        r: &KummerReport,
        component_counts: BTreeMap<u64, BigInt>,
    ) -> Self {
        AnalyzeDoc {
            version: VERSION,
            curve: curve.to_string(),
            k: r.k,
            basis: vm.basis.iter().map(coefficients).collect(),
            matrix: vm.matrix.to_rows().iter().map(|row| ints(row)).collect(),
            divisors: ints(r.divisors.as_slice()),
            free: r.free,
            index: (&r.index).into(),
            exponent: r.exponent.clone().map(Into::into),
            obstruction_primes: ints(&r.obstruction_primes),
            kummer_generic: r.kummer_generic,
            stabilizing_level: r.stabilizing_level.clone().map(Into::into),
            component_counts: component_counts
                .into_iter()
                .map(|(n, c)| (n, c.into()))
                .collect(),
            oracle_agreement: None,
            stabilizing_verified: None,
        }
    }

    /// Rebuilds the report from the divisors and checks that every derived
    /// field in the document agrees with it.
    pub fn to_report(&self) -> Result<KummerReport> {
        let divisors = self
            .divisors
            .iter()
            .map(WireInt::finite)
            .collect::<Result<Vec<_>>>()?;
        let r = KummerReport::from_divisors(ElementaryDivisors(divisors));
        let same = r.k == self.k
            && r.free == self.free
            && WireInt::from(&r.index) == self.index
            && r.exponent.clone().map(WireInt::from) == self.exponent
            && ints(&r.obstruction_primes) == self.obstruction_primes
            && r.kummer_generic == self.kummer_generic
            && r.stabilizing_level.clone().map(WireInt::from) == self.stabilizing_level;
        if !same {
            return Err(Error::domain("document fields disagree with its divisors"));
        }
        for (n, c) in &self.component_counts {
            if crate::kummer::component_count(&r, *n)? != c.finite()? {
                return Err(Error::domain(format!("component count for n = {n} disagrees")));
            }
        }
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReducedDoc {
    pub g: String,
    pub r: String,
}

impl From<&WpReducedForm> for ReducedDoc {
    fn from(w: &WpReducedForm) -> Self {
        let show = |f: &FpRatFunc| f.display_in("t").to_string();
        ReducedDoc { g: show(&w.g), r: show(&w.r) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdditiveDoc {
    pub version: u32,
    pub curve: String,
    pub p: u64,
    pub k: usize,
    /// Per coordinate, `b_i = ℘(g) + r` with `r` reduced.
    pub reduced: Vec<ReducedDoc>,
    pub free: bool,
    pub component_count: WireInt,
    pub as_generic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRowDoc {
    pub value: String,
    pub signature: Option<String>,
    pub divisors: Option<Vec<WireInt>>,
    pub index: Option<WireInt>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanDoc {
    pub version: u32,
    pub family: String,
    pub param: String,
    pub rows: Vec<ScanRowDoc>,
    pub strata: BTreeMap<String, Vec<String>>,
    pub max_index: Option<WireInt>,
    /// Polynomials in the parameter, coefficient arrays constant term first.
    pub candidates: Vec<Vec<String>>,
}

impl ScanDoc {
    pub fn new(family: &FamilySpec, scan: &ScanResult, candidates: &[QPoly]) -> Self {
        let q = |v: &BigRational| rational_to_string(v);
        ScanDoc {
            version: VERSION,
            family: family.to_string(),
            param: family.param().to_string(),
            rows: scan
                .rows
                .iter()
                .map(|row| match &row.outcome {
                    Ok(r) => ScanRowDoc {
                        value: q(&row.value),
                        signature: Some(r.signature()),
                        divisors: Some(ints(r.divisors.as_slice())),
                        index: Some((&r.index).into()),
                        error: None,
                    },
                    Err(e) => ScanRowDoc {
                        value: q(&row.value),
                        signature: None,
                        divisors: None,
                        index: None,
                        error: Some(e.clone()),
                    },
                })
                .collect(),
            strata: scan
                .strata
                .iter()
                .map(|(k, vs)| (k.clone(), vs.iter().map(q).collect()))
                .collect(),
            max_index: scan.max_index.clone().map(Into::into),
            candidates: candidates.iter().map(coefficients).collect(),
        }
    }
}
