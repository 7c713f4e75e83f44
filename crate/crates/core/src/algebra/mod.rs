//! Exact arithmetic: fields, univariate polynomials and rational functions,
//! squarefree and coprime decompositions, factorization over F_p, and partial fractions.

pub mod factor_fp;
pub mod field;
pub mod gcdfree;
pub mod linalg;
pub mod partial_fractions;
pub mod poly;
pub mod ratfunc;
pub mod squarefree;

pub use factor_fp::{factor_fp, factor_fp_seeded, is_irreducible_fp, pth_root_mod};
pub use field::{Field, PrimeField, RationalFunctions, Rationals};
pub use gcdfree::{gcdfree_basis, GcdFreeBasis};
pub use partial_fractions::{partial_fractions, PartialFractions, PolePart};
pub use poly::{gcd, Poly};
pub use ratfunc::{log_derivative, RatFunc};
pub use squarefree::{squarefree_decompose, SquarefreePart};

/// Polynomials over Q.
pub type QPoly = Poly<Rationals>;
/// Rational functions over Q.
pub type QRatFunc = RatFunc<Rationals>;
/// Polynomials over F_p.
pub type FpPoly = Poly<PrimeField>;
/// Rational functions over F_p.
pub type FpRatFunc = RatFunc<PrimeField>;
