//! Kummer theory of rationally parametrized curves in G_m^k.
//!
//! For a curve `X` with coordinate functions `b_1, …, b_k ∈ Q(t)` this
//! decides freeness, computes the elementary divisors of `T/Z`, the
//! component count of every pullback `[n]⁻¹(X)`, and the level after which
//! all components are Kummer-generic. [`oracle`] recomputes the counts by
//! brute force without touching the lattice code.

mod curve;
mod freeness;
pub mod oracle;
mod report;
mod valuation;

pub use curve::TorusCurve;
pub use freeness::{is_free_alternant, is_free_rank};
pub use oracle::{
    oracle_component_count, oracle_component_count_capped, oracle_component_count_exact,
    oracle_is_nth_power,
};
pub use report::{
    analyze, analyze_with_valuation, component_count, is_kummer_generic, is_n_kummer_generic,
    prime_divisors, stabilizing_level, verify_stabilizing, Index, KummerReport,
};
pub use valuation::{valuation_matrix, ValuationMatrix};

#[cfg(test)]
mod tests;
