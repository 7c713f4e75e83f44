pub mod algebra;
pub mod artin_schreier;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod family;
pub mod kummer;
pub mod lattice;

pub mod wire;

pub use error::{Error, Result};
