//! Exact computer algebra for higher discriminants, Hasse–Schmidt derivations
//! and the regular-sequence formulation of the Casas-Alvero conjecture.

pub mod discriminant;
pub mod dsub;
pub mod error;
pub mod exec;
pub mod field;
pub mod geometry;
pub mod groebner;
pub mod hasse;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
