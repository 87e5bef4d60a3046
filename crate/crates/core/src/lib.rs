//! Exact computational algebra for evolution algebras of bisexual
//! populations: dibaric structure, bq-homomorphisms, invariant forms,
//! annihilators and the quadratic evolution dynamics on the product simplex.

pub mod algebra;
pub mod cli;
pub mod dibaric;
pub mod error;
pub mod exact;
pub mod forms;
pub mod homs;

pub use error::{Error, ErrorKind, Result};
