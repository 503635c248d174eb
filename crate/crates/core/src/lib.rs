// transition tables are indexed by vertex and letter throughout
#![allow(clippy::needless_range_loop)]

pub mod congruences;
pub mod error;
pub mod graphs;
pub mod leftinf;
pub mod projective;
pub mod turing;
mod uf;
pub mod words;

pub use error::{Error, Result};
