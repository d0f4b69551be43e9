//! Exact Wronskian computation over ℚ: classification of polynomial,
//! Laurent-polynomial and rational-function families whose Wronskian is a
//! nonzero constant, the witness decompositions behind that classification,
//! geometric consequences for parametric curves, and a seeded counterexample
//! search for families of rational functions with several poles.

pub mod characterize;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod laurent;
pub mod matrix;
pub mod parser;
pub mod ratfun;
pub mod rational;
pub mod reduction;
pub mod roots;
pub mod search;
pub mod wronskian;

pub use error::Error;
pub use laurent::LaurentPoly;
pub use matrix::QMatrix;
pub use rational::Rational;
pub use wronskian::WronskianClass;
