//! Exact symbolic computation in the weak quantum algebras `wsl_q(2)` and
//! `vsl_q(2)`: PBW normal forms, weak Hopf structure, skew polynomial
//! (Ore) constructions, and the finite quotient at an odd root of unity with
//! its regular quasi-R-matrix.

pub mod algebra;
pub mod coeff;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod lin;
pub mod linalg;
pub mod ore;
pub mod quotient;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
