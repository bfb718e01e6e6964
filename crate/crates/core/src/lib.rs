//! Exact computations with dynamical R-matrices, the h-deformed Weyl algebra
//! `Diff_h(n, N)` and the diagonal reduction algebra of `gl(n)` presented by
//! the reflection equation.

pub mod algebra;
pub mod coeffs;
pub mod dra;
pub mod error;
pub mod expr;
pub mod report;
pub mod rmatrix;
mod util;
pub mod weyl;

pub use coeffs::{Coeff, RationalCoefficient, WeightVector};
pub use error::{Error, Result};
pub use report::{CheckReport, CheckSummary, Failure, Status, SuiteConfig, SuiteReport};
