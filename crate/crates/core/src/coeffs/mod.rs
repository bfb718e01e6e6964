//! The coefficient field: exact rational functions in `h~_1..h~_n`.

mod modp;
pub mod poly;
mod rational;
mod special;
mod weight;

pub use poly::{Monomial, Poly, MAX_VARS};
pub use rational::{Coeff, RationalCoefficient};
pub use special::{phi, q_minus, q_plus, special, Special};
pub use weight::WeightVector;

use crate::error::Result;

impl std::str::FromStr for RationalCoefficient {
    type Err = crate::error::Error;

    /// Parses with the rank inferred from the largest variable mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let ast = crate::expr::parse(s)?;
        let n = crate::expr::max_variable(&ast);
        crate::expr::eval(&ast, n, &|name: &str, _: &[usize]| {
            Err(format!("generator '{name}' not allowed in a coefficient"))
        })
    }
}

impl RationalCoefficient {
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        crate::expr::parse_coeff(text, n)
    }
}
