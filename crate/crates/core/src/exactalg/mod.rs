//! Exact rational arithmetic, integer partitions and the symmetric-function
//! algebra behind every localization sum.
//!
//! Scalars are [`ExactRational`] (a reduced `BigRational`); nothing in the crate
//! ever rounds. Pontryagin monomials `p_{i_1} ... p_{i_r}` are keyed by
//! [`Partition`], and polynomials in them by [`PontryaginPolynomial`].

mod lgenus;
mod partition;
mod symmetric;

pub use lgenus::{l_genus, multiplicative_series_coefficients, MAX_L_DEGREE};
pub use partition::{partitions_of, Partition};
pub use symmetric::{elementary_symmetric, evaluate, PontryaginPolynomial};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Integer `n` as an exact rational.
pub fn rat(n: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(n.into())
}

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}
