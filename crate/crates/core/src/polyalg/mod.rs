//! Exact sparse multivariate polynomial arithmetic with a permutation action,
//! generic over the scalar type.

mod coeff;
mod display;
mod exponent;
mod poly;

pub use coeff::Coeff;
pub use display::parse_polynomial;
pub(crate) use display::{parse_symbol_terms, write_signed_term};
pub use exponent::{monomials_of_degree, ExponentVector};
pub use poly::{block_vandermonde, exact_divide, full_vandermonde, is_invariant, permute, Polynomial};
