//! Exact construction of higher Specht polynomials for products of symmetric
//! groups S_{n_1} × ⋯ × S_{n_r}, together with the machinery needed to check
//! the structural facts around them: Young symmetrizer idempotents in the
//! rational group algebra, the irreducible modules the polynomials span, the
//! divisibility behaviour under invariant differential operators, and the
//! freeness of the polynomial ring over its invariant subring with the higher
//! Specht family as a homogeneous basis.
//!
//! The algebra kernel (`polyalg`, `groupalg`, `weyl`) is generic over the
//! scalar type through [`polyalg::Coeff`]; everything downstream of exact
//! linear algebra (`specht` bases, `decomp`, `verify`) is fixed to
//! arbitrary-precision rationals, since the checks are all zero-tolerance
//! identities. Concrete rational aliases live at the crate root.

pub mod combinatorics;
pub mod decomp;
pub mod error;
pub mod groupalg;
pub mod linalg;
pub mod polyalg;
pub mod specht;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};

/// Arbitrary-precision rational scalar used by all exact verification code.
pub type Q = num_rational::BigRational;

/// Sparse multivariate polynomial over `Q`.
pub type QPolynomial = polyalg::Polynomial<Q>;

/// Rational group-algebra element of a product of symmetric groups.
pub type QGroupElement = groupalg::GroupAlgebraElement<Q>;

/// Weyl-algebra operator with rational coefficients.
pub type QOperator = weyl::DifferentialOperator<Q>;

/// Convenience constructor for a rational from an integer pair.
pub fn q(num: i64, den: i64) -> Q {
    assert!(den != 0, "zero denominator");
    Q::new(num.into(), den.into())
}
