//! Exact coefficient arithmetic, monomials, polynomials and monomial orders.

pub mod field;
pub mod monomial;
pub mod order;
pub mod poly;

pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME, MIN_GENERAL_FIELD_SIZE};
pub use monomial::{Exponent, Monomial};
pub use order::MonomialOrder;
pub use poly::{ArithOp, PolyRing, Polynomial};
