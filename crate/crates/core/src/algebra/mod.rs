//! Exact arithmetic, monomials, term orders, polynomials and ideals.

pub mod ideal;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod rational;

pub use ideal::Ideal;
pub use monomial::ExponentVector;
pub use order::{OrderKind, TermOrder};
pub use parse::{parse_ideal, parse_polynomial};
pub use polynomial::{poly_op, PolyOp, Polynomial};
pub use rational::Rational;
