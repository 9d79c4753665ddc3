//! Exact numbers: rationals and towers of real quadratic extensions,
//! optionally with the imaginary unit adjoined on top.
//!
//! A tower `Q(√r₀)(√r₁)…(√r_{k-1})[i]` stores its elements as coordinate
//! vectors in the basis of radical products.  Coordinate index bit `j`
//! selects the factor `√r_j`; when the tower is complexified the bit just
//! above the real levels selects `i`.  Each radicand is checked to be
//! positive and a non-square in the field below, which makes an element
//! zero exactly when all of its coordinates are zero.

mod interval;
mod parse;
mod tower;

pub use interval::{to_decimal, Interval};
pub use parse::{parse_literal, LiteralParser};
pub use tower::{Num, Sign, Tower};

/// Arbitrary precision rationals, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by exact arithmetic and literal parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements live in towers with no common canonical embedding")]
    IncompatibleTowers,
    #[error("operation requires a real number but the value has an imaginary part")]
    NotReal,
    #[error("radicand must be positive")]
    NonPositiveRadicand,
    #[error("radicand {0} is already a square in the field below")]
    SquareRadicand(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Builds a rational from a numerator and denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Builds an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
