//! Univariate polynomials and rational functions over exact coefficient
//! rings, with the factorization-free algorithms the rest of the crate
//! relies on: gcd, Yun squarefree decomposition, wedge minors of
//! derivative matrices and Hermite reduction.

mod dense;
mod hermite;
mod param;
mod ratfunc;
mod wedge;

use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{Num, Rational};

pub use dense::{gcd_free_basis, Poly};
pub use hermite::{hermite_reduce, remainder_sum, LogRemainder};
pub use param::{Monomial, ParamFrac, ParamPoly, Var};
pub use ratfunc::{ord_at_infinity, ord_at_place, Place, RationalFunction};
pub use wedge::{derivative_rows, k_subsets, wedge_chain, wedge_minors};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("the zero polynomial has infinite order at every place")]
    InfiniteOrder,
}

/// Commutative ring with unity used as a coefficient domain.
///
/// `zero` and `one` must be neutral for elements of every "size" the
/// implementation supports; for tower elements they are the rationals 0
/// and 1, which embed into every tower.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|x| self.mul(&x))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Ring for Num {
    fn zero() -> Self {
        Num::zero()
    }
    fn one() -> Self {
        Num::one()
    }
    fn is_zero(&self) -> bool {
        Num::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Num::from_int(n)
    }
}

impl Field for Num {
    fn inv(&self) -> Option<Self> {
        Num::inv(self).ok()
    }
}
