use std::fmt;

use super::{Field, Poly, PolyError};

/// Reduced quotient `num/den` with a monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalFunction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let inv = den.lc().inv().expect("nonzero");
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(a: F) -> Self {
        Self::from_poly(Poly::constant(a))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone()).expect("nonzero");
        }
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }

    pub fn scale(&self, a: &F) -> Self {
        Self::new(self.num.scale(a), self.den.clone()).expect("nonzero")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero"))
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|x| self.mul(&x))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(F::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero")
    }

    /// Degree as a map `P¹ → P¹`.
    pub fn map_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// A place of `P¹`: a monic squarefree polynomial standing for all of its
/// roots, or the point at infinity.
#[derive(Clone, PartialEq, Debug)]
pub enum Place<F> {
    Finite(Poly<F>),
    Infinity,
}

impl<F: Field> Place<F> {
    /// Number of points the place stands for.
    pub fn point_count(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }
}

impl<F: Field> fmt::Display for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

/// Vanishing order of a polynomial along a finite squarefree place.
pub fn ord_at_place<F: Field>(a: &Poly<F>, place: &Poly<F>) -> Result<i64, PolyError> {
    if a.is_zero() {
        return Err(PolyError::InfiniteOrder);
    }
    Ok(a.multiplicity_of(place) as i64)
}

/// Order at infinity: `reference − deg a` on a degree-`reference` projective
/// model, or `−deg a` for an affine function when no reference is given.
pub fn ord_at_infinity<F: Field>(a: &Poly<F>, reference: Option<usize>) -> Result<i64, PolyError> {
    let d = a.degree().ok_or(PolyError::InfiniteOrder)? as i64;
    Ok(reference.map_or(-d, |r| r as i64 - d))
}

impl<F: Field> RationalFunction<F> {
    /// Order along a place: positive for zeros, negative for poles.
    pub fn ord(&self, place: &Place<F>) -> Result<i64, PolyError> {
        if self.is_zero() {
            return Err(PolyError::InfiniteOrder);
        }
        match place {
            Place::Finite(p) => Ok(ord_at_place(&self.num, p)? - ord_at_place(&self.den, p)?),
            Place::Infinity => Ok(self.den.deg() - self.num.deg()),
        }
    }
}
