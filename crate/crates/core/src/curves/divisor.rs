use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{gcd_free_basis, Field, Poly};

/// A divisor on `P¹` at squarefree granularity.
///
/// The finite part is stored canonically: for each multiplicity `m` there
/// is at most one place, the monic product of all points of multiplicity
/// `m`.  Two divisors are therefore equal exactly when their stored data
/// agree, without ever factoring a place.
#[derive(Clone, PartialEq, Debug)]
pub struct Divisor<F> {
    finite: Vec<(Poly<F>, i64)>,
    infinity: i64,
}

impl<F: Field> Divisor<F> {
    pub fn zero() -> Self {
        Divisor { finite: Vec::new(), infinity: 0 }
    }

    /// Builds a divisor from arbitrary squarefree places with
    /// multiplicities.  Places may overlap; multiplicities add up.
    pub fn from_places(places: &[(Poly<F>, i64)], infinity: i64) -> Self {
        let polys: Vec<Poly<F>> = places.iter().map(|(p, _)| p.clone()).collect();
        let basis = gcd_free_basis(&polys);
        let mut by_mult: BTreeMap<i64, Poly<F>> = BTreeMap::new();
        for b in basis {
            let m: i64 = places.iter().filter(|(p, _)| b.divides(p)).map(|(_, m)| m).sum();
            if m != 0 {
                let e = by_mult.entry(m).or_insert_with(Poly::one);
                *e = &*e * &b;
            }
        }
        Divisor { finite: by_mult.into_iter().map(|(m, p)| (p, m)).collect(), infinity }
    }

    /// Finite part as `(place, multiplicity)` pairs, increasing in
    /// multiplicity.
    pub fn finite(&self) -> &[(Poly<F>, i64)] {
        &self.finite
    }

    pub fn infinity(&self) -> i64 {
        self.infinity
    }

    pub fn degree(&self) -> i64 {
        self.finite.iter().map(|(p, m)| m * p.deg()).sum::<i64>() + self.infinity
    }

    pub fn is_zero(&self) -> bool {
        self.finite.is_empty() && self.infinity == 0
    }

    pub fn is_effective(&self) -> bool {
        self.infinity >= 0 && self.finite.iter().all(|(_, m)| *m > 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut all = self.finite.clone();
        all.extend(o.finite.iter().cloned());
        Divisor::from_places(&all, self.infinity + o.infinity)
    }

    pub fn scaled(&self, k: i64) -> Self {
        let places: Vec<_> = self.finite.iter().map(|(p, m)| (p.clone(), m * k)).collect();
        Divisor::from_places(&places, self.infinity * k)
    }

    /// Multiplicity at the finite point `z = x`.
    pub fn multiplicity_at(&self, x: &F) -> i64 {
        self.finite.iter().find(|(p, _)| p.eval(x).is_zero()).map_or(0, |(_, m)| *m)
    }

    /// Number of distinct points in the support.
    pub fn support_size(&self) -> i64 {
        self.finite.iter().map(|(p, _)| p.deg()).sum::<i64>() + i64::from(self.infinity != 0)
    }
}

impl<F: Field> fmt::Display for Divisor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.finite.iter().map(|(p, m)| format!("{m}*({p})")).collect();
        if self.infinity != 0 {
            parts.push(format!("{}*(infinity)", self.infinity));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};

    fn qp(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn canonical_grouping() {
        let a = Divisor::from_places(&[(qp(&[0, 1]), 2), (qp(&[-1, 1]), 2), (qp(&[2, 1]), 1)], 1);
        let b = Divisor::from_places(&[(qp(&[0, -1, 1]), 2), (qp(&[2, 1]), 1)], 1);
        assert_eq!(a, b);
        assert_eq!(a.degree(), 2 * 2 + 1 + 1);
        assert_eq!(a.multiplicity_at(&int(1)), 2);
        assert_eq!(a.multiplicity_at(&int(-2)), 1);
        assert_eq!(a.multiplicity_at(&int(5)), 0);
    }

    #[test]
    fn overlapping_places_add() {
        let d = Divisor::from_places(&[(qp(&[0, -1, 1]), 1), (qp(&[0, 1]), 2)], 0);
        assert_eq!(d.multiplicity_at(&int(0)), 3);
        assert_eq!(d.multiplicity_at(&int(1)), 1);
        let cancelled = d.add(&d.scaled(-1));
        assert!(cancelled.is_zero());
    }
}
