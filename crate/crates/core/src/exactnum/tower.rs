use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;


use num_traits::{One, Signed, Zero};

use super::interval::{self, Interval};
use super::{NumError, Rational};

#[derive(Debug, PartialEq, Eq, Hash)]
struct TowerData {
    /// Real radicands; entry `j` holds `2^j` coordinates over the first `j` levels.
    radicands: Vec<Vec<Rational>>,
    complex: bool,
}

/// An immutable descriptor of a quadratic tower.
///
/// Cloning is cheap.  Two descriptors compare equal when they have the same
/// radicands in the same order and the same complexification flag.
#[derive(Clone, Debug)]
pub struct Tower(Arc<TowerData>);

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Tower {}

impl Tower {
    /// The field of rationals.
    pub fn rational() -> Tower {
        Tower(Arc::new(TowerData { radicands: Vec::new(), complex: false }))
    }

    /// The Gaussian rationals `Q(i)`.
    pub fn gaussian() -> Tower {
        Tower::rational().complexified()
    }

    pub fn real_levels(&self) -> usize {
        self.0.radicands.len()
    }

    pub fn is_complex(&self) -> bool {
        self.0.complex
    }

    /// Number of rational coordinates of an element.
    pub fn dim(&self) -> usize {
        self.real_dim() << usize::from(self.0.complex)
    }

    pub fn real_dim(&self) -> usize {
        1 << self.real_levels()
    }

    /// The same real levels without `i`.
    pub fn real_tower(&self) -> Tower {
        if !self.is_complex() {
            return self.clone();
        }
        Tower(Arc::new(TowerData { radicands: self.0.radicands.clone(), complex: false }))
    }

    pub fn complexified(&self) -> Tower {
        if self.is_complex() {
            return self.clone();
        }
        Tower(Arc::new(TowerData { radicands: self.0.radicands.clone(), complex: true }))
    }

    /// The real tower made of the first `k` levels.
    pub fn prefix(&self, k: usize) -> Tower {
        Tower(Arc::new(TowerData { radicands: self.0.radicands[..k].to_vec(), complex: false }))
    }

    /// Radicand of level `j`, as an element of `prefix(j)`.
    pub fn radicand(&self, j: usize) -> Num {
        Num { tower: self.prefix(j), coords: self.0.radicands[j].clone() }
    }

    /// The generator `√r_j` as an element of this tower.
    pub fn generator(&self, j: usize) -> Num {
        assert!(j < self.real_levels(), "level out of range");
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[1 << j] = Rational::one();
        Num { tower: self.clone(), coords }
    }

    /// The imaginary unit, if adjoined.
    pub fn imaginary_unit(&self) -> Option<Num> {
        if !self.is_complex() {
            return None;
        }
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[self.real_dim()] = Rational::one();
        Some(Num { tower: self.clone(), coords })
    }

    /// True when every element of `self` has a canonical image in `other`.
    pub fn embeds_into(&self, other: &Tower) -> bool {
        let (a, b) = (&self.0.radicands, &other.0.radicands);
        a.len() <= b.len() && a[..] == b[..a.len()] && (!self.is_complex() || other.is_complex())
    }

    /// Smallest tower containing both, when one real tower extends the other.
    pub fn join(a: &Tower, b: &Tower) -> Option<Tower> {
        if a.embeds_into(b) {
            return Some(b.clone());
        }
        if b.embeds_into(a) {
            return Some(a.clone());
        }
        let (long, short) = if a.real_levels() >= b.real_levels() { (a, b) } else { (b, a) };
        if short.0.radicands[..] != long.0.radicands[..short.real_levels()] {
            return None;
        }
        Some(long.complexified())
    }

    /// Adjoins `√r` below `i`.  The radicand must be real, positive and not
    /// already a square.
    pub fn extend(&self, r: &Num) -> Result<Tower, NumError> {
        let real = self.real_tower();
        let r = r.lift(&Tower::join(&real, &r.tower).ok_or(NumError::IncompatibleTowers)?)?;
        if !r.is_real() {
            return Err(NumError::NotReal);
        }
        let r = r.re();
        if !r.tower.embeds_into(&real) {
            return Err(NumError::IncompatibleTowers);
        }
        let r = r.lift(&real)?;
        if r.sign()? != Sign::Positive {
            return Err(NumError::NonPositiveRadicand);
        }
        if r.exact_sqrt()?.is_some() {
            return Err(NumError::SquareRadicand(r.to_string()));
        }
        let mut radicands = self.0.radicands.clone();
        radicands.push(r.coords);
        Ok(Tower(Arc::new(TowerData { radicands, complex: self.is_complex() })))
    }

    /// Effective radicands used by multiplication: the real ones, then `-1`
    /// for the imaginary level.
    fn effective(&self) -> Vec<Vec<Rational>> {
        let mut eff = self.0.radicands.clone();
        if self.is_complex() {
            let mut m = vec![Rational::zero(); self.real_dim()];
            m[0] = -Rational::one();
            eff.push(m);
        }
        eff
    }

    pub(crate) fn real_radicands(&self) -> &[Vec<Rational>] {
        &self.0.radicands
    }

    /// Radicands rendered with the literal grammar, lowest level first.
    pub fn radicand_literals(&self) -> Vec<String> {
        (0..self.real_levels()).map(|j| self.radicand(j).to_string()).collect()
    }

    fn basis_name(&self, idx: usize) -> String {
        let mut parts = Vec::new();
        for j in 0..self.real_levels() {
            if idx >> j & 1 == 1 {
                parts.push(format!("sqrt({})", self.radicand(j)));
            }
        }
        if self.is_complex() && idx >> self.real_levels() & 1 == 1 {
            parts.push("i".to_string());
        }
        parts.join("*")
    }
}

/// Result of exact sign determination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// An element of a quadratic tower.
///
/// Binary operators lift both operands into the smaller of the two towers
/// that contains the other; they panic when no such tower exists or on
/// division by zero.  The `try_*` methods report those cases as errors.
#[derive(Clone)]
pub struct Num {
    tower: Tower,
    coords: Vec<Rational>,
}

impl Num {
    pub fn from_rational(q: Rational) -> Num {
        Num { tower: Tower::rational(), coords: vec![q] }
    }

    pub fn from_int(n: i64) -> Num {
        Num::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Num {
        Num::from_int(0)
    }

    pub fn one() -> Num {
        Num::from_int(1)
    }

    /// The imaginary unit in `Q(i)`.
    pub fn i() -> Num {
        Tower::gaussian().imaginary_unit().expect("gaussian tower is complex")
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, when every irrational coordinate vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Canonical image of `self` in a tower that contains it.
    pub fn lift(&self, target: &Tower) -> Result<Num, NumError> {
        if self.tower == *target {
            return Ok(self.clone());
        }
        if !self.tower.embeds_into(target) {
            return Err(NumError::IncompatibleTowers);
        }
        let k1 = self.tower.real_levels();
        let k2 = target.real_levels();
        let mut coords = vec![Rational::zero(); target.dim()];
        let mask = (1usize << k1) - 1;
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let to = (idx & mask) | ((idx >> k1) << k2);
            coords[to] = c.clone();
        }
        Ok(Num { tower: target.clone(), coords })
    }

    fn unify(&self, other: &Num) -> Result<(Num, Num), NumError> {
        if self.tower == other.tower {
            return Ok((self.clone(), other.clone()));
        }
        let t = Tower::join(&self.tower, &other.tower).ok_or(NumError::IncompatibleTowers)?;
        Ok((self.lift(&t)?, other.lift(&t)?))
    }

    pub fn try_add(&self, other: &Num) -> Result<Num, NumError> {
        let (a, b) = self.unify(other)?;
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        Ok(Num { tower: a.tower, coords })
    }

    pub fn try_sub(&self, other: &Num) -> Result<Num, NumError> {
        let (a, b) = self.unify(other)?;
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        Ok(Num { tower: a.tower, coords })
    }

    pub fn try_mul(&self, other: &Num) -> Result<Num, NumError> {
        if let Some(q) = other.to_rational() {
            if self.tower.embeds_into(&other.tower) || other.tower.embeds_into(&self.tower) {
                let (a, _) = self.unify(other)?;
                return Ok(a.scale(&q));
            }
        }
        if let Some(q) = self.to_rational() {
            if self.tower.embeds_into(&other.tower) || other.tower.embeds_into(&self.tower) {
                let (_, b) = self.unify(other)?;
                return Ok(b.scale(&q));
            }
        }
        let (a, b) = self.unify(other)?;
        let eff = a.tower.effective();
        let coords = mul_rec(&a.coords, &b.coords, &eff);
        Ok(Num { tower: a.tower, coords })
    }

    pub fn try_div(&self, other: &Num) -> Result<Num, NumError> {
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse by recursive conjugation.
    pub fn inv(&self) -> Result<Num, NumError> {
        let eff = self.tower.effective();
        let coords = inv_rec(&self.coords, &eff).ok_or(NumError::DivisionByZero)?;
        Ok(Num { tower: self.tower.clone(), coords })
    }

    pub fn scale(&self, q: &Rational) -> Num {
        Num { tower: self.tower.clone(), coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, e: u32) -> Num {
        let mut acc = Num::one().lift(&self.tower).expect("rationals embed everywhere");
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_real(&self) -> bool {
        !self.tower.is_complex() || self.coords[self.tower.real_dim()..].iter().all(Zero::is_zero)
    }

    /// Real part, as an element of the real tower.
    pub fn re(&self) -> Num {
        let t = self.tower.real_tower();
        let n = t.dim();
        Num { tower: t, coords: self.coords[..n].to_vec() }
    }

    /// Imaginary part, as an element of the real tower.
    pub fn im(&self) -> Num {
        let t = self.tower.real_tower();
        let n = t.dim();
        let coords = if self.tower.is_complex() {
            self.coords[n..].to_vec()
        } else {
            vec![Rational::zero(); n]
        };
        Num { tower: t, coords }
    }

    /// Complex conjugate (negates the `i` coordinate block only).
    pub fn conj(&self) -> Num {
        let mut out = self.clone();
        if self.tower.is_complex() {
            let n = self.tower.real_dim();
            for c in &mut out.coords[n..] {
                *c = -c.clone();
            }
        }
        out
    }

    /// Square root inside the same tower, non-negative when it exists.
    pub fn exact_sqrt(&self) -> Result<Option<Num>, NumError> {
        if !self.is_real() {
            return Err(NumError::NotReal);
        }
        let re = self.re();
        let eff = re.tower.effective();
        let Some(coords) = sqrt_rec(&re.coords, &eff) else {
            return Ok(None);
        };
        let mut y = Num { tower: re.tower.clone(), coords };
        if y.sign()? == Sign::Negative {
            y = -y;
        }
        Ok(Some(y.lift(&self.tower)?))
    }

    /// Exact sign of a real element.
    pub fn sign(&self) -> Result<Sign, NumError> {
        if self.is_zero() {
            return Ok(Sign::Zero);
        }
        if !self.is_real() {
            return Err(NumError::NotReal);
        }
        if let Some(q) = self.to_rational() {
            return Ok(if q.is_positive() { Sign::Positive } else { Sign::Negative });
        }
        let re = self.re();
        let mut bits = 64u64;
        loop {
            let iv = interval::eval_real(&re.tower, &re.coords, bits);
            if iv.lo().is_positive() {
                return Ok(Sign::Positive);
            }
            if iv.hi().is_negative() {
                return Ok(Sign::Negative);
            }
            bits *= 2;
        }
    }

    /// Dyadic interval containing the value, of width at most
    /// `2^-bits · max(1, |x|)`.
    pub fn approximate(&self, bits: u64) -> Result<Interval, NumError> {
        if !self.is_real() {
            return Err(NumError::NotReal);
        }
        let re = self.re();
        Ok(interval::approximate_real(&re.tower, &re.coords, bits.max(1)))
    }
}

impl PartialEq for Num {
    fn eq(&self, other: &Num) -> bool {
        match self.unify(other) {
            Ok((a, b)) => a.coords == b.coords,
            Err(_) => false,
        }
    }
}

impl fmt::Debug for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Num({self})")
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = self.tower.basis_name(idx);
            let mag = c.abs();
            let body = if basis.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                basis
            } else {
                format!("{}*{}", fmt_rational(&mag), basis)
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Num> for &Num {
            type Output = Num;
            fn $m(self, rhs: &Num) -> Num {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}: {e}", stringify!($m)))
            }
        }
        impl $tr<Num> for Num {
            type Output = Num;
            fn $m(self, rhs: Num) -> Num {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Num> for Num {
            type Output = Num;
            fn $m(self, rhs: &Num) -> Num {
                (&self).$m(rhs)
            }
        }
        impl $tr<Num> for &Num {
            type Output = Num;
            fn $m(self, rhs: Num) -> Num {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Num {
    type Output = Num;
    fn neg(self) -> Num {
        Num { tower: self.tower.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for Num {
    type Output = Num;
    fn neg(self) -> Num {
        -&self
    }
}

impl From<Rational> for Num {
    fn from(q: Rational) -> Num {
        Num::from_rational(q)
    }
}

impl From<i64> for Num {
    fn from(n: i64) -> Num {
        Num::from_int(n)
    }
}

fn all_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn add_into(acc: &mut [Rational], v: Vec<Rational>) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

/// Product of two coordinate vectors of length `2^level`.  Writing
/// `a = a0 + a1·√r` with `r = eff[level-1]` gives
/// `(a0 b0 + a1 b1 r) + (a0 b1 + a1 b0)·√r`.
fn mul_rec(a: &[Rational], b: &[Rational], eff: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a.len();
    if n == 1 {
        return vec![&a[0] * &b[0]];
    }
    let h = n / 2;
    let level = h.trailing_zeros() as usize;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let (a1z, b1z) = (all_zero(a1), all_zero(b1));
    let mut lo = if all_zero(a0) || all_zero(b0) {
        vec![Rational::zero(); h]
    } else {
        mul_rec(a0, b0, eff)
    };
    let mut hi = vec![Rational::zero(); h];
    if !a1z && !b1z {
        let t = mul_rec(a1, b1, eff);
        add_into(&mut lo, mul_rec(&t, &eff[level], eff));
    }
    if !b1z && !all_zero(a0) {
        add_into(&mut hi, mul_rec(a0, b1, eff));
    }
    if !a1z && !all_zero(b0) {
        add_into(&mut hi, mul_rec(a1, b0, eff));
    }
    lo.extend(hi);
    lo
}

fn inv_rec(a: &[Rational], eff: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = a.len();
    if n == 1 {
        return if a[0].is_zero() { None } else { Some(vec![a[0].recip()]) };
    }
    let h = n / 2;
    let level = h.trailing_zeros() as usize;
    let (a0, a1) = a.split_at(h);
    if all_zero(a1) {
        let mut lo = inv_rec(a0, eff)?;
        lo.extend(vec![Rational::zero(); h]);
        return Some(lo);
    }
    let sq0 = mul_rec(a0, a0, eff);
    let sq1 = mul_rec(&mul_rec(a1, a1, eff), &eff[level], eff);
    let norm: Vec<Rational> = sq0.iter().zip(&sq1).map(|(x, y)| x - y).collect();
    let ninv = inv_rec(&norm, eff)?;
    let mut lo = mul_rec(a0, &ninv, eff);
    let hi = mul_rec(a1, &ninv, eff);
    lo.extend(hi.into_iter().map(|c| -c));
    Some(lo)
}

fn sqrt_rational(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Some square root of `c + d√r` in the same real tower, if one exists.
fn sqrt_rec(a: &[Rational], eff: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = a.len();
    if n == 1 {
        return sqrt_rational(&a[0]).map(|q| vec![q]);
    }
    let h = n / 2;
    let level = h.trailing_zeros() as usize;
    let (c, d) = a.split_at(h);
    let r = &eff[level];
    let zeros = || vec![Rational::zero(); h];
    if all_zero(d) {
        if let Some(mut y) = sqrt_rec(c, eff) {
            y.extend(zeros());
            return Some(y);
        }
        let c_over_r = mul_rec(c, &inv_rec(r, eff)?, eff);
        let b = sqrt_rec(&c_over_r, eff)?;
        let mut y = zeros();
        y.extend(b);
        return Some(y);
    }
    let c2 = mul_rec(c, c, eff);
    let d2r = mul_rec(&mul_rec(d, d, eff), r, eff);
    let disc: Vec<Rational> = c2.iter().zip(&d2r).map(|(x, y)| x - y).collect();
    let s = sqrt_rec(&disc, eff)?;
    let half = Rational::new(1.into(), 2.into());
    for sgn in [1i32, -1] {
        let a2: Vec<Rational> = c
            .iter()
            .zip(&s)
            .map(|(x, y)| if sgn > 0 { (x + y) * &half } else { (x - y) * &half })
            .collect();
        if let Some(root) = sqrt_rec(&a2, eff) {
            if all_zero(&root) {
                continue;
            }
            let two_a: Vec<Rational> = root.iter().map(|x| x * Rational::from_integer(2.into())).collect();
            let b = mul_rec(d, &inv_rec(&two_a, eff)?, eff);
            let mut y = root;
            y.extend(b);
            return Some(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn q15() -> Tower {
        Tower::rational().extend(&Num::from_int(15)).unwrap()
    }

    #[test]
    fn defining_relation() {
        let t = q15();
        let s = t.generator(0);
        assert_eq!(&s * &s, Num::from_int(15));
    }

    #[test]
    fn inverse_of_one_plus_root15() {
        let t = q15();
        let x = Num::one() + t.generator(0);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Num::one());
        let expected = (Num::from_int(-1) + t.generator(0)) / Num::from_int(14);
        assert_eq!(y, expected);
    }

    #[test]
    fn sqrt_three_family_constants() {
        let t = Tower::rational().extend(&Num::from_int(3)).unwrap();
        let s2 = t.generator(0);
        assert_eq!(&s2 * &s2, Num::from_int(3));
        let r2 = (&s2 * Num::from_int(2)) / Num::from_int(1);
        assert_eq!(&r2 * &r2, Num::from_int(12));
    }

    #[test]
    fn exact_sqrt_rational_cases() {
        assert_eq!(Num::from_rational(rat(9, 4)).exact_sqrt().unwrap(), Some(Num::from_rational(rat(3, 2))));
        assert_eq!(Num::from_int(15).exact_sqrt().unwrap(), None);
        assert_eq!(Num::from_int(-4).exact_sqrt().unwrap(), None);
    }

    #[test]
    fn exact_sqrt_in_quadratic_field() {
        let t = Tower::rational().extend(&Num::from_int(7)).unwrap();
        let r7 = t.generator(0);
        let x = Num::from_int(16) + &r7 * Num::from_int(6);
        let y = x.exact_sqrt().unwrap().unwrap();
        assert_eq!(y, Num::from_int(3) + r7.clone());
        // 3 - √7 is the positive root of 16 - 6√7.
        let x2 = Num::from_int(16) - &r7 * Num::from_int(6);
        assert_eq!(x2.exact_sqrt().unwrap().unwrap(), Num::from_int(3) - r7);
    }

    #[test]
    fn radicand_is_found_through_quotient() {
        let t = q15();
        let y = Num::from_int(60).lift(&t).unwrap().exact_sqrt().unwrap().unwrap();
        assert_eq!(y, t.generator(0) * Num::from_int(2));
    }

    #[test]
    fn square_radicand_rejected() {
        let t = q15();
        let err = t.extend(&Num::from_int(60)).unwrap_err();
        assert!(matches!(err, NumError::SquareRadicand(_)));
        assert_eq!(Tower::rational().extend(&Num::from_int(-2)).unwrap_err(), NumError::NonPositiveRadicand);
    }

    #[test]
    fn signs() {
        let t = q15();
        let r = t.generator(0);
        assert_eq!(Num::zero().sign().unwrap(), Sign::Zero);
        assert_eq!((&r * Num::from_int(8) + Num::from_int(31)).sign().unwrap(), Sign::Positive);
        // 4 - √15 is tiny and positive, 31 - 8√15 is close to zero and negative.
        assert_eq!((Num::from_int(4) - r.clone()).sign().unwrap(), Sign::Positive);
        assert_eq!((Num::from_int(31) - &r * Num::from_int(8)).sign().unwrap(), Sign::Positive);
        assert_eq!((Num::from_int(30) - &r * Num::from_int(8)).sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn complex_parts_and_conjugate() {
        let t = q15().complexified();
        let i = t.imaginary_unit().unwrap();
        let z = Num::from_int(2) + &i * t.generator(0);
        assert_eq!(&i * &i, Num::from_int(-1));
        assert_eq!(z.re(), Num::from_int(2));
        assert_eq!(z.im(), q15().generator(0));
        assert_eq!(&z * &z.conj(), Num::from_int(19));
        assert!(z.sign().is_err());
        assert_eq!(z.inv().unwrap() * z, Num::one());
    }

    #[test]
    fn incompatible_towers_are_reported() {
        let a = Tower::rational().extend(&Num::from_int(2)).unwrap().generator(0);
        let b = Tower::rational().extend(&Num::from_int(3)).unwrap().generator(0);
        assert_eq!(a.try_add(&b).unwrap_err(), NumError::IncompatibleTowers);
        assert_eq!(Num::zero().inv().unwrap_err(), NumError::DivisionByZero);
    }

    #[test]
    fn join_adds_imaginary_unit() {
        let r = q15().generator(0);
        let z = &r + Num::i();
        assert!(z.tower().is_complex());
        assert_eq!(z.tower().real_levels(), 1);
        assert_eq!(z.re(), r);
        assert_eq!(z.im().to_rational(), Some(int(1)));
    }

    #[test]
    fn nested_tower_inverse() {
        let t1 = q15();
        let s = t1.generator(0);
        let rad = &s * Num::from_int(215208) + Num::from_int(833497);
        let t2 = t1.extend(&rad).unwrap();
        let big = t2.generator(1);
        let x = &big * &s + Num::from_rational(rat(3, 7)) - &big * Num::from_int(5);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Num::one());
        assert_eq!(&big * &big, rad);
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use crate::exactnum::LiteralParser;
    use proptest::prelude::*;

    /// Elements of `Q(√2)(√3)[i]` with small coefficients, all parsed into
    /// one tower.
    fn elements(n: usize) -> impl Strategy<Value = Vec<Num>> {
        proptest::collection::vec(proptest::collection::vec(-5i64..=5, 5), n).prop_map(|rows| {
            let mut p = LiteralParser::new();
            let xs: Vec<Num> = rows
                .iter()
                .map(|c| {
                    let src = format!(
                        "{} + {}*sqrt(2) + {}*sqrt(3) + {}*sqrt(6) + ({})*i/7",
                        c[0], c[1], c[2], c[3], c[4]
                    );
                    p.parse(&src).expect("literal")
                })
                .collect();
            xs.iter().map(|x| p.finish(x)).collect()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(v in elements(3)) {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
            prop_assert_eq!(&(a * b), &(b * a));
            prop_assert_eq!(&(&(a + b) - b), a);
            if !b.is_zero() {
                prop_assert_eq!(&(&(a / b) * b), a);
            }
        }

        #[test]
        fn conjugation_and_real_sign(v in elements(2)) {
            let (a, b) = (&v[0], &v[1]);
            prop_assert_eq!((a * b).conj(), &a.conj() * &b.conj());
            let norm = a * &a.conj();
            prop_assert!(norm.is_real());
            let s = norm.sign().unwrap();
            prop_assert_eq!(s == Sign::Zero, a.is_zero());
            prop_assert!(s != Sign::Negative);
        }

        #[test]
        fn interval_encloses_and_sign_agrees(v in elements(1), bits in 20u64..80) {
            let x = v[0].re();
            let iv = x.approximate(bits).unwrap();
            let s = x.sign().unwrap();
            match s {
                Sign::Zero => prop_assert!(iv.contains_zero()),
                Sign::Positive => prop_assert!(iv.hi() > &Rational::from_integer(0.into())),
                Sign::Negative => prop_assert!(iv.lo() < &Rational::from_integer(0.into())),
            }
        }
    }
}
