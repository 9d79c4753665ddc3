//! Certified interval evaluation of real tower elements.
//!
//! Radicals are enclosed with integer square roots on a dyadic grid and
//! every product is rounded outward, so each interval is a rigorous
//! enclosure.  Callers refine by doubling the working precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::tower::{Num, Tower};
use super::{NumError, Rational};

/// A closed interval `[lo, hi]` with rational (in practice dyadic) ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Interval {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Interval {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// Smallest absolute value over the interval.
    pub fn mag_lower(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().cloned().expect("four products");
        let hi = p.iter().max().cloned().expect("four products");
        Interval { lo, hi }
    }

    pub fn scale(&self, q: &Rational) -> Interval {
        let (a, b) = (&self.lo * q, &self.hi * q);
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Reciprocal of an interval that excludes zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    /// Rounds both ends outward onto the grid `2^-bits`.
    pub fn round_out(&self, bits: u64) -> Interval {
        Interval { lo: floor_grid(&self.lo, bits), hi: ceil_grid(&self.hi, bits) }
    }
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits
}

fn floor_grid(q: &Rational, bits: u64) -> Rational {
    let s = pow2(bits);
    let n = (q.numer() * &s).div_floor(q.denom());
    Rational::new(n, s)
}

fn ceil_grid(q: &Rational, bits: u64) -> Rational {
    let s = pow2(bits);
    let n = (q.numer() * &s).div_ceil(q.denom());
    Rational::new(n, s)
}

fn sqrt_interval(x: &Interval, bits: u64) -> Interval {
    let s4 = pow2(2 * bits);
    let s = pow2(bits);
    let lo = if x.lo.is_positive() {
        let f = (x.lo.numer() * &s4).div_floor(x.lo.denom());
        Rational::new(f.sqrt(), s.clone())
    } else {
        Rational::zero()
    };
    let c = (x.hi.numer() * &s4).div_ceil(x.hi.denom()).max(BigInt::zero());
    let hi = Rational::new(c.sqrt() + 1, s);
    Interval { lo, hi }
}

/// Encloses a real element at working precision `bits`.  The width is not
/// controlled here; see [`approximate_real`].
pub(crate) fn eval_real(tower: &Tower, coords: &[Rational], bits: u64) -> Interval {
    if coords.len() == 1 {
        return Interval::point(coords[0].clone());
    }
    let k = tower.real_levels();
    let rads = tower.real_radicands();
    let mut roots = Vec::with_capacity(k);
    for (j, r) in rads.iter().enumerate() {
        let iv = eval_real(&tower.prefix(j), r, bits + 8);
        roots.push(sqrt_interval(&iv, bits + 8));
    }
    let mut basis: Vec<Interval> = Vec::with_capacity(coords.len());
    basis.push(Interval::point(Rational::one()));
    for idx in 1..coords.len() {
        let top = usize::BITS - 1 - idx.leading_zeros();
        let rest = idx & !(1 << top);
        basis.push(basis[rest].mul(&roots[top as usize]).round_out(bits + 8));
    }
    let mut acc = Interval::point(Rational::zero());
    for (c, b) in coords.iter().zip(&basis) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc.round_out(bits)
}

pub(crate) fn approximate_real(tower: &Tower, coords: &[Rational], bits: u64) -> Interval {
    let target = Rational::new(BigInt::one(), pow2(bits));
    let mut work = bits + 32;
    loop {
        let iv = eval_real(tower, coords, work).round_out(work);
        let scale = iv.mag_lower().max(Rational::one());
        if iv.width() <= &target * scale {
            return iv;
        }
        work *= 2;
    }
}

/// Renders a real element with `digits` significant decimal digits.  The
/// rendering is certified: the enclosure is refined until both of its ends
/// round to the same string.
pub fn to_decimal(x: &Num, digits: usize) -> Result<String, NumError> {
    if x.is_zero() {
        return Ok("0".to_string());
    }
    if let Some(q) = x.to_rational() {
        return Ok(format_significant(&q, digits));
    }
    let mut bits = 64 + 4 * digits as u64;
    loop {
        let iv = x.approximate(bits)?;
        if !iv.contains_zero() {
            let a = format_significant(iv.lo(), digits);
            let b = format_significant(iv.hi(), digits);
            if a == b {
                return Ok(a);
            }
        }
        bits *= 2;
    }
}

/// Rounds a nonzero rational to `digits` significant digits, half away
/// from zero.  Positional notation is used for exponents in `-5..6`.
pub fn format_significant(q: &Rational, digits: usize) -> String {
    assert!(digits >= 1);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    let ten = BigInt::from(10);
    let pow10 = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), e as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-e) as usize))
        }
    };
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let scaled = &a * pow10(digits as i64 - 1 - e);
    let half = Rational::new(1.into(), 2.into());
    let mut m = (scaled + half).floor().to_integer();
    if m == num_traits::pow(ten.clone(), digits) {
        m = num_traits::pow(ten, digits - 1);
        e += 1;
    }
    let s = m.to_string();
    let body = if (-5..6).contains(&e) {
        if e >= 0 {
            let (ip, fp) = s.split_at(e as usize + 1);
            if fp.is_empty() {
                ip.to_string()
            } else {
                format!("{ip}.{fp}")
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), s)
        }
    } else {
        let (ip, fp) = s.split_at(1);
        if fp.is_empty() {
            format!("{ip}e{e}")
        } else {
            format!("{ip}.{fp}e{e}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
