use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Field;
use crate::exactnum::Rational;

/// A named indeterminate such as `mu1` or `lambda12`.  Variables order by
/// name, then by index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Var {
    pub name: String,
    pub index: u32,
}

impl Var {
    pub fn new(name: &str, index: u32) -> Var {
        Var { name: name.to_string(), index }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, self.index)
    }
}

/// A power product of variables, stored sparsely in variable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m: BTreeMap<Var, u32> = self.0.iter().cloned().collect();
        for (v, e) in &o.0 {
            *m.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(m.into_iter().collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order with earlier variables more significant.
    fn cmp(&self, o: &Self) -> Ordering {
        let by_degree = self.total_degree().cmp(&o.total_degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            let (va, ea) = &self.0[i];
            let (vb, eb) = &o.0[j];
            match va.cmp(vb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        (self.0.len() - i).cmp(&(o.0.len() - j))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse multivariate polynomial with rational coefficients over named
/// parameters.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn constant(q: Rational) -> ParamPoly {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        ParamPoly { terms }
    }

    pub fn var(name: &str, index: u32) -> ParamPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(Var::new(name, index)), Rational::one());
        ParamPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value when no parameter occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> ParamPoly {
        if q.is_zero() {
            return ParamPoly::default();
        }
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    /// Leading term in the graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Substitutes rational values for some variables.
    pub fn substitute(&self, values: &BTreeMap<Var, Rational>) -> ParamPoly {
        let mut out = ParamPoly::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.factors() {
                match values.get(v) {
                    Some(x) => coeff *= num_traits::pow(x.clone(), *e as usize),
                    None => rest.push((v.clone(), *e)),
                }
            }
            out = out.add(&ParamPoly::term(Monomial(rest), coeff));
        }
        out
    }

    fn term(m: Monomial, c: Rational) -> ParamPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }
    pub fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_one(&self) -> bool {
        *self == ParamPoly::one()
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = ParamPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.accumulate(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    pub fn neg(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    pub fn from_int(n: i64) -> Self {
        ParamPoly::constant(Rational::from_integer(n.into()))
    }
}

impl super::Ring for ParamPoly {
    fn zero() -> Self {
        ParamPoly::zero()
    }
    fn one() -> Self {
        ParamPoly::one()
    }
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        ParamPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ParamPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ParamPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        ParamPoly::neg(self)
    }
    fn from_int(n: i64) -> Self {
        ParamPoly::from_int(n)
    }
}

fn fmt_q(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mag = c.abs();
            let body = if m.is_one() {
                fmt_q(&mag)
            } else if mag.is_one() {
                m.to_string()
            } else {
                format!("{}*{}", fmt_q(&mag), m)
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Fractions of parameter polynomials, used to run field algorithms with
/// the parameters treated as independent transcendentals.  No multivariate
/// gcd is taken; only constant denominators are folded into numerators.
#[derive(Clone, Debug)]
pub struct ParamFrac {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamFrac {
    pub fn new(num: ParamPoly, den: ParamPoly) -> ParamFrac {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return ParamFrac { num, den: ParamPoly::one() };
        }
        if let Some(c) = den.constant_value() {
            return ParamFrac { num: num.scale(&c.recip()), den: ParamPoly::one() };
        }
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero");
        ParamFrac { num: num.scale(&lc.recip()), den: den.scale(&lc.recip()) }
    }

    pub fn from_poly(p: ParamPoly) -> ParamFrac {
        ParamFrac { num: p, den: ParamPoly::one() }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }
}

impl PartialEq for ParamFrac {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for ParamFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl super::Ring for ParamFrac {
    fn zero() -> Self {
        ParamFrac::from_poly(ParamPoly::zero())
    }
    fn one() -> Self {
        ParamFrac::from_poly(ParamPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return ParamFrac::new(self.num.add(&o.num), self.den.clone());
        }
        ParamFrac::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        super::Ring::add(self, &super::Ring::neg(o))
    }
    fn mul(&self, o: &Self) -> Self {
        ParamFrac::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        ParamFrac { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_int(n: i64) -> Self {
        ParamFrac::from_poly(ParamPoly::from_int(n))
    }
}

impl Field for ParamFrac {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(ParamFrac::new(self.den.clone(), self.num.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::poly::{Poly, Ring};

    #[test]
    fn graded_lex_order() {
        let mu1 = Monomial::var(Var::new("mu", 1));
        let mu2 = Monomial::var(Var::new("mu", 2));
        let sq = mu2.mul(&mu2);
        assert!(Monomial::one() < mu2);
        assert!(mu2 < mu1);
        assert!(mu1 < sq);
        assert!(mu1.mul(&mu2) > sq);
    }

    #[test]
    fn arithmetic_and_display() {
        let m = ParamPoly::var("mu", 1);
        let p = ParamPoly::constant(int(3)).add(&m.scale(&int(2)));
        assert_eq!(p.to_string(), "2*mu1 + 3");
        assert_eq!(p.sub(&p), ParamPoly::zero());
        assert_eq!(m.mul(&m).sub(&ParamPoly::one()).to_string(), "mu1^2 - 1");
    }

    #[test]
    fn generic_squarefree_over_fractions() {
        // z^6 (2 + nu1 z)
        let nu = ParamFrac::from_poly(ParamPoly::var("nu", 1));
        let h = Poly::new(vec![ParamFrac::from_int(2), nu.clone()]);
        let p = &Poly::monomial(ParamFrac::one(), 6) * &h;
        let sq = p.squarefree();
        assert_eq!(sq.len(), 2);
        assert_eq!(sq[0].1, 1);
        assert_eq!(sq[0].0, h.monic());
        assert_eq!(sq[1], (Poly::z(), 6));
    }
}
