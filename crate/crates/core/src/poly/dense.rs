use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Ring};

/// Dense univariate polynomial with ascending coefficients.  The zero
/// polynomial has no coefficients and the last stored coefficient is never
/// zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    c: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(a: R) -> Self {
        Poly::new(vec![a])
    }

    /// `a·z^k`.
    pub fn monomial(a: R, k: usize) -> Self {
        let mut c = vec![R::zero(); k];
        c.push(a);
        Poly::new(c)
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> R {
        self.c.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn scale(&self, a: &R) -> Self {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.c.iter().map(|x| x.mul(a)).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, x)| x.mul(&R::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn eval(&self, x: &R) -> R {
        self.c.iter().rev().fold(R::zero(), |acc, a| acc.mul(x).add(a))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Divides by `z^k`; the `k` lowest coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Self {
        assert!(self.c.iter().take(k).all(|x| x.is_zero()), "unshift would drop nonzero terms");
        Poly::new(self.c.iter().skip(k).cloned().collect())
    }

    /// `self(q(z))`.
    pub fn compose(&self, q: &Poly<R>) -> Self {
        self.c.iter().rev().fold(Poly::zero(), |acc, a| &(&acc * q) + &Poly::constant(a.clone()))
    }

    /// `w^d · self(1/w)`, the chart at infinity of the degree-`d` model.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(self.deg() <= d as i64, "reference degree below polynomial degree");
        let mut c = vec![R::zero(); d + 1];
        for (k, a) in self.c.iter().enumerate() {
            c[d - k] = a.clone();
        }
        Poly::new(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.c.iter().map(f).collect())
    }
}

impl<F: Field> Poly<F> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn div_rem(&self, b: &Poly<F>) -> (Poly<F>, Poly<F>) {
        assert!(!b.is_zero(), "polynomial division by zero");
        let db = b.c.len() - 1;
        if self.c.len() < b.c.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = b.lc().inv().expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        let mut q = vec![F::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let t = r[k + db].mul(&inv);
            if t.is_zero() {
                continue;
            }
            for (j, bj) in b.c.iter().enumerate() {
                if !bj.is_zero() {
                    r[k + j] = r[k + j].sub(&t.mul(bj));
                }
            }
            q[k] = t;
        }
        r.truncate(db);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, b: &Poly<F>) -> Poly<F> {
        self.div_rem(b).1
    }

    /// Quotient when `b` divides `self` exactly.
    pub fn exact_div(&self, b: &Poly<F>) -> Option<Poly<F>> {
        let (q, r) = self.div_rem(b);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, a: &Poly<F>) -> bool {
        a.rem(self).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, b: &Poly<F>) -> Poly<F> {
        let (mut a, mut b) = (self.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·b = g` and `g` monic.
    pub fn ext_gcd(&self, b: &Poly<F>) -> (Poly<F>, Poly<F>, Poly<F>) {
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().expect("nonzero leading coefficient");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Solves `x·a + y·b = c` with `deg x < deg b`, for coprime `a`, `b`.
    pub fn diophantine(a: &Poly<F>, b: &Poly<F>, c: &Poly<F>) -> (Poly<F>, Poly<F>) {
        let (g, s, _) = a.ext_gcd(b);
        assert!(g.is_one(), "diophantine solve needs coprime inputs");
        let x = (&s * c).rem(b);
        let y = (c - &(&x * a)).exact_div(b).expect("exact by construction");
        (x, y)
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Yun's squarefree decomposition: monic, squarefree, pairwise coprime
    /// factors with `self = lc · Π fᵢ^eᵢ`.  Only non-constant factors are
    /// listed, in increasing multiplicity.
    pub fn squarefree(&self) -> Vec<(Poly<F>, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let d = f.derivative();
        let c = f.gcd(&d);
        let mut w = f.exact_div(&c).expect("gcd divides");
        let mut y = d.exact_div(&c).expect("gcd divides");
        let mut i = 1;
        while !w.is_constant() {
            let z = &y - &w.derivative();
            let g = w.gcd(&z);
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            w = w.exact_div(&g).expect("gcd divides");
            y = z.exact_div(&g).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// Product of the distinct monic squarefree factors.
    pub fn radical(&self) -> Poly<F> {
        self.squarefree().into_iter().fold(Poly::one(), |acc, (f, _)| &acc * &f)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Largest `e` such that `place^e` divides `self`.
    pub fn multiplicity_of(&self, place: &Poly<F>) -> usize {
        assert!(!self.is_zero() && !place.is_constant());
        let mut e = 0;
        let mut a = self.clone();
        while let Some(q) = a.exact_div(place) {
            a = q;
            e += 1;
        }
        e
    }
}

/// Refines squarefree polynomials into a pairwise coprime family such that
/// each input is the product of some members.  Output is monic and sorted
/// by degree, then by rendering, for determinism.
pub fn gcd_free_basis<F: Field>(inputs: &[Poly<F>]) -> Vec<Poly<F>> {
    let mut basis: Vec<Poly<F>> = Vec::new();
    for p in inputs {
        let mut rest = p.monic();
        if rest.is_constant() {
            continue;
        }
        let mut next = Vec::new();
        for q in basis {
            let g = rest.gcd(&q);
            if g.is_constant() {
                next.push(q);
                continue;
            }
            let qr = q.exact_div(&g).expect("gcd divides");
            rest = rest.exact_div(&g).expect("gcd divides");
            if !qr.is_constant() {
                next.push(qr);
            }
            next.push(g);
        }
        if !rest.is_constant() {
            next.push(rest);
        }
        basis = next;
    }
    basis.sort_by_cached_key(|p| (p.deg(), p.to_string()));
    basis
}

fn add_vec<R: Ring>(a: &[R], b: &[R], sub: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k);
            let y = b.get(k);
            match (x, y) {
                (Some(x), Some(y)) => {
                    if sub {
                        x.sub(y)
                    } else {
                        x.add(y)
                    }
                }
                (Some(x), None) => x.clone(),
                (None, Some(y)) => {
                    if sub {
                        y.neg()
                    } else {
                        y.clone()
                    }
                }
                (None, None) => unreachable!(),
            }
        })
        .collect()
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &Poly<R>) -> Poly<R> {
        Poly::new(add_vec(&self.c, &o.c, false))
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &Poly<R>) -> Poly<R> {
        Poly::new(add_vec(&self.c, &o.c, true))
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![R::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(c)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { c: self.c.iter().map(Ring::neg).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: Poly<R>) -> Poly<R> {
                $tr::$m(&self, &o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
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
        Poly::constant(R::from_int(n))
    }
}

/// Renders a coefficient, parenthesizing compound expressions.
pub(crate) fn wrap(s: &str) -> String {
    let inner = s.strip_prefix('-').unwrap_or(s);
    if inner.contains(" + ") || inner.contains(" - ") {
        format!("({s})")
    } else {
        s.to_string()
    }
}

impl<R: Ring> Poly<R> {
    /// Renders with a chosen variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let s = wrap(&a.to_string());
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) if !s.starts_with("(") => (true, rest.to_string()),
                _ => (false, s),
            };
            let zpart = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = if zpart.is_empty() {
                mag
            } else if mag == "1" {
                zpart
            } else {
                format!("{mag}*{zpart}")
            };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("z"))
    }
}
