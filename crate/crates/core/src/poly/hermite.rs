//! Hermite reduction of rational 1-forms `A/D dz`.
//!
//! The quadratic variant is used: for each squarefree factor `V` of
//! multiplicity `i ≥ 2` in `D = U·V^i`, the equation
//! `B·U·V' + C·V = −A/j` is solved for `j = i−1, …, 1`, peeling one power
//! of `V` off the denominator per step.  What remains has a squarefree
//! denominator and is split along the original squarefree factors.  No
//! root of `D` is ever computed, so the test "all residues vanish" is exact
//! over any coefficient field.

use super::{Field, Poly, RationalFunction};

/// Logarithmic part left after Hermite reduction: pairs of a numerator and
/// a squarefree denominator, each pair reduced.  Empty exactly when every
/// residue of the form vanishes.
pub type LogRemainder<F> = Vec<(Poly<F>, Poly<F>)>;

fn integrate_poly<F: Field>(p: &Poly<F>) -> Poly<F> {
    let mut c = vec![F::zero()];
    for (k, a) in p.coeffs().iter().enumerate() {
        let inv = F::from_int(k as i64 + 1).inv().expect("characteristic zero");
        c.push(a.mul(&inv));
    }
    Poly::new(c)
}

/// Splits `form` into `d/dz(rational_part) + Σ num/den` with squarefree,
/// pairwise coprime denominators.  The integration constant is zero.
pub fn hermite_reduce<F: Field>(form: &RationalFunction<F>) -> (RationalFunction<F>, LogRemainder<F>) {
    let (poly_part, mut a) = form.num().div_rem(form.den());
    let mut rational = RationalFunction::from_poly(integrate_poly(&poly_part));
    let mut d = form.den().clone();
    if a.is_zero() {
        return (rational, Vec::new());
    }
    let factors = d.squarefree();
    for (v, i) in factors.iter().filter(|(_, i)| *i >= 2) {
        let vi = v.pow(*i as u32);
        let u = d.exact_div(&vi).expect("squarefree factor divides");
        let uv = &u * &v.derivative();
        for j in (1..*i).rev() {
            let jinv = F::from_int(j as i64).inv().expect("characteristic zero");
            let rhs = a.scale(&jinv.neg());
            let (b, c) = Poly::diophantine(&uv, v, &rhs);
            let term = RationalFunction::new(b.clone(), v.pow(j as u32)).expect("nonzero");
            rational = rational.add(&term);
            a = &c.scale(&F::from_int(j as i64).neg()) - &(&u * &b.derivative());
        }
        d = &u * v;
    }
    let (q, r) = a.div_rem(&d);
    if !q.is_zero() {
        rational = rational.add(&RationalFunction::from_poly(integrate_poly(&q)));
    }
    let mut remainder = Vec::new();
    if r.is_zero() {
        return (rational, remainder);
    }
    for (v, _) in &factors {
        let w = d.exact_div(v).expect("factor divides reduced denominator");
        let (g, s, _) = w.ext_gcd(v);
        debug_assert!(g.is_one());
        let ai = (&r * &s).rem(v);
        if ai.is_zero() {
            continue;
        }
        let g = ai.gcd(v);
        let (num, den) = (ai.exact_div(&g).expect("divides"), v.exact_div(&g).expect("divides"));
        let inv = den.lc().inv().expect("nonzero");
        remainder.push((num.scale(&inv), den.scale(&inv)));
    }
    (rational, remainder)
}

/// Sums a remainder back into a single rational function.
pub fn remainder_sum<F: Field>(rem: &LogRemainder<F>) -> RationalFunction<F> {
    rem.iter().fold(RationalFunction::zero(), |acc, (n, d)| {
        acc.add(&RationalFunction::new(n.clone(), d.clone()).expect("nonzero"))
    })
}
