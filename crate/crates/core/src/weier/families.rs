use crate::curves::{ProjectiveCurve, SymplecticStructure};
use crate::exactnum::{LiteralParser, Num};
use crate::poly::{Field, Poly};

use super::{NullCurveData, RatFn, WeierError, WeierstrassData};

/// `[−1/(2d−1), z^(d−1), z^d, z^(2d−1)]` with `β = ξ₀∧ξ₃ + ξ₁∧ξ₂`.
pub fn fd_family<F: Field>(d: usize) -> Result<(ProjectiveCurve<F>, SymplecticStructure<F>), WeierError> {
    if d < 2 {
        return Err(WeierError::Constraints(vec![format!("d = {d} must be at least 2")]));
    }
    let a = F::from_int(-1).div(&F::from_int(2 * d as i64 - 1)).expect("nonzero");
    let coords = vec![
        Poly::constant(a),
        Poly::monomial(F::one(), d - 1),
        Poly::monomial(F::one(), d),
        Poly::monomial(F::one(), 2 * d - 1),
    ];
    Ok((ProjectiveCurve::normalize(coords)?, SymplecticStructure::standard()))
}

fn zpow(a: Num, k: usize) -> Poly<Num> {
    Poly::monomial(a, k)
}

fn cst(a: Num) -> Poly<Num> {
    Poly::constant(a)
}

/// Data of the `2n`-ended family with `s = √(2n−1)` and `r = 2s/(n−1)`.
#[derive(Clone, Debug)]
pub struct KusnerFamily {
    pub n: usize,
    pub s: Num,
    pub r: Num,
    pub data: WeierstrassData,
    /// `R = z^(2n) + r·z^n − 1`.
    pub end_polynomial: Poly<Num>,
    /// Whether `gcd(R, R′) = 1`.
    pub ends_distinct: bool,
}

pub fn kusner_family(n: usize) -> Result<KusnerFamily, WeierError> {
    if n < 2 {
        return Err(WeierError::Constraints(vec![format!("n = {n} must be at least 2")]));
    }
    let mut parser = LiteralParser::new();
    let s = parser.parse(&format!("sqrt({})", 2 * n - 1))?;
    let r = &(&s * &Num::from_int(2)) / &Num::from_int(n as i64 - 1);
    let one = Num::one();
    let gnum = &zpow(one.clone(), 2 * n - 1) - &zpow(s.clone(), n - 1);
    let sz = &zpow(s.clone(), n) + &cst(one.clone());
    let rpoly = &(&zpow(one.clone(), 2 * n) + &zpow(r.clone(), n)) - &cst(one);
    let gauss = RatFn::new(gnum, sz.clone()).expect("nonzero denominator");
    let form = RatFn::new((&sz * &sz).scale(&Num::i()), &rpoly * &rpoly).expect("nonzero denominator");
    let ends_distinct = rpoly.gcd(&rpoly.derivative()).is_one();
    Ok(KusnerFamily { n, s, r, data: WeierstrassData::new(gauss, form)?, end_polynomial: rpoly, ends_distinct })
}

/// `i/R · (z^(2n−1) − z, −i(z^(2n−1) + z), ((n−1)/n)(z^(2n) + 1))`.
pub fn kusner_closed_form(k: &KusnerFamily) -> Result<NullCurveData, WeierError> {
    let n = k.n;
    let one = Num::one();
    let i = Num::i();
    let top = zpow(one.clone(), 2 * n - 1);
    let lin = zpow(one.clone(), 1);
    let q = &Num::from_int(n as i64 - 1) / &Num::from_int(n as i64);
    let raw = [
        &top - &lin,
        (&top + &lin).scale(&-&i),
        (&zpow(one.clone(), 2 * n) + &cst(one)).scale(&q),
    ];
    let comps = raw
        .into_iter()
        .map(|p| RatFn::new(p.scale(&i), k.end_polynomial.clone()).expect("nonzero denominator"))
        .collect();
    NullCurveData::new(comps)
}

/// The four tower parameters `(a, b, c, λ)` of the `(n, m)` family.
#[derive(Clone, Debug)]
pub struct PengParams {
    pub a: Num,
    pub b: Num,
    pub c: Num,
    pub lambda: Num,
}

impl PengParams {
    pub fn as_array(&self) -> [&Num; 4] {
        [&self.a, &self.b, &self.c, &self.lambda]
    }
}

pub(crate) const SQRT_S: &str = "sqrt(215208*sqrt(15) + 833497)";

pub(crate) fn peng_literals() -> [String; 4] {
    let s = SQRT_S;
    [
        format!("(488*sqrt(15) - 3*{s} + 1890)/(3*(8*sqrt(15) + 31))"),
        format!(
            "-(9*sqrt(15)*{s} - 8983*sqrt(15) + 33*{s} - 34791)/(3*(5*sqrt(15)*{s} - 6747*sqrt(15) + 21*{s} - 26131))"
        ),
        "-(7*sqrt(15) + 27)/(sqrt(15) + 5)".to_string(),
        "-8*sqrt(15) - 31".to_string(),
    ]
}

/// The exact parameters published for `(n, m) = (4, 2)`, built in
/// `Q(√15)(√(215208√15 + 833497))`.
pub fn peng_default_params() -> Result<PengParams, WeierError> {
    let mut parser = LiteralParser::new();
    let lits = peng_literals();
    let parsed: Vec<Num> = lits.iter().map(|l| parser.parse(l)).collect::<Result<_, _>>()?;
    let fin: Vec<Num> = parsed.iter().map(|x| parser.finish(x)).collect();
    Ok(PengParams { a: fin[0].clone(), b: fin[1].clone(), c: fin[2].clone(), lambda: fin[3].clone() })
}

/// `g = (zⁿ−a)(zⁿ−b)/(z^m(zⁿ−c))`, `ω = z^(2m−2)(zⁿ−c)²/((zⁿ−1)²(zⁿ−λ)²)`.
pub fn peng_family(n: usize, m: usize, p: &PengParams) -> Result<WeierstrassData, WeierError> {
    let mut bad = Vec::new();
    if n < 4 {
        bad.push(format!("n = {n} must be at least 4"));
    }
    if m < 2 || m + 1 > n {
        bad.push(format!("m = {m} must satisfy 2 <= m <= n - 1"));
    }
    if 2 * m == n + 1 {
        bad.push(format!("2m = n + 1 = {}", n + 1));
    }
    let names = ["a", "b", "c", "lambda"];
    let vals = p.as_array();
    for i in 0..4 {
        if vals[i].is_zero() || *vals[i] == Num::one() {
            bad.push(format!("{} must differ from 0 and 1", names[i]));
        }
        for j in i + 1..4 {
            if vals[i] == vals[j] {
                bad.push(format!("{} = {}", names[i], names[j]));
            }
        }
    }
    if !bad.is_empty() {
        return Err(WeierError::Constraints(bad));
    }
    let zn = |x: &Num| &zpow(Num::one(), n) - &cst(x.clone());
    let gauss = RatFn::new(&zn(&p.a) * &zn(&p.b), zn(&p.c).shift(m)).expect("nonzero denominator");
    let one = Num::one();
    let den = &zn(&one) * &zn(&p.lambda);
    let form = RatFn::new((&zn(&p.c) * &zn(&p.c)).shift(2 * m - 2), &den * &den).expect("nonzero denominator");
    WeierstrassData::new(gauss, form)
}
