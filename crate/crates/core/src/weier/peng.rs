use crate::exactnum::{to_decimal, LiteralParser, Num};
use crate::poly::{Place, Poly};

use super::families::{peng_literals, SQRT_S};
use super::{
    classify_ends, complete_null_curve, end_product_test, forms_from_data, integrate_null, peng_family,
    residues_vanish, PengParams, ProductVerdict, RatFn, WeierError,
};

/// Decimal values printed next to the exact parameters.
pub const PRINTED_PARAMS: [(&str, &str); 4] = [
    ("a", "-0.502000420331517"),
    ("b", "41.1579116001055"),
    ("c", "-6.09838667696593"),
    ("lambda", "-61.9838667696593"),
];

/// Printed leading digits of the constant terms of `P` and `Q`.
pub const PRINTED_CONSTANTS: [(&str, &str); 2] = [("P(0)", "1.19e8"), ("Q(0)", "-1.21e9")];

fn printed_p_constant() -> String {
    let s = SQRT_S;
    format!("-4264614*sqrt(15)*{s} + 5521560662*sqrt(15) - 16516779*{s} + 21384912489")
}

fn printed_q_constant() -> String {
    let s = SQRT_S;
    format!("43345442*sqrt(15)*{s} - 56121019962*sqrt(15) + 167876175*{s} - 217355775685")
}

fn printed_leading() -> String {
    let s = SQRT_S;
    format!("699302*sqrt(15)*{s} - 905413342*sqrt(15) + 2708385*{s} - 3506650795")
}

/// The order count at `z = 0` behind the claim that `0` cannot carry an
/// embedded planar end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderMismatch {
    pub ord_omega_at_zero: i64,
    pub gauss_pole_order: i64,
    /// `2 × gauss_pole_order`, the order a zero of `ω` would need.
    pub required: i64,
    pub mismatch: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PengDecimal {
    pub name: String,
    pub exact: String,
    pub decimal: String,
    pub printed: String,
    pub matches: bool,
}

/// Full exact pipeline for `(n, m) = (4, 2)`.
#[derive(Clone, Debug)]
pub struct PengFull {
    pub params: Vec<PengDecimal>,
    pub residues_vanish: bool,
    /// Whether `f` itself has a pole at `z = 0`.
    pub zero_is_end: bool,
    pub end_count: i64,
    pub all_embedded: bool,
    /// Per component, whether `F_j = f_j·Π` is a polynomial.
    pub components_polynomial: Vec<bool>,
    pub f3: String,
    pub p: String,
    pub q: String,
    /// `P` and `Q` agree in the coefficients of `z¹, …, z⁴`.
    pub higher_coefficients_agree: bool,
    pub constants_differ: bool,
    pub constants: Vec<PengDecimal>,
    /// The computed constants equal the printed radical expressions.
    pub constants_match_printed_expressions: bool,
    pub completed_degree: usize,
    pub completed_unbranched: bool,
    pub completed_in_quadric: bool,
    /// Whether the argument "F is not polynomial" goes through.
    pub refutation_holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PengVerdict {
    /// Some `F_j` fails to be polynomial.
    Refuted,
    /// Every check passes: the data behaves like a surface with embedded
    /// planar ends.
    Verified,
    /// Only the order count was run.
    Open,
}

impl PengVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            PengVerdict::Refuted => "REFUTED",
            PengVerdict::Verified => "VERIFIED",
            PengVerdict::Open => "OPEN",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PengReport {
    pub n: usize,
    pub m: usize,
    pub order_mismatch: OrderMismatch,
    pub full: Option<PengFull>,
    pub verdict: PengVerdict,
}

fn decimal(name: &str, x: &Num, digits: usize, printed: &str) -> Result<PengDecimal, WeierError> {
    let d = to_decimal(x, digits)?;
    Ok(PengDecimal { name: name.into(), exact: x.to_string(), matches: d == printed, decimal: d, printed: printed.into() })
}

pub fn refute_peng(n: usize, m: usize) -> Result<PengReport, WeierError> {
    let mut parser = LiteralParser::new();
    let lits = peng_literals();
    let raw: Vec<Num> = lits.iter().map(|l| parser.parse(l)).collect::<Result<_, _>>()?;
    let extra: Vec<Num> = [printed_p_constant(), printed_q_constant(), printed_leading()]
        .iter()
        .map(|l| parser.parse(l))
        .collect::<Result<_, _>>()?;
    let fin = |x: &Num| parser.finish(x);
    let params = PengParams { a: fin(&raw[0]), b: fin(&raw[1]), c: fin(&raw[2]), lambda: fin(&raw[3]) };
    let data = peng_family(n, m, &params)?;

    let zero = Place::Finite(Poly::monomial(Num::one(), 1));
    let ord_omega = data.form().ord(&zero).expect("nonzero form");
    let pole = -data.gauss().ord(&zero).expect("nonconstant gauss map");
    let order_mismatch = OrderMismatch {
        ord_omega_at_zero: ord_omega,
        gauss_pole_order: pole,
        required: 2 * pole,
        mismatch: ord_omega != 2 * pole,
    };
    if (n, m) != (4, 2) {
        return Ok(PengReport { n, m, order_mismatch, full: None, verdict: PengVerdict::Open });
    }

    let decimals = PRINTED_PARAMS
        .iter()
        .zip(params.as_array())
        .map(|((name, printed), x)| decimal(name, x, 15, printed))
        .collect::<Result<Vec<_>, _>>()?;

    let forms = forms_from_data(&data);
    let residues = residues_vanish(&forms);
    let residues_ok = residues.all_vanish();
    let f = integrate_null(&forms)?;
    let ends = classify_ends(&f);
    let zero_is_end = f.components().iter().any(|c| !c.den().is_constant() && c.den().coeff(0).is_zero());
    let verdict_product = end_product_test(&f);
    let product: Vec<RatFn> = match &verdict_product {
        ProductVerdict::Polynomial { product, .. } => product.iter().cloned().map(RatFn::from_poly).collect(),
        ProductVerdict::NotPolynomial { product, .. } => product.clone(),
    };
    let components_polynomial: Vec<bool> = product.iter().map(RatFn::is_polynomial).collect();

    // F₃ = −(2/3)·z²·(z⁴ − λ)·P/Q, normalized so that P has the printed z⁴ coefficient.
    let z4 = Poly::monomial(Num::one(), 4);
    let prefactor = (&z4 - &Poly::constant(params.lambda.clone())).shift(2).scale(&(&Num::from_int(-2) / &Num::from_int(3)));
    let ratio = product[2].div(&RatFn::from_poly(prefactor)).expect("nonzero prefactor");
    let leading = fin(&extra[2]);
    let (p, q) = (ratio.num().clone(), ratio.den().clone());
    let t = &leading / &q.lc();
    let (p, q) = (p.scale(&t), q.scale(&t));
    let higher_coefficients_agree = p.deg() == 4 && q.deg() == 4 && (1..=4).all(|k| p.coeff(k) == q.coeff(k));
    let (p0, q0) = (p.coeff(0), q.coeff(0));
    let constants = vec![
        decimal(PRINTED_CONSTANTS[0].0, &p0, 3, PRINTED_CONSTANTS[0].1)?,
        decimal(PRINTED_CONSTANTS[1].0, &q0, 3, PRINTED_CONSTANTS[1].1)?,
    ];
    let constants_match_printed_expressions = p0 == fin(&extra[0]) && q0 == fin(&extra[1]);

    let completed = complete_null_curve(&f)?;
    let refutation_holds = components_polynomial.iter().any(|b| !b);
    let full = PengFull {
        params: decimals,
        residues_vanish: residues_ok,
        zero_is_end,
        end_count: f.poles().support_size(),
        all_embedded: ends.iter().all(|e| e.embedded),
        components_polynomial,
        f3: product[2].to_string(),
        p: p.to_string(),
        q: q.to_string(),
        higher_coefficients_agree,
        constants_differ: p0 != q0,
        constants,
        constants_match_printed_expressions,
        completed_degree: completed.degree(),
        completed_unbranched: completed.unbranched(),
        completed_in_quadric: completed.in_quadric,
        refutation_holds,
    };
    let verdict = if refutation_holds { PengVerdict::Refuted } else { PengVerdict::Verified };
    Ok(PengReport { n, m, order_mismatch, full: Some(full), verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_count_only_for_other_pairs() {
        let r = refute_peng(5, 2).unwrap();
        assert_eq!(r.order_mismatch, OrderMismatch { ord_omega_at_zero: 2, gauss_pole_order: 2, required: 4, mismatch: true });
        assert_eq!(r.verdict, PengVerdict::Open);
        let r = refute_peng(4, 3).unwrap();
        assert_eq!((r.order_mismatch.ord_omega_at_zero, r.order_mismatch.required), (4, 6));
    }
}
