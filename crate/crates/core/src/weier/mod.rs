//! Weierstrass data `(g, ω)` of minimal surfaces and the meromorphic null
//! curves they integrate to.
//!
//! Everything is exact over tower numbers.  Forms are stored as rational
//! functions standing for the coefficient of `dz`.  Ends sitting at
//! irrational points are handled together, one squarefree place at a time,
//! by computing modulo the place polynomial.

mod families;
mod peng;

use crate::curves::{CurveError, Divisor, ProjectiveCurve};
use crate::exactnum::{Num, NumError};
use crate::poly::{gcd_free_basis, hermite_reduce, Place, Poly, RationalFunction};

pub use families::{fd_family, kusner_closed_form, kusner_family, peng_default_params, peng_family, KusnerFamily, PengParams};
pub use peng::{refute_peng, OrderMismatch, PRINTED_CONSTANTS, PengDecimal, PengFull, PengReport, PengVerdict, PRINTED_PARAMS};

pub type RatFn = RationalFunction<Num>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WeierError {
    #[error("the Gauss map is constant")]
    ConstantGauss,
    #[error("the 1-form vanishes")]
    ZeroForm,
    #[error("the curve is not null")]
    NotNull,
    #[error("nonvanishing residues at {0:?}")]
    Residues(Vec<String>),
    #[error("parameter constraints violated: {0:?}")]
    Constraints(Vec<String>),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Gauss map and the `dz` coefficient of the height differential.
#[derive(Clone, Debug)]
pub struct WeierstrassData {
    gauss: RatFn,
    form: RatFn,
}

impl WeierstrassData {
    pub fn new(gauss: RatFn, form: RatFn) -> Result<Self, WeierError> {
        if gauss.num().deg() <= 0 && gauss.den().deg() <= 0 {
            return Err(WeierError::ConstantGauss);
        }
        if form.is_zero() {
            return Err(WeierError::ZeroForm);
        }
        Ok(WeierstrassData { gauss, form })
    }

    pub fn gauss(&self) -> &RatFn {
        &self.gauss
    }

    pub fn form(&self) -> &RatFn {
        &self.form
    }
}

/// `((1−g²)ω, i(1+g²)ω, 2gω)`.
pub fn forms_from_data(w: &WeierstrassData) -> [RatFn; 3] {
    let g2 = w.gauss.mul(&w.gauss);
    let one = RatFn::constant(Num::one());
    [
        one.sub(&g2).mul(&w.form),
        one.add(&g2).mul(&w.form).scale(&Num::i()),
        w.gauss.mul(&w.form).scale(&Num::from_int(2)),
    ]
}

/// `φ₁² + φ₂² + φ₃² ≡ 0`.
pub fn verify_null(forms: &[RatFn]) -> bool {
    forms.iter().fold(RatFn::zero(), |acc, p| acc.add(&p.mul(p))).is_zero()
}

/// Outcome of Hermite reduction on each component.
#[derive(Clone, Debug)]
pub struct ResidueReport {
    pub rational_parts: Vec<RatFn>,
    /// Per component, the denominators of the logarithmic remainder.
    pub offending: Vec<Vec<Poly<Num>>>,
}

impl ResidueReport {
    pub fn all_vanish(&self) -> bool {
        self.offending.iter().all(Vec::is_empty)
    }

    pub fn offending_places(&self) -> Vec<String> {
        self.offending
            .iter()
            .enumerate()
            .flat_map(|(j, ps)| ps.iter().map(move |p| format!("component {}: {}", j + 1, p)))
            .collect()
    }
}

pub fn residues_vanish(forms: &[RatFn]) -> ResidueReport {
    let mut rational_parts = Vec::new();
    let mut offending = Vec::new();
    for f in forms {
        let (r, rem) = hermite_reduce(f);
        rational_parts.push(r);
        offending.push(rem.into_iter().map(|(_, d)| d).collect());
    }
    ResidueReport { rational_parts, offending }
}

/// A meromorphic null curve in `C³` with its pole divisor.
#[derive(Clone, Debug)]
pub struct NullCurveData {
    components: Vec<RatFn>,
    poles: Divisor<Num>,
}

impl NullCurveData {
    pub fn new(components: Vec<RatFn>) -> Result<Self, WeierError> {
        let derivs: Vec<RatFn> = components.iter().map(RatFn::derivative).collect();
        if !verify_null(&derivs) {
            return Err(WeierError::NotNull);
        }
        let poles = pole_divisor(&components);
        Ok(NullCurveData { components, poles })
    }

    pub fn components(&self) -> &[RatFn] {
        &self.components
    }

    pub fn poles(&self) -> &Divisor<Num> {
        &self.poles
    }
}

fn pole_places(components: &[RatFn]) -> Vec<Poly<Num>> {
    let sqf: Vec<Poly<Num>> = components
        .iter()
        .filter(|c| !c.den().is_constant())
        .flat_map(|c| c.den().squarefree().into_iter().map(|(p, _)| p))
        .collect();
    gcd_free_basis(&sqf)
}

fn infinity_pole_order(c: &RatFn) -> i64 {
    if c.is_zero() {
        0
    } else {
        (c.num().deg() - c.den().deg()).max(0)
    }
}

fn pole_divisor(components: &[RatFn]) -> Divisor<Num> {
    let places: Vec<(Poly<Num>, i64)> = pole_places(components)
        .into_iter()
        .map(|p| {
            let m = components.iter().map(|c| finite_pole_order(c, &p)).max().unwrap_or(0);
            (p, m)
        })
        .collect();
    let inf = components.iter().map(infinity_pole_order).max().unwrap_or(0);
    Divisor::from_places(&places, inf)
}

fn finite_pole_order(c: &RatFn, place: &Poly<Num>) -> i64 {
    if c.den().is_constant() {
        0
    } else {
        c.den().multiplicity_of(place) as i64
    }
}

/// Exact antiderivatives with zero integration constants.
pub fn integrate_null(forms: &[RatFn]) -> Result<NullCurveData, WeierError> {
    let report = residues_vanish(forms);
    if !report.all_vanish() {
        return Err(WeierError::Residues(report.offending_places()));
    }
    NullCurveData::new(report.rational_parts)
}

/// Local data of one end.
#[derive(Clone, Debug)]
pub struct EndProfile {
    pub place: Place<Num>,
    /// Pole order of `f` along the place.
    pub multiplicity: i64,
    /// Leading Laurent vector, as residues modulo the place.
    pub leading: Vec<Poly<Num>>,
    /// Logarithmic growth; identically zero for rational `f`.
    pub log_growth: Num,
    pub embedded: bool,
    pub planar: bool,
}

/// Inverse of `a` modulo the squarefree `p`, when it exists.
fn inverse_mod(a: &Poly<Num>, p: &Poly<Num>) -> Option<Poly<Num>> {
    let (g, s, _) = a.rem(p).ext_gcd(p);
    g.is_one().then(|| s.rem(p))
}

pub fn classify_ends(f: &NullCurveData) -> Vec<EndProfile> {
    let mut out = Vec::new();
    for p in pole_places(&f.components) {
        let m = f.components.iter().map(|c| finite_pole_order(c, &p)).max().unwrap_or(0);
        let dp = p.derivative();
        let leading = f
            .components
            .iter()
            .map(|c| {
                if finite_pole_order(c, &p) < m {
                    return Poly::zero();
                }
                let u = c.den().exact_div(&p.pow(m as u32)).expect("pole order divides");
                let denom = &u * &dp.pow(m as u32);
                let inv = inverse_mod(&denom, &p).expect("cofactor is a unit modulo the place");
                (c.num() * &inv).rem(&p)
            })
            .collect();
        out.push(profile(Place::Finite(p), m, leading));
    }
    let m = f.components.iter().map(infinity_pole_order).max().unwrap_or(0);
    if m > 0 {
        let leading = f
            .components
            .iter()
            .map(|c| {
                if infinity_pole_order(c) < m {
                    Poly::zero()
                } else {
                    Poly::constant(c.num().lc().try_div(&c.den().lc()).expect("monic denominator"))
                }
            })
            .collect();
        out.push(profile(Place::Infinity, m, leading));
    }
    out
}

fn profile(place: Place<Num>, multiplicity: i64, leading: Vec<Poly<Num>>) -> EndProfile {
    EndProfile { place, multiplicity, leading, log_growth: Num::zero(), embedded: multiplicity == 1, planar: multiplicity == 1 }
}

/// Result of clearing the poles of `f` with the radical of its denominators.
#[derive(Clone, Debug, PartialEq)]
pub enum ProductVerdict {
    Polynomial { degree: i64, product: Vec<Poly<Num>> },
    NotPolynomial { component: usize, surviving_denominator: Poly<Num>, product: Vec<RatFn> },
}

impl ProductVerdict {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, ProductVerdict::Polynomial { .. })
    }
}

/// `F = f·Π` with `Π` the product of the finite pole places.
pub fn end_product_test(f: &NullCurveData) -> ProductVerdict {
    let pi = pole_places(&f.components).iter().fold(Poly::one(), |acc, p| &acc * p);
    let pi = RatFn::from_poly(pi);
    let product: Vec<RatFn> = f.components.iter().map(|c| c.mul(&pi)).collect();
    if let Some((j, c)) = product.iter().enumerate().find(|(_, c)| !c.is_polynomial()) {
        return ProductVerdict::NotPolynomial {
            component: j,
            surviving_denominator: c.den().clone(),
            product: product.clone(),
        };
    }
    let polys: Vec<Poly<Num>> = product.iter().map(|c| c.num().clone()).collect();
    let degree = polys.iter().map(Poly::deg).max().unwrap_or(-1);
    ProductVerdict::Polynomial { degree, product: polys }
}

/// The null curve `[1, f, ⟨f,f⟩]` in `Q³ ⊂ P⁴`.
#[derive(Clone, Debug)]
pub struct CompletedCurve {
    pub curve: ProjectiveCurve<Num>,
    pub in_quadric: bool,
    pub pole_count: i64,
    pub all_simple: bool,
    pub ramification: Divisor<Num>,
}

impl CompletedCurve {
    pub fn degree(&self) -> usize {
        self.curve.degree()
    }

    pub fn unbranched(&self) -> bool {
        self.ramification.is_zero()
    }
}

pub fn complete_null_curve(f: &NullCurveData) -> Result<CompletedCurve, WeierError> {
    let derivs: Vec<RatFn> = f.components.iter().map(RatFn::derivative).collect();
    if !verify_null(&derivs) {
        return Err(WeierError::NotNull);
    }
    let norm = f.components.iter().fold(RatFn::zero(), |acc, c| acc.add(&c.mul(c)));
    let mut entries = vec![RatFn::constant(Num::one())];
    entries.extend(f.components.iter().cloned());
    entries.push(norm);
    let l = entries.iter().fold(Poly::one(), |acc, e| {
        let g = acc.gcd(e.den());
        &acc * &e.den().exact_div(&g).expect("gcd divides")
    });
    let coords: Vec<Poly<Num>> = entries
        .iter()
        .map(|e| (&l * e.num()).exact_div(e.den()).expect("common denominator clears"))
        .collect();
    let curve = ProjectiveCurve::normalize(coords)?;
    let x = curve.coords();
    let in_quadric = (&x[0] * &x[4]) == (&(&(&x[1] * &x[1]) + &(&x[2] * &x[2])) + &(&x[3] * &x[3]));
    let ramification = curve.ramification_divisor(1)?;
    Ok(CompletedCurve {
        in_quadric,
        pole_count: f.poles.support_size(),
        all_simple: f.poles.finite().iter().all(|(_, m)| *m == 1) && f.poles.infinity() <= 1,
        ramification,
        curve,
    })
}

/// Total curvature and the Jorge–Meeks count for genus `genus` with
/// `ends` ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureReport {
    pub gauss_degree: usize,
    /// `k` with total curvature `−4πk`.
    pub total_curvature_quarter: usize,
    pub jorge_meeks_consistent: bool,
}

pub fn curvature_and_jorge_meeks(w: &WeierstrassData, genus: i64, ends: i64) -> CurvatureReport {
    let deg = w.gauss.map_degree();
    CurvatureReport {
        gauss_degree: deg,
        total_curvature_quarter: deg,
        jorge_meeks_consistent: deg as i64 == genus - 1 + ends,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_literal;

    fn np(c: &[i64]) -> Poly<Num> {
        Poly::new(c.iter().map(|&x| Num::from_int(x)).collect())
    }

    #[test]
    fn enneper_forms() {
        let w = WeierstrassData::new(RatFn::from_poly(np(&[0, 1])), RatFn::constant(Num::one())).unwrap();
        let f = forms_from_data(&w);
        assert_eq!(f[0], RatFn::from_poly(np(&[1, 0, -1])));
        assert_eq!(f[2], RatFn::from_poly(np(&[0, 2])));
        assert!(verify_null(&f));
        let curve = integrate_null(&f).unwrap();
        assert_eq!(curve.poles().infinity(), 3);
        let ends = classify_ends(&curve);
        assert_eq!(ends.len(), 1);
        assert!(!ends[0].embedded);
    }

    #[test]
    fn non_null_constants() {
        let c = [RatFn::constant(Num::one()), RatFn::constant(Num::i()), RatFn::constant(Num::one())];
        assert!(!verify_null(&c));
    }

    #[test]
    fn simple_pole_residue_is_reported() {
        let f = [RatFn::new(np(&[1]), np(&[0, 1])).unwrap(), RatFn::zero(), RatFn::zero()];
        let r = residues_vanish(&f);
        assert!(!r.all_vanish());
        assert_eq!(r.offending[0], vec![np(&[0, 1])]);
        assert!(matches!(integrate_null(&f), Err(WeierError::Residues(_))));
    }

    #[test]
    fn double_pole_survives_product() {
        // (1/z + 1/(z−1)², i/z, 0) is not null; the product test only looks at poles.
        let a = RatFn::new(np(&[1]), np(&[0, 1])).unwrap().add(&RatFn::new(np(&[1]), np(&[1, -2, 1])).unwrap());
        let data = NullCurveData { poles: pole_divisor(std::slice::from_ref(&a)), components: vec![a] };
        match end_product_test(&data) {
            ProductVerdict::NotPolynomial { surviving_denominator, .. } => assert_eq!(surviving_denominator, np(&[-1, 1])),
            v => panic!("unexpected {v:?}"),
        }
        let ends = classify_ends(&data);
        let double = ends.iter().find(|e| e.multiplicity == 2).unwrap();
        assert!(!double.embedded);
    }

    #[test]
    fn costa_bookkeeping() {
        let g = RatFn::from_poly(np(&[0, 0, 0, 0, 1]));
        let w = WeierstrassData::new(g, RatFn::constant(parse_literal("2").unwrap())).unwrap();
        assert!(curvature_and_jorge_meeks(&w, 1, 4).jorge_meeks_consistent);
    }
}
