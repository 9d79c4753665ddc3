//! Wedge-coefficient non-existence certificates.
//!
//! Each certificate starts from a reduced normal form `F = (F₀, F₁, F₂, F₃)`
//! of a totally ramified contact curve whose two distinguished branch
//! points sit at `0` and `∞`.  One Plücker coordinate of `F ∧ F′`, after
//! the common power of `z` is removed, reads `z^k·h(z)`.  Its nonzero
//! roots must carry the branching at the remaining points, so
//! `deg h < (d − 3) − r₁(0) − r₁(∞)` is impossible as soon as `h(0)` is a
//! nonzero number.

use std::fmt;

use crate::exactnum::int;
use crate::poly::{derivative_rows, k_subsets, wedge_minors, ParamPoly, Poly};

use super::ClassifyError;

pub type PPoly = Poly<ParamPoly>;

fn p(name: &str, j: usize) -> ParamPoly {
    ParamPoly::var(name, j as u32)
}

fn lam(j: usize) -> ParamPoly {
    p("lambda", j)
}
fn mu(j: usize) -> ParamPoly {
    p("mu", j)
}
fn nu(j: usize) -> ParamPoly {
    p("nu", j)
}
fn pi(j: usize) -> ParamPoly {
    p("pi", j)
}

fn c(n: i64) -> ParamPoly {
    ParamPoly::constant(int(n))
}

/// `Σ coef·z^k` from `(coef, k)` pairs.
fn sum(terms: Vec<(ParamPoly, usize)>) -> PPoly {
    terms.into_iter().fold(Poly::zero(), |acc, (a, k)| &acc + &Poly::monomial(a, k))
}

fn zk(k: usize) -> (ParamPoly, usize) {
    (c(1), k)
}

/// `Σ_{j∈range} name_j z^j`.
fn run(f: fn(usize) -> ParamPoly, range: std::ops::RangeInclusive<usize>) -> Vec<(ParamPoly, usize)> {
    range.map(|j| (f(j), j)).collect()
}

fn times(a: &ParamPoly, q: &PPoly) -> PPoly {
    q.map(|x| a.mul(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertificateId {
    Deg8,
    Deg9,
    Deg10Case1,
    Deg10Case2,
    Deg11,
    Exc2_1142,
    Exc2_1143,
    Exc2_2142,
    Exc2_2143,
    Exc2_3142,
}

impl CertificateId {
    pub const ALL: [CertificateId; 10] = [
        CertificateId::Deg8,
        CertificateId::Deg9,
        CertificateId::Deg10Case1,
        CertificateId::Deg10Case2,
        CertificateId::Deg11,
        CertificateId::Exc2_1142,
        CertificateId::Exc2_1143,
        CertificateId::Exc2_2142,
        CertificateId::Exc2_2143,
        CertificateId::Exc2_3142,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CertificateId::Deg8 => "DEG8",
            CertificateId::Deg9 => "DEG9",
            CertificateId::Deg10Case1 => "DEG10_CASE1",
            CertificateId::Deg10Case2 => "DEG10_CASE2",
            CertificateId::Deg11 => "DEG11",
            CertificateId::Exc2_1142 => "EXC2_1142",
            CertificateId::Exc2_1143 => "EXC2_1143",
            CertificateId::Exc2_2142 => "EXC2_2142",
            CertificateId::Exc2_2143 => "EXC2_2143",
            CertificateId::Exc2_3142 => "EXC2_3142",
        }
    }

    pub fn parse(s: &str) -> Result<CertificateId, ClassifyError> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        Self::ALL.into_iter().find(|c| c.as_str() == up).ok_or_else(|| ClassifyError::UnknownCase(s.to_string()))
    }

    /// Whether the normal form depends on an integer `e`.
    pub fn is_family(self) -> bool {
        self.min_e().is_some()
    }

    /// Smallest valid family parameter.
    pub fn min_e(self) -> Option<usize> {
        match self {
            CertificateId::Exc2_2142 => Some(3),
            CertificateId::Exc2_1142 | CertificateId::Exc2_1143 | CertificateId::Exc2_2143 | CertificateId::Exc2_3142 => {
                Some(2)
            }
            _ => None,
        }
    }

    /// Degree of the contact curve.
    pub fn degree(self, e: usize) -> usize {
        match self {
            CertificateId::Deg8 => 7,
            CertificateId::Deg9 => 8,
            CertificateId::Deg10Case1 | CertificateId::Deg10Case2 => 9,
            CertificateId::Deg11 => 10,
            CertificateId::Exc2_1142 => 4 * e + 3,
            CertificateId::Exc2_1143 => 4 * e + 1,
            CertificateId::Exc2_2142 => 3 * e,
            CertificateId::Exc2_2143 => 3 * e + 1,
            CertificateId::Exc2_3142 => 3 * e + 2,
        }
    }

    /// `(r₁(0), r₁(∞))`.
    pub fn branching(self, e: usize) -> (usize, usize) {
        match self {
            CertificateId::Deg8 | CertificateId::Deg9 => (1, 1),
            CertificateId::Deg10Case1 => (3, 1),
            CertificateId::Deg10Case2 => (2, 1),
            CertificateId::Deg11 => (2, 2),
            CertificateId::Exc2_1142 => (2 * e, e - 1),
            CertificateId::Exc2_1143 => (2 * e - 1, e - 1),
            CertificateId::Exc2_2142 => (e - 1, e - 2),
            CertificateId::Exc2_2143 | CertificateId::Exc2_3142 => (e - 1, e - 1),
        }
    }

    /// Plücker coordinate `(i, j)` of `F ∧ F′` that is inspected.
    pub fn target(self) -> (usize, usize) {
        match self {
            CertificateId::Deg9
            | CertificateId::Deg10Case2
            | CertificateId::Exc2_1142
            | CertificateId::Exc2_2142
            | CertificateId::Exc2_3142 => (2, 3),
            _ => (1, 3),
        }
    }

    /// `(d − 3) − r₁(0) − r₁(∞)`.
    pub fn required_roots(self, e: usize) -> i64 {
        let (r0, ri) = self.branching(e);
        self.degree(e) as i64 - 3 - r0 as i64 - ri as i64
    }

    /// Default family parameter: the smallest valid one.
    pub fn default_e(self) -> usize {
        self.min_e().unwrap_or(0)
    }

    /// Family parameters whose degree equals `d`.
    pub fn e_for_degree(self, d: usize) -> Option<usize> {
        match self.min_e() {
            None => (self.degree(0) == d).then_some(0),
            Some(lo) => (lo..=d).find(|&e| self.degree(e) == d),
        }
    }

    /// The reduced normal form `(F₀, F₁, F₂, F₃)`.
    pub fn normal_form(self, e: usize) -> [PPoly; 4] {
        match self {
            CertificateId::Deg8 => {
                let tail = sum(vec![(pi(1), 6), zk(7)]);
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=5));
                [
                    &sum(f0) + &times(&lam(6), &tail),
                    sum(vec![zk(2), (mu(1), 3), (mu(2), 5)]),
                    &sum(vec![zk(3), (nu(1), 4), (nu(2), 5)]) + &times(&nu(3), &tail),
                    sum(vec![zk(5)]),
                ]
            }
            CertificateId::Deg9 => {
                let tail = sum(vec![(pi(1), 7), zk(8)]);
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=6));
                let mut f1 = vec![zk(2)];
                f1.extend(run(mu, 3..=6).into_iter().map(|(_, k)| (mu(k - 2), k)));
                [
                    &sum(f0) + &times(&lam(7), &tail),
                    &sum(f1) + &times(&mu(5), &tail),
                    sum(vec![zk(3), (nu(1), 4), (nu(2), 5)]),
                    sum(vec![zk(5)]),
                ]
            }
            CertificateId::Deg10Case1 => {
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=7));
                f0.push((lam(9), 9));
                [
                    sum(f0),
                    sum(vec![zk(4), (mu(5), 5), (mu(9), 9)]),
                    sum(vec![zk(5), (nu(6), 6), (nu(7), 7), (nu(9), 9)]),
                    sum(vec![zk(9)]),
                ]
            }
            CertificateId::Deg10Case2 => {
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=7));
                f0.push((lam(9), 9));
                let mut f1 = vec![zk(3)];
                f1.extend(run(mu, 4..=7));
                f1.push((mu(9), 9));
                [sum(f0), sum(f1), sum(vec![zk(4), (nu(5), 5), (nu(7), 7)]), sum(vec![zk(7)])]
            }
            CertificateId::Deg11 => {
                let tail = sum(vec![(pi(1), 8), (pi(2), 9), zk(10)]);
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=7));
                [
                    &sum(f0) + &times(&lam(8), &tail),
                    sum(vec![zk(3), (mu(4), 4), (mu(5), 5), (mu(7), 7)]),
                    &sum(vec![zk(4), (nu(5), 5)]) + &times(&nu(8), &tail),
                    sum(vec![zk(7)]),
                ]
            }
            CertificateId::Exc2_1142 => {
                let top = 4 * e + 3;
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=3 * e + 3));
                f0.push((lam(top), top));
                let mut f1 = vec![zk(2 * e + 1)];
                f1.extend(run(mu, 2 * e + 2..=3 * e + 3));
                f1.push((mu(top), top));
                let mut f2 = vec![zk(2 * e + 2)];
                f2.extend(run(nu, 2 * e + 3..=3 * e + 1));
                f2.push((nu(top), top));
                [sum(f0), sum(f1), sum(f2), sum(vec![zk(top)])]
            }
            CertificateId::Exc2_1143 => {
                let top = 4 * e + 1;
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=3 * e + 1));
                f0.push((lam(top), top));
                let mut f1 = vec![zk(2 * e)];
                f1.extend(run(mu, 2 * e + 1..=3 * e - 1));
                f1.push((mu(top), top));
                let mut f2 = vec![zk(2 * e + 1)];
                f2.extend(run(nu, 2 * e + 2..=3 * e + 1));
                f2.push((nu(top), top));
                [sum(f0), sum(f1), sum(f2), sum(vec![zk(top)])]
            }
            CertificateId::Exc2_2142 => {
                let mut tail = run(pi, 2 * e + 2..=3 * e - 1);
                tail.push(zk(3 * e));
                let tail = sum(tail);
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=2 * e + 1));
                let mut f1 = vec![zk(e)];
                f1.extend(run(mu, e + 1..=2 * e + 1));
                let mut f2 = vec![zk(e + 1)];
                f2.extend(run(nu, e + 2..=2 * e - 1));
                f2.push((nu(2 * e + 1), 2 * e + 1));
                [
                    &sum(f0) + &times(&lam(2 * e + 2), &tail),
                    &sum(f1) + &times(&mu(2 * e + 2), &tail),
                    sum(f2),
                    sum(vec![zk(2 * e + 1)]),
                ]
            }
            CertificateId::Exc2_2143 => {
                let mut tail = run(pi, 2 * e + 2..=3 * e);
                tail.push(zk(3 * e + 1));
                let tail = sum(tail);
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=2 * e + 1));
                let mut f1 = vec![zk(e)];
                f1.extend(run(mu, e + 1..=2 * e - 1));
                f1.push((mu(2 * e + 1), 2 * e + 1));
                let mut f2 = vec![zk(e + 1)];
                f2.extend(run(nu, e + 2..=2 * e + 1));
                [
                    &sum(f0) + &times(&lam(2 * e + 2), &tail),
                    sum(f1),
                    &sum(f2) + &times(&nu(2 * e + 2), &tail),
                    sum(vec![zk(2 * e + 1)]),
                ]
            }
            CertificateId::Exc2_3142 => {
                let mut tail = run(pi, 2 * e + 3..=3 * e + 1);
                tail.push(zk(3 * e + 2));
                let tail = sum(tail);
                let mut f0 = vec![zk(0)];
                f0.extend(run(lam, 1..=2 * e + 2));
                let mut f1 = vec![zk(e)];
                f1.extend(run(mu, e + 1..=2 * e + 2));
                let mut f2 = vec![zk(e + 1)];
                f2.extend(run(nu, e + 2..=2 * e + 1));
                [
                    &sum(f0) + &times(&lam(2 * e + 3), &tail),
                    &sum(f1) + &times(&mu(2 * e + 3), &tail),
                    sum(f2),
                    sum(vec![zk(2 * e + 1)]),
                ]
            }
        }
    }

    /// The published extracted coordinate `z^k·h(z)`.
    pub fn expected(self, e: usize) -> (usize, PPoly) {
        let tail = |base: i64, f: fn(usize) -> ParamPoly, first: usize, len: usize| -> PPoly {
            let mut terms = vec![(c(base), 0)];
            for j in 1..len {
                terms.push((f(first + j).scale(&int(base - j as i64)), j));
            }
            sum(terms)
        };
        match self {
            CertificateId::Deg8 => (5, sum(vec![(c(3), 0), (mu(1).scale(&int(2)), 1)])),
            CertificateId::Deg9 => (6, sum(vec![(c(2), 0), (nu(1), 1)])),
            CertificateId::Deg10Case1 => (9, sum(vec![(c(5), 0), (mu(5).scale(&int(4)), 1)])),
            CertificateId::Deg10Case2 => (8, sum(vec![(c(3), 0), (nu(5).scale(&int(2)), 1)])),
            CertificateId::Deg11 => {
                (7, sum(vec![(c(4), 0), (mu(4).scale(&int(3)), 1), (mu(5).scale(&int(2)), 2)]))
            }
            CertificateId::Exc2_1142 => (4 * e + 4, tail(2 * e as i64 + 1, nu, 2 * e + 2, e)),
            CertificateId::Exc2_1143 => (4 * e + 1, tail(2 * e as i64 + 1, mu, 2 * e, e)),
            CertificateId::Exc2_2142 => (2 * e + 2, tail(e as i64, nu, e + 1, e - 1)),
            CertificateId::Exc2_2143 => (2 * e + 1, tail(e as i64 + 1, mu, e, e)),
            CertificateId::Exc2_3142 => (2 * e + 2, tail(e as i64, nu, e + 1, e)),
        }
    }
}

impl fmt::Display for CertificateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertVerdict {
    Contradiction,
    /// `h(0)` depends on parameters, so the root count is not uniform.
    Inconclusive,
    /// `deg h` leaves room for the required roots.
    NoObstruction,
}

impl CertVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CertVerdict::Contradiction => "CONTRADICTION",
            CertVerdict::Inconclusive => "INCONCLUSIVE",
            CertVerdict::NoObstruction => "NO_OBSTRUCTION",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NonexistenceCertificate {
    pub case: String,
    pub degree: usize,
    pub normal_form: Vec<PPoly>,
    pub target: (usize, usize),
    pub required_nonzero_roots: i64,
    /// Power of `z` removed from all of `F ∧ F′`.
    pub content_power: usize,
    /// `k` in `z^k·h(z)`.
    pub power: usize,
    pub h: PPoly,
    pub verdict: CertVerdict,
}

impl NonexistenceCertificate {
    pub fn extracted(&self) -> PPoly {
        self.h.shift(self.power)
    }

    pub fn render_extracted(&self) -> String {
        let h = self.h.render("z");
        if self.power == 0 {
            h
        } else {
            format!("z^{}*({})", self.power, h)
        }
    }
}

/// Runs the wedge test on a normal form.
pub fn wedge_obstruction(
    case: &str,
    degree: usize,
    normal_form: &[PPoly],
    target: (usize, usize),
    required: i64,
) -> Result<NonexistenceCertificate, ClassifyError> {
    if normal_form.len() != 4 || target.0 >= target.1 || target.1 > 3 {
        return Err(ClassifyError::InvalidNormalForm("need four coordinates and a target i < j <= 3".into()));
    }
    let t2 = wedge_minors(&derivative_rows(normal_form, 2), 2);
    let content_power = t2.iter().filter_map(Poly::valuation).min().ok_or_else(|| {
        ClassifyError::InvalidNormalForm("F and F' are everywhere proportional".into())
    })?;
    let idx = k_subsets(4, 2).iter().position(|s| s[0] == target.0 && s[1] == target.1).expect("valid pair");
    let coord = t2[idx].unshift(content_power);
    let power = coord
        .valuation()
        .ok_or_else(|| ClassifyError::InvalidNormalForm(format!("coordinate {target:?} vanishes identically")))?;
    let h = coord.unshift(power);
    let h0 = h.coeff(0);
    let verdict = if h.deg() >= required {
        CertVerdict::NoObstruction
    } else if h0.constant_value().is_some() {
        CertVerdict::Contradiction
    } else {
        CertVerdict::Inconclusive
    };
    Ok(NonexistenceCertificate {
        case: case.to_string(),
        degree,
        normal_form: normal_form.to_vec(),
        target,
        required_nonzero_roots: required,
        content_power,
        power,
        h,
        verdict,
    })
}

/// Instantiates a registered certificate at family parameter `e`
/// (ignored for fixed-degree cases).
pub fn builtin_certificate(id: CertificateId, e: Option<usize>) -> Result<NonexistenceCertificate, ClassifyError> {
    let e = e.unwrap_or_else(|| id.default_e());
    if let Some(lo) = id.min_e() {
        if e < lo {
            return Err(ClassifyError::BelowValidity { case: id.as_str().into(), e, min: lo });
        }
    }
    let nf = id.normal_form(e);
    wedge_obstruction(id.as_str(), id.degree(e), &nf, id.target(), id.required_roots(e))
}

/// Whether the extracted coordinate equals the published one.
pub fn matches_expected(id: CertificateId, e: usize, cert: &NonexistenceCertificate) -> bool {
    let (k, h) = id.expected(e);
    cert.power == k && cert.h == h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deg8_by_hand() {
        let cert = builtin_certificate(CertificateId::Deg8, None).unwrap();
        assert_eq!(cert.render_extracted(), "z^5*(2*mu1*z + 3)");
        assert_eq!(cert.verdict, CertVerdict::Contradiction);
        assert_eq!(cert.required_nonzero_roots, 2);
    }

    #[test]
    fn family_validity() {
        assert!(matches!(
            builtin_certificate(CertificateId::Exc2_2142, Some(2)),
            Err(ClassifyError::BelowValidity { .. })
        ));
        assert_eq!(CertificateId::parse("deg9").unwrap(), CertificateId::Deg9);
        assert!(CertificateId::parse("deg12").is_err());
        assert_eq!(CertificateId::Exc2_2143.e_for_degree(10), Some(3));
        assert_eq!(CertificateId::Exc2_2143.e_for_degree(11), None);
    }

    #[test]
    fn parameter_dependent_constant_is_inconclusive() {
        let z = |k| Poly::monomial(c(1), k);
        let nf = [z(0), &z(1) + &Poly::monomial(mu(1), 0), z(2), z(3)];
        let cert = wedge_obstruction("toy", 3, &nf, (1, 3), 3).unwrap();
        assert_eq!(cert.verdict, CertVerdict::Inconclusive);
    }
}
