use crate::poly::Field;

use super::{is_contact, klein_dual, CurveError, Divisor, ProjectiveCurve, SymplecticStructure};

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Ramification data of a contact curve and its dual, with the genus-0
/// Plücker identities evaluated exactly.
#[derive(Clone, Debug)]
pub struct PluckerReport<F> {
    pub degree: usize,
    pub dual_degree: usize,
    /// `R_1(f), R_2(f), R_3(f)`.
    pub curve: Vec<Divisor<F>>,
    /// `R_1(f₂), …, R_4(f₂)`.
    pub dual: Vec<Divisor<F>>,
    pub checks: Vec<IdentityCheck>,
    /// `r₂ = 0` and `r₁ = deg − 3`.
    pub totally_ramified: bool,
}

impl<F> PluckerReport<F> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn violations(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name).collect()
    }
}

pub fn plucker_report<F: Field>(
    f: &ProjectiveCurve<F>,
    s: &SymplecticStructure<F>,
) -> Result<PluckerReport<F>, CurveError> {
    if f.ambient_dim() != 3 {
        return Err(CurveError::Dimension { expected: 3, got: f.ambient_dim() });
    }
    if !is_contact(f, s) {
        return Err(CurveError::NotContact);
    }
    if !f.is_nondegenerate() {
        return Err(if f.span_dim() < 2 { CurveError::Linear } else { CurveError::Degenerate });
    }
    let (g, _) = klein_dual(f, s)?;
    let curve = f.ramification_divisors()?;
    let dual = g.ramification_divisors()?;
    let deg = f.degree() as i64;
    let (r1, r2) = (curve[0].degree(), curve[1].degree());
    let checks = vec![
        IdentityCheck { name: "r2(f) is even", holds: r2 % 2 == 0 },
        IdentityCheck { name: "deg(f) = 3 + r1(f) + r2(f)/2", holds: 2 * deg == 6 + 2 * r1 + r2 },
        IdentityCheck { name: "deg(f2) = 4 + r1(f) + r2(f)", holds: g.degree() as i64 == 4 + r1 + r2 },
        IdentityCheck { name: "R1(f) = R3(f)", holds: curve[0] == curve[2] },
        IdentityCheck { name: "R1(f2) = R2(f)", holds: dual[0] == curve[1] },
        IdentityCheck { name: "R4(f2) = R2(f)", holds: dual[3] == curve[1] },
        IdentityCheck { name: "R2(f2) = R1(f)", holds: dual[1] == curve[0] },
        IdentityCheck { name: "R3(f2) = R1(f)", holds: dual[2] == curve[0] },
    ];
    Ok(PluckerReport {
        degree: f.degree(),
        dual_degree: g.degree(),
        totally_ramified: r2 == 0 && r1 == deg - 3,
        curve,
        dual,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};
    use crate::poly::Poly;

    fn z(k: usize) -> Poly<Rational> {
        Poly::monomial(int(1), k)
    }

    #[test]
    fn f4_is_totally_ramified() {
        let f = ProjectiveCurve::normalize(vec![Poly::constant(rat(-1, 7)), z(3), z(4), z(7)]).unwrap();
        let rep = plucker_report(&f, &SymplecticStructure::standard()).unwrap();
        assert!(rep.all_hold(), "{:?}", rep.violations());
        assert!(rep.totally_ramified);
        assert_eq!((rep.degree, rep.dual_degree), (7, 8));
        assert!(rep.dual[0].is_zero());
    }
}
