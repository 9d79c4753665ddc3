//! Rational curves `P¹ → Pⁿ`, their osculating flags and the Klein
//! correspondence between contact curves in `P³` and null curves in the
//! quadric `Q³ ⊂ P⁴`.
//!
//! A curve is a primitive vector of polynomials `F = (F₀, …, Fₙ)`.  Its
//! degree `d` is the largest coordinate degree, and `w^d·F(1/w)` is the
//! chart used at infinity.  The `k`-th associated curve is spanned by
//! `F ∧ F′ ∧ … ∧ F^(k−1)`, whose raw Plücker vector is written `T_k`.

mod divisor;
mod klein;
pub mod linalg;
mod plucker;

use std::fmt;

use crate::poly::{derivative_rows, wedge_chain, Field, Poly};

pub use divisor::Divisor;
pub use klein::{inverse_klein, is_contact, klein_dual, standard_beta, QuadricForm, SymplecticStructure};
pub use plucker::{plucker_report, IdentityCheck, PluckerReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("all coordinates are zero")]
    AllZero,
    #[error("constant map: the coordinates are proportional")]
    ConstantMap,
    #[error("level {level} is outside 1..={max}")]
    BadLevel { level: usize, max: usize },
    #[error("degenerate derivative flag: the wedge of the first {0} derivative rows vanishes identically")]
    DegenerateFlag(usize),
    #[error("expected a curve in P^{expected}, got P^{got}")]
    Dimension { expected: usize, got: usize },
    #[error("curve is not contact for the given symplectic form")]
    NotContact,
    #[error("curve is a line; its dual is not defined")]
    Linear,
    #[error("curve is contained in a hyperplane")]
    Degenerate,
    #[error("curve does not lie in the quadric")]
    NotInQuadric,
    #[error("curve is not null")]
    NotNull,
    #[error("image contained in a line")]
    ImageInLine,
    #[error("symplectic structure: {0}")]
    Symplectic(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

/// A primitive polynomial parametrization of a rational curve.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveCurve<F> {
    coords: Vec<Poly<F>>,
    degree: usize,
}

/// Monic gcd of a family of polynomials, skipping zeros.
pub fn content<F: Field>(polys: &[Poly<F>]) -> Poly<F> {
    let mut nonzero: Vec<&Poly<F>> = polys.iter().filter(|p| !p.is_zero()).collect();
    nonzero.sort_by_key(|p| p.deg());
    let mut g = Poly::zero();
    for p in nonzero {
        g = g.gcd(p);
        if g.is_one() {
            break;
        }
    }
    g
}

impl<F: Field> ProjectiveCurve<F> {
    /// Divides out the content and records the degree.
    pub fn normalize(raw: Vec<Poly<F>>) -> Result<Self, CurveError> {
        let g = content(&raw);
        if g.is_zero() {
            return Err(CurveError::AllZero);
        }
        let coords: Vec<Poly<F>> = raw.iter().map(|p| p.exact_div(&g).expect("content divides")).collect();
        let degree = coords.iter().map(Poly::deg).max().unwrap_or(0).max(0) as usize;
        if degree == 0 {
            return Err(CurveError::ConstantMap);
        }
        Ok(ProjectiveCurve { coords, degree })
    }

    pub fn coords(&self) -> &[Poly<F>] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// The `(degree+1) × (n+1)` matrix of coefficients, one row per power.
    pub fn coefficient_matrix(&self) -> linalg::Matrix<F> {
        (0..=self.degree).map(|k| self.coords.iter().map(|c| c.coeff(k)).collect()).collect()
    }

    /// Whether the image spans the ambient space.
    pub fn is_nondegenerate(&self) -> bool {
        linalg::rank(&self.coefficient_matrix()) == self.coords.len()
    }

    /// Dimension of the smallest linear space containing the image.
    pub fn span_dim(&self) -> usize {
        linalg::rank(&self.coefficient_matrix()) - 1
    }

    /// Raw wedges `T_1, …, T_m` of the derivative rows.
    pub fn wedges(&self, m: usize) -> Vec<Vec<Poly<F>>> {
        wedge_chain(&derivative_rows(&self.coords, m))
    }

    /// The `k`-th associated curve.
    pub fn associated_curve(&self, k: usize) -> Result<ProjectiveCurve<F>, CurveError> {
        let n = self.ambient_dim();
        if k == 0 || k > n {
            return Err(CurveError::BadLevel { level: k, max: n });
        }
        let t = self.wedges(k).pop().expect("k ≥ 1");
        if t.iter().all(Poly::is_zero) {
            return Err(CurveError::DegenerateFlag(k));
        }
        ProjectiveCurve::normalize(t)
    }

    /// `R_i(f)` for one level.
    pub fn ramification_divisor(&self, i: usize) -> Result<Divisor<F>, CurveError> {
        let n = self.ambient_dim();
        if i == 0 || i > n {
            return Err(CurveError::BadLevel { level: i, max: n });
        }
        let orders = self.wedge_orders(i + 1)?;
        Ok(ramification_from_orders(&orders, i))
    }

    /// `R_1(f), …, R_n(f)` from a single wedge chain.
    pub fn ramification_divisors(&self) -> Result<Vec<Divisor<F>>, CurveError> {
        let n = self.ambient_dim();
        let orders = self.wedge_orders(n + 1)?;
        Ok((1..=n).map(|i| ramification_from_orders(&orders, i)).collect())
    }

    /// Content and order at infinity of `T_0, …, T_m`.
    pub fn wedge_orders(&self, m: usize) -> Result<Vec<WedgeOrder<F>>, CurveError> {
        let d = self.degree as i64;
        let mut out = vec![WedgeOrder { content: Poly::one(), raw_degree: 0, at_infinity: 0 }];
        for (idx, t) in self.wedges(m).into_iter().enumerate() {
            let k = idx as i64 + 1;
            let g = content(&t);
            if g.is_zero() {
                return Err(CurveError::DegenerateFlag(k as usize));
            }
            let raw_degree = t.iter().map(Poly::deg).max().unwrap_or(0);
            out.push(WedgeOrder { content: g, raw_degree, at_infinity: k * d - k * (k - 1) - raw_degree });
        }
        Ok(out)
    }

    /// `F ↦ A·F` for a constant `(n+1) × (n+1)` matrix.
    pub fn linear_change(&self, a: &linalg::Matrix<F>) -> Result<ProjectiveCurve<F>, CurveError> {
        let n = self.coords.len();
        if a.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(CurveError::Dimension { expected: self.ambient_dim(), got: a.len().saturating_sub(1) });
        }
        let coords = a
            .iter()
            .map(|row| row.iter().zip(&self.coords).fold(Poly::zero(), |acc, (c, p)| &acc + &p.scale(c)))
            .collect();
        ProjectiveCurve::normalize(coords)
    }

    /// Precomposition with `z ↦ (az + b)/(cz + d)`, homogenized with the
    /// curve degree so the result is again polynomial.
    pub fn mobius(&self, a: &F, b: &F, c: &F, d: &F) -> ProjectiveCurve<F> {
        assert!(!a.mul(d).sub(&b.mul(c)).is_zero(), "singular Möbius map");
        let num = Poly::new(vec![b.clone(), a.clone()]);
        let den = Poly::new(vec![d.clone(), c.clone()]);
        let deg = self.degree;
        let num_pows: Vec<Poly<F>> = (0..=deg).map(|k| num.pow(k as u32)).collect();
        let den_pows: Vec<Poly<F>> = (0..=deg).map(|k| den.pow(k as u32)).collect();
        let coords = self
            .coords
            .iter()
            .map(|p| {
                p.coeffs().iter().enumerate().fold(Poly::zero(), |acc, (k, ck)| {
                    &acc + &(&num_pows[k] * &den_pows[deg - k]).scale(ck)
                })
            })
            .collect();
        ProjectiveCurve::normalize(coords).expect("Möbius image of a curve is a curve")
    }

    /// Equality as maps to projective space: every `2×2` minor of the
    /// stacked coordinate vectors vanishes.
    pub fn projectively_equal(&self, other: &ProjectiveCurve<F>) -> bool {
        projectively_equal(&self.coords, &other.coords)
    }

    pub fn render(&self, var: &str) -> Vec<String> {
        self.coords.iter().map(|p| p.render(var)).collect()
    }
}

pub fn projectively_equal<F: Field>(a: &[Poly<F>], b: &[Poly<F>]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (&a[i] * &b[j]) == (&a[j] * &b[i])))
        && a.iter().any(|p| !p.is_zero()) == b.iter().any(|p| !p.is_zero())
}

/// Order data of one wedge `T_k`.
#[derive(Clone, Debug)]
pub struct WedgeOrder<F> {
    /// Monic gcd of the Plücker coordinates of `T_k`.
    pub content: Poly<F>,
    /// Largest coordinate degree of `T_k`.
    pub raw_degree: i64,
    /// Order of `T_k` at infinity on the degree-`d` model.
    pub at_infinity: i64,
}

fn ramification_from_orders<F: Field>(orders: &[WedgeOrder<F>], i: usize) -> Divisor<F> {
    let mut places = Vec::new();
    for (k, w) in [(i + 1, 1), (i, -2), (i - 1, 1)] {
        if orders[k].content.is_constant() {
            continue;
        }
        for (p, e) in orders[k].content.squarefree() {
            places.push((p, w * e as i64));
        }
    }
    let inf = orders[i + 1].at_infinity - 2 * orders[i].at_infinity + orders[i - 1].at_infinity;
    let div = Divisor::from_places(&places, inf);
    debug_assert!(div.is_effective(), "ramification divisor must be effective");
    div
}

impl<F: Field> fmt::Display for ProjectiveCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render("z").join(", "))
    }
}
