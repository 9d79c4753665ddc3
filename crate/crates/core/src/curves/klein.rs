use crate::poly::{k_subsets, wedge_minors, Field, Poly};

use super::linalg::{self, Matrix};
use super::{CurveError, ProjectiveCurve};

/// Plücker index pairs `01, 02, 03, 12, 13, 23`.
fn pairs() -> Vec<(usize, usize)> {
    k_subsets(4, 2).into_iter().map(|s| (s[0], s[1])).collect()
}

fn pair_index(i: usize, j: usize) -> usize {
    pairs().iter().position(|&p| p == (i, j)).expect("valid pair")
}

/// `ξ₀∧ξ₃ + ξ₁∧ξ₂`.
pub fn standard_beta<F: Field>() -> Matrix<F> {
    let mut b = vec![vec![F::zero(); 4]; 4];
    b[0][3] = F::one();
    b[3][0] = F::one().neg();
    b[1][2] = F::one();
    b[2][1] = F::one().neg();
    b
}

/// A symplectic form `β` on `C⁴` with the data it induces on `Λ²C⁴`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticStructure<F> {
    beta: Matrix<F>,
    pfaffian: F,
    omega: Matrix<F>,
    perp: Matrix<F>,
    pivot: usize,
}

impl<F: Field> SymplecticStructure<F> {
    pub fn new(beta: Matrix<F>) -> Result<Self, CurveError> {
        if beta.len() != 4 || !linalg::is_antisymmetric(&beta) {
            return Err(CurveError::Symplectic("beta must be an antisymmetric 4x4 matrix".into()));
        }
        let b = |i: usize, j: usize| beta[i][j].clone();
        let pfaffian = b(0, 1).mul(&b(2, 3)).sub(&b(0, 2).mul(&b(1, 3))).add(&b(0, 3).mul(&b(1, 2)));
        if pfaffian.is_zero() {
            return Err(CurveError::Symplectic("beta is degenerate".into()));
        }
        let mut omega = vec![vec![F::zero(); 6]; 6];
        for (p, q, sign) in [((0, 1), (2, 3), 1), ((0, 2), (1, 3), -1), ((0, 3), (1, 2), 1)] {
            let (a, c) = (pair_index(p.0, p.1), pair_index(q.0, q.1));
            let v = if sign > 0 { pfaffian.clone() } else { pfaffian.neg() };
            omega[a][c] = v.clone();
            omega[c][a] = v;
        }
        let coeffs: Vec<F> = pairs().iter().map(|&(i, j)| b(i, j)).collect();
        let pivot = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero Pfaffian");
        let inv = coeffs[pivot].inv().expect("nonzero pivot");
        let mut perp = vec![vec![F::zero(); 5]; 6];
        for (col, k) in (0..6).filter(|&k| k != pivot).enumerate() {
            perp[k][col] = F::one();
            perp[pivot][col] = coeffs[k].mul(&inv).neg();
        }
        Ok(SymplecticStructure { beta, pfaffian, omega, perp, pivot })
    }

    pub fn standard() -> Self {
        Self::new(standard_beta()).expect("standard form is symplectic")
    }

    pub fn beta(&self) -> &Matrix<F> {
        &self.beta
    }

    pub fn pfaffian(&self) -> &F {
        &self.pfaffian
    }

    pub fn omega(&self) -> &Matrix<F> {
        &self.omega
    }

    pub fn perp_basis(&self) -> &Matrix<F> {
        &self.perp
    }

    /// Plücker positions kept as coordinates on `β^⊥`.
    pub fn free_rows(&self) -> Vec<usize> {
        (0..6).filter(|&k| k != self.pivot).collect()
    }

    /// `β(F, G)` for polynomial vectors.
    pub fn pair(&self, f: &[Poly<F>], g: &[Poly<F>]) -> Poly<F> {
        let mut acc = Poly::zero();
        for i in 0..4 {
            for j in 0..4 {
                if !self.beta[i][j].is_zero() {
                    acc = &acc + &(&f[i] * &g[j]).scale(&self.beta[i][j]);
                }
            }
        }
        acc
    }

    /// Coordinates on `β^⊥` of a Plücker vector lying in it.
    pub fn restrict(&self, w: &[Poly<F>]) -> Vec<Poly<F>> {
        self.free_rows().into_iter().map(|k| w[k].clone()).collect()
    }

    /// Plücker vector of a point given in `β^⊥` coordinates.
    pub fn lift(&self, g: &[Poly<F>]) -> Vec<Poly<F>> {
        self.perp
            .iter()
            .map(|row| row.iter().zip(g).fold(Poly::zero(), |acc, (c, p)| &acc + &p.scale(c)))
            .collect()
    }

    pub fn quadric(&self) -> QuadricForm<F> {
        let pt = linalg::transpose(&self.perp);
        QuadricForm { m: linalg::mat_mul(&linalg::mat_mul(&pt, &self.omega), &self.perp) }
    }

    /// The form after the change of basis `x ↦ A·x`, so that
    /// `β'(A·u, A·v) = β(u, v)`.
    pub fn transformed(&self, a: &Matrix<F>) -> Result<Self, CurveError> {
        let inv = linalg::inverse(a).ok_or_else(|| CurveError::Symplectic("singular change of basis".into()))?;
        let b = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(&inv), &self.beta), &inv);
        Self::new(b)
    }
}

/// The symmetric form on `β^⊥` cutting out the quadric `Q³ ⊂ P⁴`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricForm<F> {
    m: Matrix<F>,
}

impl<F: Field> QuadricForm<F> {
    pub fn matrix(&self) -> &Matrix<F> {
        &self.m
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.m)
    }

    pub fn eval(&self, g: &[Poly<F>], h: &[Poly<F>]) -> Poly<F> {
        let mut acc = Poly::zero();
        for (a, row) in self.m.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &(&g[a] * &h[b]).scale(c);
                }
            }
        }
        acc
    }

    /// `q(G, G) ≡ 0`.
    pub fn contains(&self, g: &[Poly<F>]) -> bool {
        self.eval(g, g).is_zero()
    }

    /// `q(G′, G′) ≡ 0`.
    pub fn is_null(&self, g: &[Poly<F>]) -> bool {
        let d: Vec<Poly<F>> = g.iter().map(Poly::derivative).collect();
        self.eval(&d, &d).is_zero()
    }
}

fn check_dim<F: Field>(f: &ProjectiveCurve<F>, n: usize) -> Result<(), CurveError> {
    if f.ambient_dim() != n {
        return Err(CurveError::Dimension { expected: n, got: f.ambient_dim() });
    }
    Ok(())
}

/// Whether `β(F, F′)` vanishes identically.
pub fn is_contact<F: Field>(f: &ProjectiveCurve<F>, s: &SymplecticStructure<F>) -> bool {
    if f.ambient_dim() != 3 {
        return false;
    }
    let d: Vec<Poly<F>> = f.coords().iter().map(Poly::derivative).collect();
    s.pair(f.coords(), &d).is_zero()
}

/// The null curve `f₂ ⊂ Q³` of a contact curve.
pub fn klein_dual<F: Field>(
    f: &ProjectiveCurve<F>,
    s: &SymplecticStructure<F>,
) -> Result<(ProjectiveCurve<F>, QuadricForm<F>), CurveError> {
    check_dim(f, 3)?;
    if !is_contact(f, s) {
        return Err(CurveError::NotContact);
    }
    if f.span_dim() < 2 {
        return Err(CurveError::Linear);
    }
    let t2 = f.associated_curve(2)?;
    let g = ProjectiveCurve::normalize(s.restrict(t2.coords()))?;
    let q = s.quadric();
    if !q.contains(g.coords()) || !q.is_null(g.coords()) {
        return Err(CurveError::Internal("dual curve is not a null curve in the quadric".into()));
    }
    if f.is_nondegenerate() && !g.is_nondegenerate() {
        return Err(CurveError::Internal("dual of a non-degenerate curve is degenerate".into()));
    }
    Ok((g, q))
}

/// Recovers the contact curve whose dual is `g`.
pub fn inverse_klein<F: Field>(
    g: &ProjectiveCurve<F>,
    s: &SymplecticStructure<F>,
) -> Result<ProjectiveCurve<F>, CurveError> {
    check_dim(g, 4)?;
    let q = s.quadric();
    if !q.contains(g.coords()) {
        return Err(CurveError::NotInQuadric);
    }
    if !q.is_null(g.coords()) {
        return Err(CurveError::NotNull);
    }
    if g.span_dim() < 2 {
        return Err(CurveError::ImageInLine);
    }
    let p = s.lift(g.coords());
    let dp: Vec<Poly<F>> = p.iter().map(Poly::derivative).collect();
    // Rows of v ↦ v∧P and v ↦ v∧P′ in Λ³ coordinates.
    let mut rows: Vec<Vec<Poly<F>>> = Vec::with_capacity(8);
    for w in [&p, &dp] {
        for t in k_subsets(4, 3) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let mut row = vec![Poly::zero(); 4];
            row[i] = w[pair_index(j, k)].clone();
            row[j] = -&w[pair_index(i, k)];
            row[k] = w[pair_index(i, j)].clone();
            rows.push(row);
        }
    }
    for triple in k_subsets(rows.len(), 3) {
        let sub: Vec<Vec<Poly<F>>> = triple.iter().map(|&r| rows[r].clone()).collect();
        let m = wedge_minors(&sub, 3);
        if m.iter().all(Poly::is_zero) {
            continue;
        }
        let v = vec![m[3].clone(), -&m[2], m[1].clone(), -&m[0]];
        let annihilated = rows
            .iter()
            .all(|r| r.iter().zip(&v).fold(Poly::zero(), |acc, (a, b)| &acc + &(a * b)).is_zero());
        if !annihilated {
            return Err(CurveError::ImageInLine);
        }
        let f = ProjectiveCurve::normalize(v)?;
        let (back, _) = klein_dual(&f, s)?;
        if !back.projectively_equal(g) {
            return Err(CurveError::Internal("round trip through the Klein correspondence failed".into()));
        }
        return Ok(f);
    }
    Err(CurveError::ImageInLine)
}
