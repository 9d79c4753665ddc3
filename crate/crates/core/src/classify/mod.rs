//! Branch-divisor shapes of totally ramified contact curves in `P³`.
//!
//! A shape is the multiset of branch orders `r₁(f, p)`, summing to
//! `d − 3` for a curve of degree `d`.  Shapes are filtered by three
//! inequalities and by the wedge certificates in [`certificates`].

pub mod certificates;
pub mod index;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

pub use certificates::{
    builtin_certificate, matches_expected, wedge_obstruction, CertVerdict, CertificateId, NonexistenceCertificate,
};
pub use index::{classify_pair, index_condition, IndexCondition, PairClassification, PairVerdict, Pattern, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("unknown certificate case '{0}'")]
    UnknownCase(String),
    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),
    #[error("{case} is only valid for e >= {min}, got e = {e}")]
    BelowValidity { case: String, e: usize, min: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Branch orders sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorShape {
    parts: Vec<usize>,
    degree: usize,
}

impl DivisorShape {
    pub fn new(mut parts: Vec<usize>, degree: usize) -> Result<DivisorShape, ClassifyError> {
        if parts.contains(&0) {
            return Err(ClassifyError::Precondition("branch orders must be positive".into()));
        }
        if degree < 3 || parts.iter().sum::<usize>() != degree - 3 {
            return Err(ClassifyError::Precondition(format!("parts {parts:?} do not sum to d - 3 = {}", degree as i64 - 3)));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DivisorShape { parts, degree })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn point_count(&self) -> usize {
        self.parts.len()
    }

    /// Whether two distinct points carry the orders `x` and `y`.
    pub fn contains_pair(&self, x: usize, y: usize) -> bool {
        match self.parts.iter().position(|&p| p == x) {
            None => false,
            Some(i) => self.parts.iter().enumerate().any(|(j, &p)| j != i && p == y),
        }
    }
}

impl fmt::Display for DivisorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Partitions of `n` in decreasing order of parts, lexicographically
/// decreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleTag {
    LemmaCont,
    /// The sharper bound for even degree.
    CorCor,
    LemmaAbel,
    Certificate(CertificateId),
    None,
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleTag::LemmaCont => f.write_str("LEMMA_CONT"),
            RuleTag::CorCor => f.write_str("COR_COR"),
            RuleTag::LemmaAbel => f.write_str("LEMMA_ABEL"),
            RuleTag::Certificate(id) => write!(f, "CERTIFICATE({id})"),
            RuleTag::None => f.write_str("NONE"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeStatus {
    Admissible,
    Excluded,
}

impl ShapeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ShapeStatus::Admissible => "ADMISSIBLE",
            ShapeStatus::Excluded => "EXCLUDED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintVerdict {
    pub shape: DivisorShape,
    pub status: ShapeStatus,
    pub rule: RuleTag,
    /// The inequality instance or certificate that fails.
    pub witness: Option<String>,
    /// Whether the shape survives the three inequality filters,
    /// regardless of certificates.
    pub passes_inequalities: bool,
    /// `f_{d′}` when the shape is the two-point shape of that curve.
    pub realized_by: Option<String>,
}

impl ConstraintVerdict {
    /// Admissible with no known realization.
    pub fn is_open(&self) -> bool {
        self.status == ShapeStatus::Admissible && self.realized_by.is_none()
    }
}

fn cont_witness(shape: &DivisorShape) -> Option<String> {
    let d = shape.degree;
    let bound = (d - 3) / 2;
    shape.parts.iter().find(|&&p| p > bound).map(|p| format!("r1 = {p} > (d-3)/2 = {}", (d as f64 - 3.0) / 2.0))
}

fn cor_witness(shape: &DivisorShape) -> Option<String> {
    let d = shape.degree;
    if !d.is_multiple_of(2) {
        return None;
    }
    let bound = d as i64 / 2 - 3;
    shape.parts.iter().find(|&&p| p as i64 > bound).map(|p| format!("r1 = {p} > d/2 - 3 = {bound} (d even)"))
}

fn abel_witness(shape: &DivisorShape) -> Option<String> {
    let d = shape.degree as i64;
    let parts = &shape.parts;
    for (i, &a) in parts.iter().enumerate() {
        let a = a as i64;
        if 2 * a + 3 >= d {
            continue;
        }
        for (j, &b) in parts.iter().enumerate() {
            if i != j && 2 * a + b as i64 > d - 4 {
                return Some(format!("2*{a} + {b} = {} > d - 4 = {}", 2 * a + b as i64, d - 4));
            }
        }
    }
    None
}

/// Shapes handled by the fixed-degree certificates.
fn declared_shapes(id: CertificateId) -> &'static [&'static [usize]] {
    match id {
        CertificateId::Deg8 => &[&[2, 1, 1], &[1, 1, 1, 1]],
        CertificateId::Deg9 => &[&[1, 1, 1, 1, 1]],
        CertificateId::Deg10Case1 => &[&[3, 1, 1, 1]],
        CertificateId::Deg10Case2 => &[&[2, 1, 1, 1, 1]],
        CertificateId::Deg11 => &[&[2, 2, 2, 1], &[2, 2, 1, 1, 1]],
        _ => &[],
    }
}

type CertCache = Mutex<HashMap<(CertificateId, usize), Option<CertVerdict>>>;

/// Verdict of a registered certificate, computed once per process.
fn certificate_verdict(id: CertificateId, e: usize) -> Option<CertVerdict> {
    static CACHE: OnceLock<CertCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&(id, e)) {
        return *v;
    }
    let v = builtin_certificate(id, Some(e)).ok().map(|c| c.verdict);
    cache.lock().expect("cache lock").insert((id, e), v);
    v
}

fn fixed_certificate(shape: &DivisorShape) -> Option<(CertificateId, String)> {
    CertificateId::ALL.into_iter().filter(|id| !id.is_family()).find_map(|id| {
        let applies = id.degree(0) == shape.degree && declared_shapes(id).contains(&shape.parts.as_slice());
        (applies && certificate_verdict(id, 0) == Some(CertVerdict::Contradiction)).then(|| {
            let (r0, ri) = id.branching(0);
            (id, format!("{id}: branch orders {r0} at 0 and {ri} at infinity"))
        })
    })
}

fn family_certificate(shape: &DivisorShape) -> Option<(CertificateId, String)> {
    CertificateId::ALL.into_iter().filter(|id| id.is_family()).find_map(|id| {
        let e = id.e_for_degree(shape.degree)?;
        let (r0, ri) = id.branching(e);
        let applies = shape.contains_pair(r0, ri) && certificate_verdict(id, e) == Some(CertVerdict::Contradiction);
        applies.then(|| (id, format!("{id} at e = {e}: branch orders {r0} and {ri}")))
    })
}

fn fd_realization(shape: &DivisorShape) -> Option<String> {
    let d = shape.degree;
    let p = shape.parts();
    (d % 2 == 1 && p.len() == 2 && p[0] == p[1] && 2 * p[0] + 3 == d).then(|| format!("f_{}", d.div_ceil(2)))
}

/// Classifies one shape.  The single-part bound runs first, then the
/// even-degree bound and the fixed-degree certificates.  The pairwise
/// inequality and the two-point certificate families come last.
pub fn classify_shape(shape: &DivisorShape) -> ConstraintVerdict {
    let cont = cont_witness(shape);
    let cor = cor_witness(shape);
    let abel = abel_witness(shape);
    let passes_inequalities = cont.is_none() && cor.is_none() && abel.is_none();
    let excluded = |rule, witness| ConstraintVerdict {
        shape: shape.clone(),
        status: ShapeStatus::Excluded,
        rule,
        witness: Some(witness),
        passes_inequalities,
        realized_by: None,
    };
    if let Some(w) = cont {
        return excluded(RuleTag::LemmaCont, w);
    }
    if let Some(w) = cor {
        return excluded(RuleTag::CorCor, w);
    }
    if let Some((id, w)) = fixed_certificate(shape) {
        return excluded(RuleTag::Certificate(id), w);
    }
    if let Some(w) = abel {
        return excluded(RuleTag::LemmaAbel, w);
    }
    if let Some((id, w)) = family_certificate(shape) {
        return excluded(RuleTag::Certificate(id), w);
    }
    ConstraintVerdict {
        shape: shape.clone(),
        status: ShapeStatus::Admissible,
        rule: RuleTag::None,
        witness: None,
        passes_inequalities,
        realized_by: fd_realization(shape),
    }
}

/// All partitions of `d − 3` with their verdicts.
pub fn admissible_shapes(d: usize) -> Result<Vec<ConstraintVerdict>, ClassifyError> {
    if d < 4 {
        return Err(ClassifyError::Precondition(format!("degree {d} must be at least 4")));
    }
    Ok(partitions(d - 3)
        .into_iter()
        .map(|p| classify_shape(&DivisorShape { parts: p, degree: d }))
        .collect())
}

/// What the shape enumeration says about unbranched null curves of a
/// given degree in the quadric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NullDegreeStatus {
    /// Every branch shape of the contact curve is excluded.
    Nonexistent,
    /// The only admissible shapes are realized by known curves.
    Realized(Vec<String>),
    /// Some admissible shapes have no certificate and no realization.
    Open(Vec<DivisorShape>),
}

/// An unbranched null curve of degree `D` corresponds to a totally
/// ramified contact curve of degree `D − 1`.
pub fn null_degree_status(null_degree: usize) -> Result<NullDegreeStatus, ClassifyError> {
    let d = null_degree
        .checked_sub(1)
        .filter(|&d| d >= 4)
        .ok_or_else(|| ClassifyError::Precondition(format!("null degree {null_degree} must be at least 5")))?;
    let survivors: Vec<ConstraintVerdict> =
        admissible_shapes(d)?.into_iter().filter(|v| v.status == ShapeStatus::Admissible).collect();
    let open: Vec<DivisorShape> = survivors.iter().filter(|v| v.is_open()).map(|v| v.shape.clone()).collect();
    Ok(if survivors.is_empty() {
        NullDegreeStatus::Nonexistent
    } else if open.is_empty() {
        NullDegreeStatus::Realized(survivors.into_iter().filter_map(|v| v.realized_by).collect())
    } else {
        NullDegreeStatus::Open(open)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdicts(d: usize) -> Vec<(Vec<usize>, String, ShapeStatus)> {
        admissible_shapes(d).unwrap().into_iter().map(|v| (v.shape.parts.clone(), v.rule.to_string(), v.status)).collect()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn degree_seven() {
        let v = verdicts(7);
        assert!(v.contains(&(vec![2, 2], "NONE".into(), ShapeStatus::Admissible)));
        assert!(v.contains(&(vec![2, 1, 1], "CERTIFICATE(DEG8)".into(), ShapeStatus::Excluded)));
        assert!(v.contains(&(vec![1, 1, 1, 1], "CERTIFICATE(DEG8)".into(), ShapeStatus::Excluded)));
        let f4 = admissible_shapes(7).unwrap().into_iter().find(|v| v.shape.parts == [2, 2]).unwrap();
        assert_eq!(f4.realized_by.as_deref(), Some("f_4"));
    }

    #[test]
    fn degree_nine_tags() {
        let v = verdicts(9);
        let tag = |p: &[usize]| v.iter().find(|x| x.0 == p).unwrap().1.clone();
        assert_eq!(tag(&[3, 1, 1, 1]), "CERTIFICATE(DEG10_CASE1)");
        assert_eq!(tag(&[2, 1, 1, 1, 1]), "CERTIFICATE(DEG10_CASE2)");
        assert_eq!(tag(&[3, 2, 1]), "LEMMA_ABEL");
        assert_eq!(tag(&[1, 1, 1, 1, 1, 1]), "NONE");
    }

    #[test]
    fn null_degrees() {
        assert_eq!(null_degree_status(9).unwrap(), NullDegreeStatus::Nonexistent);
        assert_eq!(null_degree_status(8).unwrap(), NullDegreeStatus::Realized(vec!["f_4".into()]));
        assert!(matches!(null_degree_status(10).unwrap(), NullDegreeStatus::Open(_)));
    }

    #[test]
    fn shape_validation() {
        assert!(DivisorShape::new(vec![2, 2], 7).is_ok());
        assert!(DivisorShape::new(vec![2, 1], 7).is_err());
        assert!(DivisorShape::new(vec![4, 0], 7).is_err());
        assert!(admissible_shapes(3).is_err());
    }
}
