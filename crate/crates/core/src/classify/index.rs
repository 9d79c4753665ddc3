//! The index-coincidence condition for a totally ramified contact curve
//! with branch orders `a` at `0` and `b` at `∞`.
//!
//! The vanishing orders at `0` are `A = {0, a+1, a+2, 2a+3}` and the
//! degrees forced by `∞` are `B = {d−2b−3, d−b−2, d−b−1, d}`.  A pattern
//! `(i k)(j l)` records the two coincidences `A_i = B_k` and `A_j = B_l`
//! (1-based, `i < j`).

use std::fmt;

use super::certificates::CertificateId;
use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})({} {})", self.first.0, self.first.1, self.second.0, self.second.1)
    }
}

impl Pattern {
    pub fn new(i: usize, k: usize, j: usize, l: usize) -> Pattern {
        Pattern { first: (i, k), second: (j, l) }
    }
}

fn sets(d: i64, a: i64, b: i64) -> ([i64; 4], [i64; 4]) {
    ([0, a + 1, a + 2, 2 * a + 3], [d - 2 * b - 3, d - b - 2, d - b - 1, d])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCondition {
    pub holds: bool,
    /// Coincidences `(i, k)` with `A_i = B_k`.
    pub coincidences: Vec<(usize, usize)>,
    pub patterns: Vec<Pattern>,
}

pub fn index_condition(d: i64, a: i64, b: i64) -> Result<IndexCondition, ClassifyError> {
    if a < 1 || b < 1 || 2 * a + 3 > d || 2 * b + 3 > d {
        return Err(ClassifyError::Precondition(format!("need a, b >= 1 and 2a+3, 2b+3 <= d (d={d}, a={a}, b={b})")));
    }
    let (sa, sb) = sets(d, a, b);
    let mut coincidences = Vec::new();
    for (i, x) in sa.iter().enumerate() {
        for (k, y) in sb.iter().enumerate() {
            if x == y {
                coincidences.push((i + 1, k + 1));
            }
        }
    }
    let mut patterns = Vec::new();
    for (n, &p) in coincidences.iter().enumerate() {
        for &q in &coincidences[n + 1..] {
            if p.0 < q.0 {
                patterns.push(Pattern { first: p, second: q });
            }
        }
    }
    Ok(IndexCondition { holds: coincidences.len() >= 2, coincidences, patterns })
}

/// Inequality whose failure excludes a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `r₁ ≤ (d−3)/2` at every point.
    Cont,
    /// `2r₁(p) + r₁(q) ≤ d − 4` when `2r₁(p) + 3 < d`.
    Abel,
    /// A branch order would have to be `≤ 0`.
    Positivity,
}

impl Violation {
    pub fn as_str(self) -> &'static str {
        match self {
            Violation::Cont => "LEMMA_CONT",
            Violation::Abel => "LEMMA_ABEL",
            Violation::Positivity => "POSITIVITY",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    /// The curve is `f_{d′}` with `d = 2d′ − 1`.
    FdCurve { d_prime: i64 },
    /// Excluded by a certificate, possibly with the roles of `0` and `∞`
    /// exchanged.
    Contradiction { case: CertificateId, e: usize, swapped: bool },
    ConstraintViolation(Violation),
    Unmapped,
}

impl PairVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            PairVerdict::FdCurve { .. } => "FD_CURVE",
            PairVerdict::Contradiction { .. } => "CONTRADICTION",
            PairVerdict::ConstraintViolation(_) => "CONSTRAINT_VIOLATION",
            PairVerdict::Unmapped => "UNMAPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternVerdict {
    pub pattern: Pattern,
    /// The two linear equations, rendered.
    pub equations: [String; 2],
    pub verdict: PairVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClassification {
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub patterns: Vec<PatternVerdict>,
    pub verdict: PairVerdict,
}

const A_EXPR: [&str; 4] = ["0", "a+1", "a+2", "2a+3"];
const B_EXPR: [&str; 4] = ["d-2b-3", "d-b-2", "d-b-1", "d"];

fn cont_violated(d: i64, a: i64, b: i64) -> bool {
    2 * a > d - 3 || 2 * b > d - 3
}

fn abel_violated(d: i64, a: i64, b: i64) -> bool {
    (2 * a + 3 < d && 2 * a + b > d - 4) || (2 * b + 3 < d && 2 * b + a > d - 4)
}

/// Certificate family for a contradiction pattern, with the family
/// parameter solved from `d` and whether `a` and `b` trade places.
fn contradiction_case(p: Pattern, d: i64) -> Option<(CertificateId, i64, bool)> {
    use CertificateId::*;
    let key = (p.first, p.second);
    let (id, num, den, swapped) = match key {
        ((1, 1), (4, 2)) => (Exc2_1142, d - 3, 4, false),
        ((1, 1), (4, 3)) => (Exc2_1143, d - 1, 4, false),
        ((2, 1), (4, 2)) => (Exc2_2142, d, 3, false),
        ((2, 1), (4, 3)) => (Exc2_2143, d - 1, 3, false),
        ((3, 1), (4, 2)) => (Exc2_3142, d - 2, 3, false),
        ((2, 1), (4, 4)) => (Exc2_1143, d - 1, 4, true),
        ((3, 1), (4, 3)) => (Exc2_2142, d, 3, true),
        ((3, 1), (4, 4)) => (Exc2_1142, d - 3, 4, true),
        _ => return None,
    };
    (num % den == 0).then_some((id, num / den, swapped))
}

fn classify_pattern(p: Pattern, d: i64, a: i64, b: i64) -> PairVerdict {
    let fd_patterns = [
        Pattern::new(1, 1, 2, 2),
        Pattern::new(1, 1, 3, 3),
        Pattern::new(1, 1, 4, 4),
        Pattern::new(2, 2, 3, 3),
        Pattern::new(2, 2, 4, 4),
        Pattern::new(3, 3, 4, 4),
    ];
    let abel_patterns = [Pattern::new(1, 1, 3, 2), Pattern::new(3, 2, 4, 4)];
    let positivity_patterns =
        [Pattern::new(2, 1, 3, 2), Pattern::new(2, 1, 3, 3), Pattern::new(2, 2, 4, 3), Pattern::new(3, 2, 4, 3)];
    let cont_pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

    if fd_patterns.contains(&p) {
        if a == b && 2 * a + 3 == d {
            return PairVerdict::FdCurve { d_prime: (d + 1) / 2 };
        }
        return if cont_violated(d, a, b) { PairVerdict::ConstraintViolation(Violation::Cont) } else { PairVerdict::Unmapped };
    }
    if let Some((id, e, swapped)) = contradiction_case(p, d) {
        let (r0, ri) = id.branching(e as usize);
        let (x, y) = if swapped { (a, b) } else { (b, a) };
        let valid = id.min_e().is_some_and(|lo| e >= lo as i64) && x == r0 as i64 && y == ri as i64;
        return if valid {
            PairVerdict::Contradiction { case: id, e: e as usize, swapped }
        } else {
            PairVerdict::Unmapped
        };
    }
    let checked = |v: Violation, holds: bool| if holds { PairVerdict::ConstraintViolation(v) } else { PairVerdict::Unmapped };
    if cont_pairs.contains(&p.first) || cont_pairs.contains(&p.second) {
        return checked(Violation::Cont, cont_violated(d, a, b));
    }
    if abel_patterns.contains(&p) {
        return checked(Violation::Abel, abel_violated(d, a, b));
    }
    if positivity_patterns.contains(&p) {
        return checked(Violation::Positivity, a < 1 || b < 1);
    }
    PairVerdict::Unmapped
}

/// Maps every coincidence pattern of `(d, a, b)` to its case outcome.
pub fn classify_pair(d: i64, a: i64, b: i64) -> Result<PairClassification, ClassifyError> {
    let cond = index_condition(d, a, b)?;
    if !cond.holds {
        return Err(ClassifyError::Precondition(format!("index condition fails for d={d}, a={a}, b={b}")));
    }
    let patterns: Vec<PatternVerdict> = cond
        .patterns
        .iter()
        .map(|&p| PatternVerdict {
            pattern: p,
            equations: [
                format!("{} = {}", A_EXPR[p.first.0 - 1], B_EXPR[p.first.1 - 1]),
                format!("{} = {}", A_EXPR[p.second.0 - 1], B_EXPR[p.second.1 - 1]),
            ],
            verdict: classify_pattern(p, d, a, b),
        })
        .collect();
    let rank = |v: &PairVerdict| match v {
        PairVerdict::Unmapped => 0,
        PairVerdict::ConstraintViolation(_) => 1,
        PairVerdict::Contradiction { .. } => 2,
        PairVerdict::FdCurve { .. } => 3,
    };
    let verdict = patterns.iter().map(|p| &p.verdict).min_by_key(|v| rank(v)).cloned().unwrap_or(PairVerdict::Unmapped);
    Ok(PairClassification { d, a, b, patterns, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_case_matches_everything() {
        let c = index_condition(7, 2, 2).unwrap();
        assert_eq!(c.coincidences, vec![(1, 1), (2, 2), (3, 3), (4, 4)]);
        assert_eq!(c.patterns.len(), 6);
        assert_eq!(classify_pair(7, 2, 2).unwrap().verdict, PairVerdict::FdCurve { d_prime: 4 });
    }

    #[test]
    fn degree_eight_single_branching() {
        let c = index_condition(8, 1, 1).unwrap();
        assert_eq!(c.patterns, vec![Pattern::new(3, 1, 4, 2)]);
        let v = classify_pair(8, 1, 1).unwrap();
        assert_eq!(v.verdict, PairVerdict::Contradiction { case: CertificateId::Exc2_3142, e: 2, swapped: false });
        assert_eq!(v.patterns[0].equations, ["a+2 = d-2b-3".to_string(), "2a+3 = d-b-2".to_string()]);
    }

    #[test]
    fn precondition() {
        assert!(index_condition(7, 0, 1).is_err());
        assert!(index_condition(7, 3, 1).is_err());
    }
}
