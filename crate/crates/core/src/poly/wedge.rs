use std::collections::HashMap;

use super::{Poly, Ring};

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Rows `F, F', …, F^(k−1)` of a coordinate vector.
pub fn derivative_rows<R: Ring>(coords: &[Poly<R>], k: usize) -> Vec<Vec<Poly<R>>> {
    let mut rows = Vec::with_capacity(k);
    let mut cur = coords.to_vec();
    for _ in 0..k {
        let next = cur.iter().map(Poly::derivative).collect();
        rows.push(std::mem::replace(&mut cur, next));
    }
    rows
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &c| m | 1 << c)
}

/// Minors of every leading block of rows: entry `r−1` of the result holds
/// the `r×r` minors of the first `r` rows, indexed by lexicographic column
/// subsets.  Each level is obtained from the previous one by Laplace
/// expansion along the newest row, so no division is performed.
pub fn wedge_chain<R: Ring>(rows: &[Vec<Poly<R>>]) -> Vec<Vec<Poly<R>>> {
    let ncols = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    assert!(ncols <= 64 && rows.len() <= ncols, "unsupported matrix shape");
    let mut prev: HashMap<u64, Poly<R>> = HashMap::new();
    prev.insert(0, Poly::one());
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut cur = HashMap::new();
        let mut level = Vec::new();
        for s in k_subsets(ncols, r + 1) {
            let mut acc = Poly::zero();
            for (t, &col) in s.iter().enumerate() {
                let entry = &row[col];
                if entry.is_zero() {
                    continue;
                }
                let rest = mask(&s) & !(1u64 << col);
                let minor = &prev[&rest];
                if minor.is_zero() {
                    continue;
                }
                let term = entry * minor;
                acc = if (r + t) % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            cur.insert(mask(&s), acc.clone());
            level.push(acc);
        }
        out.push(level);
        prev = cur;
    }
    out
}

/// The `k×k` minors of the first `k` rows in lexicographic column order,
/// i.e. the Plücker coordinates of `row₀ ∧ … ∧ row_{k−1}`.
pub fn wedge_minors<R: Ring>(rows: &[Vec<Poly<R>>], k: usize) -> Vec<Poly<R>> {
    assert!(k >= 1 && k <= rows.len());
    wedge_chain(&rows[..k]).pop().expect("at least one level")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn z(k: usize) -> Poly<Rational> {
        Poly::monomial(int(1), k)
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(k_subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn rational_normal_curve_minors() {
        let f = vec![z(0), z(1), z(2), z(3)];
        let t2 = wedge_minors(&derivative_rows(&f, 2), 2);
        assert_eq!(t2[0], Poly::one());
        let full = wedge_minors(&derivative_rows(&f, 4), 4);
        assert_eq!(full, vec![Poly::constant(int(12))]);
    }

    #[test]
    fn f3_first_minor() {
        let f = vec![Poly::constant(rat(-1, 5)), z(2), z(3), z(5)];
        let t2 = wedge_minors(&derivative_rows(&f, 2), 2);
        assert_eq!(t2[0], Poly::monomial(rat(-2, 5), 1));
    }
}
