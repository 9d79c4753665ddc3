//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use nullquad::curves::linalg::{self, Matrix};
use nullquad::curves::{ProjectiveCurve, SymplecticStructure};
use nullquad::exactnum::{int, Rational};
use nullquad::poly::Poly;
use nullquad::weier::fd_family;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub fn fd(d: usize) -> ProjectiveCurve<Rational> {
    fd_family::<Rational>(d).unwrap().0
}

pub fn standard() -> SymplecticStructure<Rational> {
    SymplecticStructure::standard()
}

pub fn qpoly(c: &[i64]) -> Poly<Rational> {
    Poly::new(c.iter().map(|&x| int(x)).collect())
}

/// Draws one value from a strategy with a deterministic runner.
pub fn draw<S: Strategy>(runner: &mut TestRunner, s: S) -> S::Value {
    s.new_tree(runner).expect("strategy").current()
}

/// `x ↦ x + c·β(u, x)·u`, which preserves `β`.
pub fn transvection(beta: &Matrix<Rational>, u: &[i64], c: i64) -> Matrix<Rational> {
    let u: Vec<Rational> = u.iter().map(|&x| int(x)).collect();
    let row: Vec<Rational> = (0..4).map(|j| (0..4).map(|i| &u[i] * &beta[i][j]).sum()).collect();
    (0..4)
        .map(|i| (0..4).map(|j| int((i == j) as i64) + int(c) * &u[i] * &row[j]).collect())
        .collect()
}

/// A random product of three transvections for the standard form.
pub fn random_symplectic(runner: &mut TestRunner) -> Matrix<Rational> {
    let beta = standard().beta().clone();
    let mut a: Matrix<Rational> = (0..4).map(|i| (0..4).map(|j| int((i == j) as i64)).collect()).collect();
    for _ in 0..3 {
        let u = draw(runner, proptest::collection::vec(-2i64..=2, 4));
        let c = draw(runner, prop_oneof![-2i64..=-1, 1i64..=2]);
        a = linalg::mat_mul(&transvection(&beta, &u, c), &a);
    }
    a
}

/// A random invertible integer Möbius map `(a, b, c, d)`.
pub fn random_mobius(runner: &mut TestRunner) -> [Rational; 4] {
    loop {
        let v = draw(runner, proptest::collection::vec(-3i64..=3, 4));
        if v[0] * v[3] - v[1] * v[2] != 0 {
            return [int(v[0]), int(v[1]), int(v[2]), int(v[3])];
        }
    }
}

/// Vanishing orders `n_0 < n_1 < … < n_n` of the osculating flag at `x`
/// (or at infinity), read off the Taylor matrix by rank jumps.
pub fn taylor_orders(f: &ProjectiveCurve<Rational>, x: Option<&Rational>) -> Vec<usize> {
    let d = f.degree();
    let local: Vec<Poly<Rational>> = match x {
        Some(x) => {
            let shift = Poly::new(vec![x.clone(), int(1)]);
            f.coords().iter().map(|p| p.compose(&shift)).collect()
        }
        None => f.coords().iter().map(|p| p.reverse(d)).collect(),
    };
    let n = local.len();
    let mut rows: Matrix<Rational> = Vec::new();
    let mut orders = Vec::new();
    for k in 0..=d {
        rows.push(local.iter().map(|p| p.coeff(k)).collect());
        if linalg::rank(&rows) > orders.len() {
            orders.push(k);
        }
        if orders.len() == n {
            break;
        }
    }
    orders
}

/// `r_i(f, p) = n_i − n_{i−1} − 1` for `i = 1..n`.
pub fn taylor_ramification(f: &ProjectiveCurve<Rational>, x: Option<&Rational>) -> Vec<i64> {
    let n = taylor_orders(f, x);
    n.windows(2).map(|w| w[1] as i64 - w[0] as i64 - 1).collect()
}

use nullquad::exactnum::{rat, Interval};
use nullquad::poly::{hermite_reduce, remainder_sum, RationalFunction};

pub type QFn = RationalFunction<Rational>;

/// A rational 1-form `R′ + q + Σ c_j/(z − s_j)` with every pole at a
/// distinct integer in `[-4, 4]`.  The `c_j` are all zero about half the
/// time.
#[derive(Clone, Debug)]
pub struct PlantedForm {
    pub form: QFn,
    pub simple_poles: Vec<(i64, i64)>,
}

pub fn planted_form() -> impl Strategy<Value = PlantedForm> {
    (
        Just((-4i64..=4).collect::<Vec<_>>()).prop_shuffle(),
        1usize..=3,
        0usize..=3,
        proptest::collection::vec(1u32..=3, 3),
        proptest::collection::vec(-4i64..=4, 4),
        proptest::collection::vec(-3i64..=3, 3),
        proptest::collection::vec(-3i64..=3, 3),
        any::<bool>(),
    )
        .prop_map(|(places, nt, ns, exps, pnum, q, cs, residue_free)| {
            let lin = |t: i64| qpoly(&[-t, 1]);
            let den = (0..nt).fold(Poly::one(), |acc, i| &acc * &lin(places[i]).pow(exps[i]));
            let r = RationalFunction::new(qpoly(&pnum), den).expect("nonzero");
            let mut form = r.derivative().add(&RationalFunction::from_poly(qpoly(&q)));
            let mut simple_poles = Vec::new();
            for j in 0..ns {
                let s = places[nt + j];
                let c = if residue_free { 0 } else { cs[j] };
                simple_poles.push((s, c));
                form = form.add(&RationalFunction::new(qpoly(&[c]), lin(s)).expect("nonzero"));
            }
            PlantedForm { form, simple_poles }
        })
}

fn eval_interval(p: &Poly<Rational>, x: &Interval) -> Interval {
    p.coeffs().iter().rev().fold(Interval::point(int(0)), |acc, a| acc.mul(x).add(&Interval::point(a.clone())))
}

/// Residues at the simple poles of a form, each enclosed in an interval of
/// width about `2^-128` around a pole isolated by bisection.
pub fn interval_residues(form: &QFn) -> Vec<(i64, Interval)> {
    let den = form.den();
    let dden = den.derivative();
    let sqf = den.exact_div(&den.gcd(&dden)).expect("gcd divides");
    let mut out = Vec::new();
    for t in -4i64..=4 {
        let (mut lo, mut hi) = (&int(t) - &rat(1, 3), &int(t) + &rat(2, 7));
        let (slo, shi) = (sqf.eval(&lo), sqf.eval(&hi));
        if slo == int(0) || shi == int(0) || (slo > int(0)) == (shi > int(0)) {
            continue;
        }
        let lo_positive = slo > int(0);
        for _ in 0..128 {
            let mid = (&lo + &hi) / int(2);
            if (sqf.eval(&mid) > int(0)) == lo_positive {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let iv = Interval::new(lo, hi);
        let dv = eval_interval(&dden, &iv);
        if dv.contains_zero() {
            // Not a simple pole.
            continue;
        }
        let res = eval_interval(form.num(), &iv).mul(&dv.recip().expect("nonzero"));
        out.push((t, res));
    }
    out
}

/// Hermite reconstruction plus the interval residue comparison; returns
/// a description of the first disagreement.
pub fn hermite_check(p: &PlantedForm) -> Result<(), String> {
    let (rational, rem) = hermite_reduce(&p.form);
    if rational.derivative().add(&remainder_sum(&rem)) != p.form {
        return Err(format!("reconstruction failed for {}", p.form));
    }
    if rem.iter().any(|(_, d)| !d.is_squarefree()) {
        return Err("remainder denominator not squarefree".into());
    }
    let residues = interval_residues(&p.form);
    let numerically_zero = residues.iter().all(|(_, r)| r.contains_zero());
    if rem.is_empty() != numerically_zero {
        return Err(format!("remainder {rem:?} vs interval residues {residues:?}"));
    }
    for (t, r) in &residues {
        let c = p.simple_poles.iter().find(|(s, _)| s == t).map_or(0, |(_, c)| *c);
        if !r.contains(&int(c)) || r.width() > rat(1, 1 << 40) {
            return Err(format!("residue at {t}: {r:?}, planted {c}"));
        }
    }
    Ok(())
}

/// Coordinates `(z−t)^{e_i}·(1 + higher terms)` mixed by an invertible
/// integer matrix: ramified at `t` by construction, arbitrary elsewhere.
pub fn planted_curve() -> impl Strategy<Value = ProjectiveCurve<Rational>> {
    let exps = (1usize..=4, 1usize..=2, 1usize..=2).prop_map(|(a, b, c)| [0, a, a + b, a + b + c]);
    (exps, -2i64..=2, proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 4), proptest::collection::vec(-2i64..=2, 16))
        .prop_filter_map("degenerate", |(e, t, tails, mix)| {
            if e[3] > 6 {
                return None;
            }
            let lin = Poly::new(vec![int(-t), int(1)]);
            let coords: Vec<Poly<Rational>> = (0..4)
                .map(|i| {
                    let mut c = vec![int(1)];
                    c.extend(tails[i][..6 - e[i]].iter().map(|&x| int(x)));
                    &lin.pow(e[i] as u32) * &Poly::new(c).compose(&lin)
                })
                .collect();
            let m: Vec<Vec<Rational>> = mix.chunks(4).map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            nullquad::curves::linalg::inverse(&m)?;
            let f = ProjectiveCurve::normalize(coords).ok()?.linear_change(&m).ok()?;
            f.is_nondegenerate().then_some(f)
        })
}
