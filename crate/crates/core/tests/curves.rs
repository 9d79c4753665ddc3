mod common;

use common::*;
use nullquad::curves::{inverse_klein, is_contact, klein_dual, plucker_report, Divisor};
use nullquad::exactnum::{int, rat, Rational};
use nullquad::poly::Poly;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

fn z(k: usize) -> Poly<Rational> {
    Poly::monomial(int(1), k)
}

#[test]
fn fd_degrees_and_branching() {
    let s = standard();
    for d in 2..=8usize {
        let f = fd(d);
        assert_eq!(f.degree(), 2 * d - 1);
        assert!(is_contact(&f, &s));
        let r1 = f.ramification_divisor(1).unwrap();
        let k = d as i64 - 2;
        let x = Poly::new(vec![int(0), int(1)]);
        let expected = if k == 0 { Divisor::zero() } else { Divisor::from_places(&[(x, k)], k) };
        assert_eq!(r1, expected, "d = {d}");
        let (g, _) = klein_dual(&f, &s).unwrap();
        assert_eq!(g.degree(), 2 * d);
        assert!(g.ramification_divisor(1).unwrap().is_zero());
    }
}

#[test]
fn fd_second_associated_curve_closed_form() {
    let s = standard();
    for d in 2..=6usize {
        let (g, _) = klein_dual(&fd(d), &s).unwrap();
        let di = d as i64;
        let expected = [
            Poly::constant(rat(-(di - 1), 2 * di - 1)),
            Poly::monomial(rat(-di, 2 * di - 1), 1),
            z(d),
            Poly::monomial(int(di), 2 * d - 1),
            Poly::monomial(int(di - 1), 2 * d),
        ];
        // Fix the projective scale on the constant coordinate, then compare
        // coefficient by coefficient.
        let t = &expected[0].coeff(0) / &g.coords()[0].coeff(0);
        let scaled: Vec<Poly<Rational>> = g.coords().iter().map(|p| p.scale(&t)).collect();
        assert_eq!(scaled, expected.to_vec(), "d = {d}");
    }
}

#[test]
fn plucker_identities_survive_symplectic_and_mobius_changes() {
    let s = standard();
    let mut runner = TestRunner::deterministic();
    for d in 2..=6usize {
        let base = plucker_report(&fd(d), &s).unwrap();
        assert!(base.all_hold(), "f_{d}: {:?}", base.violations());
        assert!(base.totally_ramified);
        for _ in 0..20 {
            let a = random_symplectic(&mut runner);
            let [ma, mb, mc, md] = random_mobius(&mut runner);
            let f = fd(d).linear_change(&a).unwrap().mobius(&ma, &mb, &mc, &md);
            let r = plucker_report(&f, &s).unwrap();
            assert!(r.all_hold(), "f_{d}: {:?}", r.violations());
            assert_eq!((r.degree, r.dual_degree), (base.degree, base.dual_degree));
            let degs = |v: &[Divisor<Rational>]| v.iter().map(Divisor::degree).collect::<Vec<_>>();
            assert_eq!(degs(&r.curve), degs(&base.curve));
            assert_eq!(degs(&r.dual), degs(&base.dual));
        }
    }
}

#[test]
fn klein_round_trip_on_transformed_corpus() {
    let s = standard();
    let mut runner = TestRunner::deterministic();
    for d in 2..=6usize {
        for k in 0..4 {
            let mut f = fd(d);
            if k > 0 {
                let a = random_symplectic(&mut runner);
                let [ma, mb, mc, md] = random_mobius(&mut runner);
                f = f.linear_change(&a).unwrap().mobius(&ma, &mb, &mc, &md);
            }
            let (g, _) = klein_dual(&f, &s).unwrap();
            assert!(inverse_klein(&g, &s).unwrap().projectively_equal(&f), "d = {d}, sample {k}");
        }
    }
}

#[test]
fn round_trip_under_a_general_change_of_form() {
    let s = standard();
    let a: Vec<Vec<Rational>> = [[1, 2, 0, 1], [0, 1, 3, 0], [1, 0, 1, 0], [0, 0, 2, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    let t = s.transformed(&a).unwrap();
    let f = fd(4).linear_change(&a).unwrap();
    assert!(is_contact(&f, &t));
    assert!(!is_contact(&f, &s));
    let (g, q) = klein_dual(&f, &t).unwrap();
    assert!(q.contains(g.coords()));
    assert!(inverse_klein(&g, &t).unwrap().projectively_equal(&f));
    assert!(plucker_report(&f, &t).unwrap().all_hold());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn wedge_content_ramification_matches_taylor_oracle(f in planted_curve(), extra in -5i64..=5) {
        let divs = f.ramification_divisors().unwrap();
        let mut places: Vec<Option<Rational>> = (-3..=3).map(|x| Some(int(x))).collect();
        places.push(Some(rat(extra, 7)));
        places.push(None);
        for x in &places {
            let oracle = taylor_ramification(&f, x.as_ref());
            let wedge: Vec<i64> = divs
                .iter()
                .map(|d| match x {
                    Some(x) => d.multiplicity_at(x),
                    None => d.infinity(),
                })
                .collect();
            prop_assert_eq!(&wedge, &oracle, "place {:?} curve {}", x, f);
        }
    }
}
