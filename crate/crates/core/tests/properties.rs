mod common;

use common::*;
use nullquad::classify::{builtin_certificate, wedge_obstruction, CertificateId};
use nullquad::curves::Divisor;
use nullquad::exactnum::{int, rat, Rational};
use nullquad::poly::{derivative_rows, k_subsets, wedge_minors, ParamPoly, Poly, Ring};
use proptest::prelude::*;

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(vec![], true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // Inserting at `pos` moves the new element past `len − pos` others.
            let flips = (p.len() - pos) % 2 == 1;
            out.push((q, even != flips));
        }
    }
    out
}

fn leibniz(m: &[Vec<Poly<Rational>>]) -> Poly<Rational> {
    let k = m.len();
    permutations(k).into_iter().fold(Poly::zero(), |acc, (p, even)| {
        let term = (0..k).fold(Poly::one(), |t, r| &t * &m[r][p[r]]);
        if even {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

fn coords() -> impl Strategy<Value = Vec<Poly<Rational>>> {
    proptest::collection::vec(proptest::collection::vec(-4i64..=4, 1..=6), 4)
        .prop_map(|v| v.iter().map(|c| qpoly(c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hermite_round_trip_and_interval_residues(p in planted_form()) {
        if let Err(e) = hermite_check(&p) {
            prop_assert!(false, "{}", e);
        }
    }
}

proptest! {
    #[test]
    fn wedge_minors_match_leibniz(f in coords(), k in 1usize..=4) {
        let rows = derivative_rows(&f, k);
        let minors = wedge_minors(&rows, k);
        for (s, m) in k_subsets(4, k).iter().zip(&minors) {
            let sub: Vec<Vec<Poly<Rational>>> = rows.iter().map(|r| s.iter().map(|&c| r[c].clone()).collect()).collect();
            prop_assert_eq!(m, &leibniz(&sub));
        }
    }

    #[test]
    fn divisor_is_canonical(
        roots in proptest::collection::btree_set(-5i64..=5, 1..=4),
        mults in proptest::collection::vec(1i64..=3, 4),
        inf in 0i64..=3,
        seed in any::<u64>(),
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let lin = |t: i64| qpoly(&[-t, 1]);
        let places: Vec<(Poly<Rational>, i64)> = roots.iter().zip(&mults).map(|(&t, &m)| (lin(t), m)).collect();
        let d = Divisor::from_places(&places, inf);
        let mut shuffled = places.clone();
        shuffled.rotate_left((seed % places.len() as u64) as usize);
        prop_assert_eq!(&Divisor::from_places(&shuffled, inf), &d);
        // Merging places of equal multiplicity into one product is invisible.
        let mut merged: Vec<(Poly<Rational>, i64)> = Vec::new();
        for (p, m) in &places {
            match merged.iter_mut().find(|(_, k)| k == m) {
                Some(slot) => slot.0 = &slot.0 * p,
                None => merged.push((p.clone(), *m)),
            }
        }
        prop_assert_eq!(&Divisor::from_places(&merged, inf), &d);
        prop_assert_eq!(d.degree(), mults.iter().take(roots.len()).sum::<i64>() + inf);
        for (&t, &m) in roots.iter().zip(&mults) {
            prop_assert_eq!(d.multiplicity_at(&int(t)), m);
        }
        prop_assert_eq!(d.add(&d), d.scaled(2));
        let e = Divisor::from_places(&[(lin(7), 1)], 0);
        prop_assert_eq!(d.add(&e), e.add(&d));
        prop_assert_eq!(d.add(&e).degree(), d.degree() + 1);
    }
}

const FIXED: [CertificateId; 5] = [
    CertificateId::Deg8,
    CertificateId::Deg9,
    CertificateId::Deg10Case1,
    CertificateId::Deg10Case2,
    CertificateId::Deg11,
];

fn pc(q: &Rational) -> ParamPoly {
    ParamPoly::constant(q.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificates_are_invariant_under_scaling_and_reparametrization(
        idx in 0usize..5,
        num in prop_oneof![-3i64..=-1, 1i64..=3],
        den in 1i64..=3,
    ) {
        let id = FIXED[idx];
        let c = rat(num, den);
        let base = builtin_certificate(id, None).unwrap();
        let nf = id.normal_form(0);
        let run = |nf: &[Poly<ParamPoly>]| {
            wedge_obstruction(id.as_str(), base.degree, nf, id.target(), base.required_nonzero_roots).unwrap()
        };

        let scaled: Vec<Poly<ParamPoly>> = nf.iter().map(|p| p.scale(&pc(&c))).collect();
        let s = run(&scaled);
        prop_assert_eq!(s.verdict, base.verdict);
        prop_assert_eq!(s.power, base.power);
        prop_assert_eq!(&s.h, &base.h.scale(&pc(&(&c * &c))));

        let cz = Poly::monomial(pc(&c), 1);
        let moved: Vec<Poly<ParamPoly>> = nf.iter().map(|p| p.compose(&cz)).collect();
        let m = run(&moved);
        prop_assert_eq!(m.verdict, base.verdict);
        prop_assert_eq!(m.power, base.power);
        prop_assert_eq!(m.content_power, base.content_power);
        let factor = (0..1 + base.content_power + base.power).fold(ParamPoly::one(), |acc, _| Ring::mul(&acc, &pc(&c)));
        prop_assert_eq!(&m.h, &base.h.compose(&cz).scale(&factor));
    }
}

#[test]
fn interval_oracle_sees_planted_residues() {
    let f = |c: i64, t: i64| nullquad::poly::RationalFunction::new(qpoly(&[c]), qpoly(&[-t, 1])).unwrap();
    let form = f(1, 1).add(&f(-2, -3));
    let res = interval_residues(&form);
    assert_eq!(res.iter().map(|(t, _)| *t).collect::<Vec<_>>(), vec![-3, 1]);
    assert!(res[0].1.contains(&int(-2)) && res[1].1.contains(&int(1)));
    assert!(!res[0].1.contains_zero());
    let planted = PlantedForm { form, simple_poles: vec![(1, 1), (-3, -2)] };
    assert!(hermite_check(&planted).is_ok());
}
