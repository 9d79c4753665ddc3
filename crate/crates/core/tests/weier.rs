use nullquad::exactnum::{to_decimal, Num};
use nullquad::poly::Poly;
use nullquad::weier::*;

#[test]
fn kusner_family_is_a_planar_end_surface() {
    for n in 2..=5usize {
        let k = kusner_family(n).unwrap();
        assert!(k.ends_distinct, "n = {n}");
        let forms = forms_from_data(&k.data);
        assert!(verify_null(&forms));
        let report = residues_vanish(&forms);
        assert!(report.all_vanish(), "n = {n}: {:?}", report.offending_places());
        let f = integrate_null(&forms).unwrap();
        let closed = kusner_closed_form(&k).unwrap();
        for (a, b) in f.components().iter().zip(closed.components()) {
            assert_eq!(a.derivative(), b.derivative(), "n = {n}");
            assert!(a.sub(b).num().is_constant() && a.sub(b).den().is_constant(), "n = {n}");
        }
        assert_eq!(f.poles().support_size(), 2 * n as i64);
        assert!(f.poles().finite().iter().all(|(_, m)| *m == 1));
        let ends = classify_ends(&f);
        assert!(ends.iter().all(|e| e.embedded && e.planar && e.log_growth.is_zero()));
        match end_product_test(&closed) {
            ProductVerdict::Polynomial { degree, .. } => assert_eq!(degree, 2 * n as i64),
            other => panic!("n = {n}: {other:?}"),
        }
        assert!(end_product_test(&f).is_polynomial());
        for c in [complete_null_curve(&f).unwrap(), complete_null_curve(&closed).unwrap()] {
            assert!(c.in_quadric && c.unbranched() && c.all_simple);
            assert_eq!(c.degree(), 2 * n, "n = {n}");
        }
        let cr = curvature_and_jorge_meeks(&k.data, 0, 2 * n as i64);
        assert_eq!(cr.gauss_degree, 2 * n - 1);
        assert!(cr.jorge_meeks_consistent);
    }
}

#[test]
fn kusner_end_polynomial_shape() {
    let k = kusner_family(3).unwrap();
    assert_eq!(to_decimal(&k.s, 15).unwrap(), "2.23606797749979");
    assert_eq!(k.end_polynomial.coeff(0), Num::from_int(-1));
    assert_eq!(k.end_polynomial.coeff(3), k.r);
    assert_eq!(k.end_polynomial, &(&Poly::monomial(Num::one(), 6) + &Poly::monomial(k.r.clone(), 3)) - &Poly::one());
}

#[test]
fn peng_pipeline() {
    let r = refute_peng(4, 2).unwrap();
    assert_eq!(r.order_mismatch.ord_omega_at_zero, 2);
    assert_eq!(r.order_mismatch.required, 4);
    assert!(r.order_mismatch.mismatch);
    let full = r.full.as_ref().unwrap();
    let by_name = |n: &str| full.params.iter().find(|p| p.name == n).unwrap().clone();
    assert!(by_name("c").matches && by_name("lambda").matches);
    assert_eq!(by_name("a").decimal, "-0.502000420331516");
    assert_eq!(by_name("b").decimal, "41.1579116001044");
    assert!(full.residues_vanish);
    assert!(full.constants_differ);
    assert!(full.higher_coefficients_agree);
    assert!(full.constants_match_printed_expressions);
    assert!(full.constants.iter().all(|c| c.matches), "{:?}", full.constants);
    // The exact pipeline finds F polynomial: the published argument does
    // not go through.
    assert!(full.components_polynomial.iter().all(|b| *b));
    assert_eq!(r.verdict, PengVerdict::Verified);
    assert_eq!((full.completed_degree, full.completed_unbranched, full.completed_in_quadric), (9, true, true));
}

/// The completed Peng curve pulled back through the Klein correspondence:
/// an explicit totally ramified contact curve of degree 8 whose branch
/// divisor is five simple points.
#[test]
fn peng_null_curve_pulls_back_to_a_degree_eight_contact_curve() {
    use nullquad::curves::{inverse_klein, plucker_report, SymplecticStructure};

    let w = peng_family(4, 2, &peng_default_params().unwrap()).unwrap();
    let f = integrate_null(&forms_from_data(&w)).unwrap();
    let c = complete_null_curve(&f).unwrap();
    assert!(c.in_quadric && c.unbranched());

    // X0·X4 − X1² − X2² − X3² becomes half the quadric of the standard form
    // under Y1 = X1 + i·X3, Y3 = X1 − i·X3.
    let t = c.curve.coords()[1].coeff(0).tower().complexified();
    let i = t.imaginary_unit().unwrap();
    let (o, z) = (Num::one(), Num::zero());
    let a = vec![
        vec![o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), o.clone(), z.clone(), i.clone(), z.clone()],
        vec![z.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
        vec![z.clone(), o.clone(), z.clone(), -i, z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), o],
    ];
    let g = c.curve.linear_change(&a).unwrap();
    let s = SymplecticStructure::<Num>::standard();
    assert!(s.quadric().contains(g.coords()));

    let contact = inverse_klein(&g, &s).unwrap();
    assert_eq!(contact.degree(), 8);
    let r = plucker_report(&contact, &s).unwrap();
    assert!(r.all_hold() && r.totally_ramified);
    let r1 = &r.curve[0];
    assert_eq!(r1.degree(), 5);
    assert_eq!(r1.infinity(), 1);
    assert!(r1.finite().iter().all(|(_, m)| *m == 1));
    assert_eq!(r1.support_size(), 5);
}
