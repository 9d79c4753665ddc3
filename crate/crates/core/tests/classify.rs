use nullquad::classify::*;

fn samples(id: CertificateId) -> Vec<usize> {
    match id.min_e() {
        Some(lo) => (lo..lo + 3).collect(),
        None => vec![0],
    }
}

#[test]
fn every_certificate_reproduces_its_fixture() {
    for id in CertificateId::ALL {
        for e in samples(id) {
            let cert = builtin_certificate(id, Some(e)).unwrap();
            assert!(matches_expected(id, e, &cert), "{id} e={e}: got {}", cert.render_extracted());
            assert_eq!(cert.verdict, CertVerdict::Contradiction, "{id} e={e}");
            let (r0, ri) = id.branching(e);
            assert_eq!(cert.required_nonzero_roots, cert.degree as i64 - 3 - r0 as i64 - ri as i64);
            assert!((cert.h.deg() as i64) < cert.required_nonzero_roots);
        }
    }
}

#[test]
fn fixed_degree_renderings() {
    let cases = [
        (CertificateId::Deg8, "z^5*(2*mu1*z + 3)"),
        (CertificateId::Deg9, "z^6*(nu1*z + 2)"),
        (CertificateId::Deg10Case1, "z^9*(4*mu5*z + 5)"),
        (CertificateId::Deg10Case2, "z^8*(2*nu5*z + 3)"),
        (CertificateId::Deg11, "z^7*(2*mu5*z^2 + 3*mu4*z + 4)"),
    ];
    for (id, want) in cases {
        assert_eq!(builtin_certificate(id, None).unwrap().render_extracted(), want);
    }
}

#[test]
fn index_condition_brute_force_is_fully_mapped() {
    let mut holding = 0;
    for d in 5..=60i64 {
        for a in 1..=(d - 3) / 2 {
            for b in 1..=(d - 3) / 2 {
                let cond = index_condition(d, a, b).unwrap();
                if !cond.holds {
                    continue;
                }
                holding += 1;
                let c = classify_pair(d, a, b).unwrap();
                for p in &c.patterns {
                    assert_ne!(p.verdict, PairVerdict::Unmapped, "d={d} a={a} b={b} pattern {}", p.pattern);
                }
                if let PairVerdict::FdCurve { d_prime } = c.verdict {
                    assert_eq!(d % 2, 1);
                    assert_eq!(d, 2 * d_prime - 1);
                }
            }
        }
    }
    assert!(holding > 100);
}

#[test]
fn index_condition_against_direct_set_intersection() {
    for d in 5..=30i64 {
        for a in 1..=(d - 3) / 2 {
            for b in 1..=(d - 3) / 2 {
                let sa = [0, a + 1, a + 2, 2 * a + 3];
                let sb = [d - 2 * b - 3, d - b - 2, d - b - 1, d];
                let common = sa.iter().filter(|x| sb.contains(x)).count();
                assert_eq!(index_condition(d, a, b).unwrap().holds, common >= 2);
            }
        }
    }
}

#[test]
fn contradiction_patterns_solve_their_linear_systems() {
    let c = classify_pair(9, 1, 2).unwrap();
    assert!(c.patterns.iter().any(|p| p.pattern == Pattern::new(2, 1, 4, 2)));
    assert_eq!(c.verdict, PairVerdict::Contradiction { case: CertificateId::Exc2_2142, e: 3, swapped: false });
    let c = classify_pair(9, 2, 1).unwrap();
    assert!(c.patterns.iter().any(|p| p.pattern == Pattern::new(3, 1, 4, 3)));
    assert_eq!(c.verdict, PairVerdict::Contradiction { case: CertificateId::Exc2_2142, e: 3, swapped: true });
    for d in [8i64, 11, 14] {
        let a = (d - 5) / 3;
        let c = classify_pair(d, a, a).unwrap();
        assert!(matches!(c.verdict, PairVerdict::Contradiction { case: CertificateId::Exc2_3142, .. }));
    }
}

fn parts(v: &ConstraintVerdict) -> Vec<usize> {
    v.shape.parts().to_vec()
}

#[test]
fn inequality_filters_hold_on_admissible_shapes() {
    for d in 4..=40usize {
        for v in admissible_shapes(d).unwrap() {
            let p = parts(&v);
            assert_eq!(p.iter().sum::<usize>(), d - 3);
            match v.status {
                ShapeStatus::Excluded => {
                    assert_ne!(v.rule, RuleTag::None);
                    assert!(v.witness.is_some());
                }
                ShapeStatus::Admissible => {
                    assert!(v.passes_inequalities);
                    assert!(p.iter().all(|&x| 2 * x + 3 <= d));
                    if d % 2 == 0 {
                        assert!(p.iter().all(|&x| x + 3 <= d / 2));
                    }
                    for (i, &a) in p.iter().enumerate() {
                        for (j, &b) in p.iter().enumerate() {
                            if i != j && 2 * a + 3 < d {
                                assert!(2 * a + b + 4 <= d);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn two_point_shapes_are_fd_or_excluded() {
    for d in 5..=40usize {
        for v in admissible_shapes(d).unwrap() {
            if v.shape.point_count() == 2 && v.status == ShapeStatus::Admissible {
                assert_eq!(v.realized_by, Some(format!("f_{}", d.div_ceil(2))));
            }
            if v.shape.point_count() == 1 {
                assert_eq!(v.status, ShapeStatus::Excluded);
            }
        }
    }
}
