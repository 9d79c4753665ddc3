use anyhow::{anyhow, bail, Result};
use nullquad::classify::{
    admissible_shapes, builtin_certificate, classify_pair, index_condition, matches_expected, null_degree_status,
    CertVerdict, CertificateId, NullDegreeStatus, PairVerdict, ShapeStatus,
};
use nullquad::curves::{inverse_klein, klein_dual, plucker_report, Divisor, SymplecticStructure};
use nullquad::exactnum::{to_decimal, Num};
use nullquad::weier::{
    classify_ends, complete_null_curve, curvature_and_jorge_meeks, end_product_test, fd_family, forms_from_data,
    integrate_null, kusner_family, peng_default_params, peng_family, refute_peng, residues_vanish, PengVerdict,
    ProductVerdict,
};
use serde_json::{json, Value};

use crate::input::{emit_curve, emit_weier, parse_curve, parse_weier, require_dim};
use crate::report::{Report, Verdict};

fn divisor_json(d: &Divisor<Num>) -> Value {
    let places: Vec<Value> =
        d.finite().iter().map(|(p, m)| json!({"place": p.to_string(), "multiplicity": m})).collect();
    json!({"places": places, "infinity": d.infinity(), "degree": d.degree(), "display": d.to_string()})
}

/// Exact string plus a certified 15-digit decimal when the value is real.
fn number(x: &Num) -> Value {
    let decimal = if x.is_real() { to_decimal(x, 15).ok() } else { None };
    json!({"exact": x.to_string(), "decimal": decimal})
}

pub fn ramify(path: &str) -> Result<Report> {
    let parsed = parse_curve(path)?;
    let f = &parsed.curve;
    let divs = f.ramification_divisors()?;
    let payload = json!({
        "notices": parsed.notices,
        "degree": f.degree(),
        "ambient_dim": f.ambient_dim(),
        "nondegenerate": f.is_nondegenerate(),
        "divisors": divs.iter().map(divisor_json).collect::<Vec<_>>(),
    });
    Ok(Report::new("ramify", Verdict::Verified, payload))
}

fn structure(parsed: &crate::input::ParsedCurve) -> SymplecticStructure<Num> {
    parsed.beta.clone().unwrap_or_else(SymplecticStructure::standard)
}

pub fn klein(path: &str) -> Result<Report> {
    let parsed = parse_curve(path)?;
    require_dim(&parsed.curve, 3)?;
    let s = structure(&parsed);
    let (g, q) = klein_dual(&parsed.curve, &s)?;
    let payload = json!({
        "notices": parsed.notices,
        "degree": parsed.curve.degree(),
        "dual_degree": g.degree(),
        "dual": g.render("z"),
        "quadric": q.matrix().iter().map(|r| r.iter().map(Num::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "data": emit_curve(&g, parsed.beta.as_ref())?,
    });
    Ok(Report::new("klein", Verdict::Verified, payload))
}

pub fn inverse_klein_cmd(path: &str) -> Result<Report> {
    let parsed = parse_curve(path)?;
    require_dim(&parsed.curve, 4)?;
    let s = structure(&parsed);
    let f = inverse_klein(&parsed.curve, &s)?;
    let payload = json!({
        "notices": parsed.notices,
        "degree": f.degree(),
        "contact_curve": f.render("z"),
        "round_trip": true,
        "data": emit_curve(&f, parsed.beta.as_ref())?,
    });
    Ok(Report::new("inverse-klein", Verdict::Verified, payload))
}

pub fn plucker(path: &str) -> Result<Report> {
    let parsed = parse_curve(path)?;
    require_dim(&parsed.curve, 3)?;
    let s = structure(&parsed);
    let r = plucker_report(&parsed.curve, &s)?;
    let checks: Vec<Value> = r.checks.iter().map(|c| json!({"identity": c.name, "holds": c.holds})).collect();
    let payload = json!({
        "notices": parsed.notices,
        "degree": r.degree,
        "dual_degree": r.dual_degree,
        "totally_ramified": r.totally_ramified,
        "checks": checks,
        "curve_divisors": r.curve.iter().map(divisor_json).collect::<Vec<_>>(),
        "dual_divisors": r.dual.iter().map(divisor_json).collect::<Vec<_>>(),
    });
    let verdict = if r.all_hold() { Verdict::Verified } else { Verdict::Refuted };
    Ok(Report::new("plucker", verdict, payload))
}

pub fn verify_ends(path: &str) -> Result<Report> {
    let w = parse_weier(path)?;
    let forms = forms_from_data(&w);
    let residues = residues_vanish(&forms);
    if !residues.all_vanish() {
        let payload = json!({"residues_vanish": false, "offending_places": residues.offending_places()});
        return Ok(Report::new("verify-ends", Verdict::Refuted, payload));
    }
    let f = integrate_null(&forms)?;
    let ends = classify_ends(&f);
    let end_count = f.poles().support_size();
    let product = end_product_test(&f);
    let product_json = match &product {
        ProductVerdict::Polynomial { degree, product } => json!({
            "polynomial": true,
            "degree": degree,
            "components": product.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        }),
        ProductVerdict::NotPolynomial { component, surviving_denominator, .. } => json!({
            "polynomial": false,
            "component": component,
            "surviving_denominator": surviving_denominator.to_string(),
        }),
    };
    let curvature = curvature_and_jorge_meeks(&w, 0, end_count);
    let all_planar = ends.iter().all(|e| e.embedded && e.planar);
    let payload = json!({
        "residues_vanish": true,
        "null_curve": f.components().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "end_count": end_count,
        "ends": ends.iter().map(|e| json!({
            "place": e.place.to_string(),
            "pole_order": e.multiplicity,
            "embedded": e.embedded,
            "planar": e.planar,
            "leading": e.leading.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "product_test": product_json,
        "gauss_degree": curvature.gauss_degree,
        "total_curvature": format!("-4*pi*{}", curvature.total_curvature_quarter),
        "jorge_meeks_genus0": curvature.jorge_meeks_consistent,
    });
    let ok = all_planar && product.is_polynomial();
    Ok(Report::new("verify-ends", if ok { Verdict::Verified } else { Verdict::Refuted }, payload))
}

pub fn complete(path: &str) -> Result<Report> {
    let w = parse_weier(path)?;
    let f = integrate_null(&forms_from_data(&w))?;
    let c = complete_null_curve(&f)?;
    let payload = json!({
        "degree": c.degree(),
        "in_quadric": c.in_quadric,
        "unbranched": c.unbranched(),
        "pole_count": c.pole_count,
        "all_poles_simple": c.all_simple,
        "ramification": divisor_json(&c.ramification),
        "curve": c.curve.render("z"),
        "data": emit_curve(&c.curve, None)?,
    });
    let ok = c.in_quadric && c.unbranched() && c.all_simple;
    Ok(Report::new("complete", if ok { Verdict::Verified } else { Verdict::Refuted }, payload))
}

pub fn enumerate(d: usize) -> Result<Report> {
    let verdicts = admissible_shapes(d)?;
    let shapes: Vec<Value> = verdicts
        .iter()
        .map(|v| {
            json!({
                "shape": v.shape.parts(),
                "status": v.status.as_str(),
                "rule": v.rule.to_string(),
                "witness": v.witness,
                "passes_inequalities": v.passes_inequalities,
                "realized_by": v.realized_by,
            })
        })
        .collect();
    let pick = |f: &dyn Fn(&nullquad::classify::ConstraintVerdict) -> bool| -> Vec<Vec<usize>> {
        verdicts.iter().filter(|v| f(v)).map(|v| v.shape.parts().to_vec()).collect()
    };
    let before = pick(&|v| v.passes_inequalities);
    let admissible = pick(&|v| v.status == ShapeStatus::Admissible);
    let open = pick(&|v| v.is_open());
    let null_status = match null_degree_status(d + 1)? {
        NullDegreeStatus::Nonexistent => json!({"degree": d + 1, "status": "NONEXISTENT"}),
        NullDegreeStatus::Realized(names) => json!({"degree": d + 1, "status": "REDUCES_TO", "curves": names}),
        NullDegreeStatus::Open(_) => json!({"degree": d + 1, "status": "OPEN"}),
    };
    let verdict = if admissible.is_empty() {
        Verdict::Contradiction
    } else if open.is_empty() {
        Verdict::Verified
    } else {
        Verdict::Open
    };
    let payload = json!({
        "degree": d,
        "shapes": shapes,
        "passing_inequalities": before,
        "admissible": admissible,
        "open": open,
        "unbranched_null_curve": null_status,
    });
    Ok(Report::new("enumerate", verdict, payload))
}

pub fn classify_pair_cmd(d: i64, a: i64, b: i64) -> Result<Report> {
    let cond = index_condition(d, a, b)?;
    let c = classify_pair(d, a, b)?;
    let verdict_json = |v: &PairVerdict| match v {
        PairVerdict::FdCurve { d_prime } => json!({"label": v.label(), "curve": format!("f_{d_prime}")}),
        PairVerdict::Contradiction { case, e, swapped } => {
            json!({"label": v.label(), "case": case.as_str(), "e": e, "swapped": swapped})
        }
        PairVerdict::ConstraintViolation(x) => json!({"label": v.label(), "violated": x.as_str()}),
        PairVerdict::Unmapped => json!({"label": v.label()}),
    };
    let patterns: Vec<Value> = c
        .patterns
        .iter()
        .map(|p| json!({"pattern": p.pattern.to_string(), "equations": p.equations, "verdict": verdict_json(&p.verdict)}))
        .collect();
    let payload = json!({
        "d": d, "a": a, "b": b,
        "holds": cond.holds,
        "coincidences": cond.coincidences.iter().map(|(i, k)| format!("({i} {k})")).collect::<Vec<_>>(),
        "patterns": patterns,
        "case_verdict": verdict_json(&c.verdict),
    });
    let verdict = match c.verdict {
        PairVerdict::FdCurve { .. } => Verdict::Verified,
        PairVerdict::Contradiction { .. } | PairVerdict::ConstraintViolation(_) => Verdict::Contradiction,
        PairVerdict::Unmapped => Verdict::Open,
    };
    Ok(Report::new("classify-pair", verdict, payload))
}

pub fn certify(case: &str, e: Option<usize>, d: Option<usize>) -> Result<Report> {
    let id = CertificateId::parse(case)?;
    let e = match (e, d) {
        (Some(e), _) => Some(e),
        (None, Some(d)) => Some(id.e_for_degree(d).ok_or_else(|| anyhow!("{id} has no member of degree {d}"))?),
        (None, None) => None,
    };
    let cert = builtin_certificate(id, e)?;
    let e = e.unwrap_or_else(|| id.default_e());
    let (r0, ri) = id.branching(e);
    let payload = json!({
        "case": id.as_str(),
        "family_parameter": if id.is_family() { Some(e) } else { None },
        "degree": cert.degree,
        "branch_orders": {"zero": r0, "infinity": ri},
        "normal_form": cert.normal_form.iter().map(|p| p.render("z")).collect::<Vec<_>>(),
        "target": format!("v{}^v{}", cert.target.0, cert.target.1),
        "content_power": cert.content_power,
        "extracted": cert.render_extracted(),
        "power": cert.power,
        "h": cert.h.render("z"),
        "h_degree": cert.h.deg(),
        "required_nonzero_roots": cert.required_nonzero_roots,
        "matches_published": matches_expected(id, e, &cert),
        "certificate_verdict": cert.verdict.as_str(),
    });
    let verdict = if cert.verdict == CertVerdict::Contradiction { Verdict::Contradiction } else { Verdict::Open };
    Ok(Report::new("certify", verdict, payload))
}

pub struct FamilyArgs {
    pub name: String,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
}

/// The data file of a family member and a short description.
pub fn family_data(a: &FamilyArgs) -> Result<(Value, Value)> {
    match a.name.as_str() {
        "fd" => {
            let d = a.d.ok_or_else(|| anyhow!("family fd needs --d"))?;
            let (f, s) = fd_family::<Num>(d)?;
            let info = json!({"family": "fd", "d": d, "degree": f.degree()});
            Ok((serde_json::to_value(emit_curve(&f, Some(&s))?)?, info))
        }
        "kusner" => {
            let n = a.n.ok_or_else(|| anyhow!("family kusner needs --n"))?;
            let k = kusner_family(n)?;
            let info = json!({
                "family": "kusner", "n": n,
                "s": number(&k.s), "r": number(&k.r),
                "end_polynomial": k.end_polynomial.to_string(),
                "ends_distinct": k.ends_distinct,
            });
            Ok((serde_json::to_value(emit_weier(&k.data)?)?, info))
        }
        "peng" => {
            let n = a.n.ok_or_else(|| anyhow!("family peng needs --n"))?;
            let m = a.m.ok_or_else(|| anyhow!("family peng needs --m"))?;
            let p = peng_default_params()?;
            let w = peng_family(n, m, &p)?;
            let names = ["a", "b", "c", "lambda"];
            let params: serde_json::Map<String, Value> =
                names.iter().zip(p.as_array()).map(|(k, x)| (k.to_string(), number(x))).collect();
            let info = json!({"family": "peng", "n": n, "m": m, "params": params});
            Ok((serde_json::to_value(emit_weier(&w)?)?, info))
        }
        other => bail!("unknown family '{other}' (expected fd, kusner or peng)"),
    }
}

pub fn family(a: &FamilyArgs) -> Result<Report> {
    let (data, info) = family_data(a)?;
    let mut payload = info;
    payload["data"] = data;
    Ok(Report::new("family", Verdict::Verified, payload))
}

pub fn refute_peng_cmd(n: usize, m: usize) -> Result<Report> {
    let r = refute_peng(n, m)?;
    let om = &r.order_mismatch;
    let mut payload = json!({
        "n": n, "m": m,
        "order_at_zero": {
            "ord_omega": om.ord_omega_at_zero,
            "gauss_pole_order": om.gauss_pole_order,
            "required": om.required,
            "mismatch": om.mismatch,
        },
    });
    if let Some(full) = &r.full {
        let dec = |d: &nullquad::weier::PengDecimal| {
            json!({"name": d.name, "exact": d.exact, "decimal": d.decimal, "printed": d.printed, "matches": d.matches})
        };
        payload["params"] = Value::Array(full.params.iter().map(dec).collect());
        payload["residues_vanish"] = json!(full.residues_vanish);
        payload["zero_is_end"] = json!(full.zero_is_end);
        payload["end_count"] = json!(full.end_count);
        payload["all_ends_embedded"] = json!(full.all_embedded);
        payload["components_polynomial"] = json!(full.components_polynomial);
        payload["F3"] = json!(full.f3);
        payload["P"] = json!(full.p);
        payload["Q"] = json!(full.q);
        payload["higher_coefficients_agree"] = json!(full.higher_coefficients_agree);
        payload["constant_terms_differ"] = json!(full.constants_differ);
        payload["constant_terms"] = Value::Array(full.constants.iter().map(dec).collect());
        payload["constants_match_printed_expressions"] = json!(full.constants_match_printed_expressions);
        payload["completed_curve"] = json!({
            "degree": full.completed_degree,
            "unbranched": full.completed_unbranched,
            "in_quadric": full.completed_in_quadric,
        });
        payload["refutation_holds"] = json!(full.refutation_holds);
    }
    payload["pipeline_verdict"] = json!(r.verdict.as_str());
    let verdict = match r.verdict {
        PengVerdict::Refuted => Verdict::Refuted,
        PengVerdict::Verified => Verdict::Verified,
        PengVerdict::Open => Verdict::Open,
    };
    Ok(Report::new("refute-peng", verdict, payload))
}
