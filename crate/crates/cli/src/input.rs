//! JSON input files and their emitters.
//!
//! Every exact number is a literal string in the grammar of
//! `nullquad::exactnum` (`p/q`, `sqrt(..)`, `i`, `+ - * / ( )`).
//! Polynomials are ascending coefficient lists.  A file may also be a
//! JSON report whose `payload.data` holds one of these objects, so the
//! output of one subcommand can be piped into another.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use nullquad::curves::{content, ProjectiveCurve, SymplecticStructure};
use nullquad::exactnum::{LiteralParser, Num, Tower};
use nullquad::poly::Poly;
use nullquad::weier::{RatFn, WeierstrassData};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default)]
    pub radicands: Vec<String>,
    #[serde(default)]
    pub complex: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default)]
    pub field: FieldSpec,
    pub coords: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RatFnLits {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct WeierFile {
    #[serde(default)]
    pub field: FieldSpec,
    pub g: RatFnLits,
    pub omega: RatFnLits,
}

/// Reads `path` (or stdin for `-`) as JSON, unwrapping `payload.data`.
pub fn read_json(path: &str) -> Result<(String, Value)> {
    let (name, text) = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        ("<stdin>".to_string(), s)
    } else {
        (path.to_string(), fs::read_to_string(path).with_context(|| format!("{path}: cannot read file"))?)
    };
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{name}: line {}, column {}: {e}", e.line(), e.column()))?;
    let v = match v.pointer("/payload/data") {
        Some(data) => data.clone(),
        None => v,
    };
    Ok((name, v))
}

fn typed<T: for<'de> Deserialize<'de>>(name: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| anyhow!("{name}: schema violation: {e}"))
}

/// Parser seeded with the declared field.
fn field_parser(name: &str, f: &FieldSpec) -> Result<LiteralParser> {
    let mut p = LiteralParser::new();
    for (k, r) in f.radicands.iter().enumerate() {
        p.adjoin(r).map_err(|e| anyhow!("{name}: field.radicands[{k}] = \"{r}\": {e}"))?;
    }
    if f.complex {
        p.adjoin_i();
    }
    Ok(p)
}

fn parse_list(p: &mut LiteralParser, name: &str, at: &str, lits: &[String]) -> Result<Vec<Num>> {
    lits.iter()
        .enumerate()
        .map(|(k, s)| p.parse(s).map_err(|e| anyhow!("{name}: {at}[{k}] = \"{s}\": {e}")))
        .collect()
}

fn finish_poly(p: &LiteralParser, xs: &[Num]) -> Poly<Num> {
    Poly::new(xs.iter().map(|x| p.finish(x)).collect())
}

pub struct ParsedCurve {
    pub curve: ProjectiveCurve<Num>,
    pub beta: Option<SymplecticStructure<Num>>,
    pub notices: Vec<String>,
}

pub fn parse_curve(path: &str) -> Result<ParsedCurve> {
    let (name, v) = read_json(path)?;
    let file: CurveFile = typed(&name, v)?;
    let mut p = field_parser(&name, &file.field)?;
    let raw: Vec<Vec<Num>> = file
        .coords
        .iter()
        .enumerate()
        .map(|(j, c)| parse_list(&mut p, &name, &format!("coords[{j}]"), c))
        .collect::<Result<_>>()?;
    let beta_raw: Option<Vec<Vec<Num>>> = match &file.beta {
        None => None,
        Some(rows) => Some(
            rows.iter()
                .enumerate()
                .map(|(j, r)| parse_list(&mut p, &name, &format!("beta[{j}]"), r))
                .collect::<Result<_>>()?,
        ),
    };
    let coords: Vec<Poly<Num>> = raw.iter().map(|c| finish_poly(&p, c)).collect();
    let mut notices = Vec::new();
    let g = content(&coords);
    if !g.is_zero() && !g.is_constant() {
        notices.push(format!("coordinates share the factor {g}; divided out"));
    }
    let curve = ProjectiveCurve::normalize(coords).map_err(|e| anyhow!("{name}: {e}"))?;
    let beta = match beta_raw {
        None => None,
        Some(rows) => {
            let m: Vec<Vec<Num>> = rows.iter().map(|r| r.iter().map(|x| p.finish(x)).collect()).collect();
            Some(SymplecticStructure::new(m).map_err(|e| anyhow!("{name}: beta: {e}"))?)
        }
    };
    Ok(ParsedCurve { curve, beta, notices })
}

pub fn parse_weier(path: &str) -> Result<WeierstrassData> {
    let (name, v) = read_json(path)?;
    let file: WeierFile = typed(&name, v)?;
    let mut p = field_parser(&name, &file.field)?;
    let gn = parse_list(&mut p, &name, "g.num", &file.g.num)?;
    let gd = parse_list(&mut p, &name, "g.den", &file.g.den)?;
    let on = parse_list(&mut p, &name, "omega.num", &file.omega.num)?;
    let od = parse_list(&mut p, &name, "omega.den", &file.omega.den)?;
    let g = RatFn::new(finish_poly(&p, &gn), finish_poly(&p, &gd)).map_err(|e| anyhow!("{name}: g: {e}"))?;
    let w = RatFn::new(finish_poly(&p, &on), finish_poly(&p, &od)).map_err(|e| anyhow!("{name}: omega: {e}"))?;
    WeierstrassData::new(g, w).map_err(|e| anyhow!("{name}: {e}"))
}

/// The smallest tower containing every value.
fn common_tower<'a>(xs: impl IntoIterator<Item = &'a Num>) -> Result<Tower> {
    xs.into_iter().try_fold(Tower::rational(), |t, x| {
        Tower::join(&t, x.tower()).ok_or_else(|| anyhow!("values live in incompatible towers"))
    })
}

fn field_of(t: &Tower) -> FieldSpec {
    FieldSpec { radicands: t.radicand_literals(), complex: t.is_complex() }
}

fn lits(p: &Poly<Num>) -> Vec<String> {
    p.coeffs().iter().map(Num::to_string).collect()
}

pub fn emit_curve(curve: &ProjectiveCurve<Num>, beta: Option<&SymplecticStructure<Num>>) -> Result<CurveFile> {
    let mut all: Vec<&Num> = curve.coords().iter().flat_map(|c| c.coeffs()).collect();
    if let Some(s) = beta {
        all.extend(s.beta().iter().flatten());
    }
    let t = common_tower(all)?;
    Ok(CurveFile {
        field: field_of(&t),
        coords: curve.coords().iter().map(lits).collect(),
        beta: beta.map(|s| s.beta().iter().map(|r| r.iter().map(Num::to_string).collect()).collect()),
    })
}

pub fn emit_weier(w: &WeierstrassData) -> Result<WeierFile> {
    let parts = [w.gauss().num(), w.gauss().den(), w.form().num(), w.form().den()];
    let t = common_tower(parts.iter().flat_map(|p| p.coeffs()))?;
    let rf = |n: &Poly<Num>, d: &Poly<Num>| RatFnLits { num: lits(n), den: lits(d) };
    Ok(WeierFile {
        field: field_of(&t),
        g: rf(w.gauss().num(), w.gauss().den()),
        omega: rf(w.form().num(), w.form().den()),
    })
}

/// Rejects a curve file in the wrong ambient dimension before any work.
pub fn require_dim(curve: &ProjectiveCurve<Num>, n: usize) -> Result<()> {
    if curve.ambient_dim() != n {
        bail!("expected a curve in P^{n}, got one in P^{}", curve.ambient_dim());
    }
    Ok(())
}
