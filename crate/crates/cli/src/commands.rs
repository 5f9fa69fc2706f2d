// SPDX-License-Identifier: Apache-2.0

use std::io::Read;

use ela_core::corpus::{by_name, canonical_delta_class, normalizing_parameters, QuadraticFormTwoVars, CORPUS_NAMES};
use ela_core::ela::{check_ela, ELA};
use ela_core::json::*;
use ela_core::leibniz::{check_couple, check_leibniz, leibniz_h2, left_center, squares_ideal, LeibnizAlgebra, LeibnizModule};
use ela_core::lie2::{check_lie2, induced_lie2};
use ela_core::linalg::{kernel, Subspace};
use ela_core::structure::{self, d_cohomology, validate, DCochain2, Decomposition};
use ela_core::Report;
use serde_json::{json, Value};

use crate::Complex;

pub struct Outcome {
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, passed: true }
    }

    fn report(r: &Report) -> Self {
        Outcome {
            json: serde_json::to_value(r).expect("serializable"),
            passed: r.passed(),
        }
    }
}

type CmdResult = Result<Outcome, String>;

fn load(input: &str) -> Result<Value, String> {
    if let Some(name) = input.strip_prefix("corpus:") {
        return by_name(name)
            .map(|e| ela_to_json(&e))
            .ok_or_else(|| format!("unknown corpus item \"{name}\"; known: {}", CORPUS_NAMES.join(", ")));
    }
    let mut text = String::new();
    if input == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
    } else {
        text = std::fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?;
    }
    parse_str(&text).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Ela,
    Lie2,
    Leibniz,
    Module,
    Decomposition,
    Form,
}

fn kind(v: &Value) -> Result<Kind, String> {
    let has = |k: &str| v.get(k).is_some();
    if !v.is_object() {
        return Err("$: expected an object".into());
    }
    Ok(if has("circ") {
        Kind::Ela
    } else if has("l2vv") {
        Kind::Lie2
    } else if has("ideal_i") {
        Kind::Decomposition
    } else if has("rho_l") {
        Kind::Module
    } else if has("bracket") {
        Kind::Leibniz
    } else if has("mu1") {
        Kind::Form
    } else {
        return Err("$: cannot tell what this object describes (no \"circ\", \"l2vv\", \"ideal_i\", \"rho_l\", \"bracket\" or \"mu1\" field)".into());
    })
}

fn msg(e: ela_core::Error) -> String {
    e.to_string()
}

fn load_ela(input: &str) -> Result<ELA, String> {
    let v = load(input)?;
    match kind(&v)? {
        Kind::Ela => parse_ela(&v).map_err(msg),
        k => Err(format!("expected an ELA, found a {k:?} description")),
    }
}

pub fn check(input: &str, extended: bool) -> CmdResult {
    let v = load(input)?;
    let k = kind(&v)?;
    if extended && k != Kind::Ela {
        return Err("--extended applies to ELAs only".into());
    }
    let r = match k {
        Kind::Ela => check_ela(&parse_ela(&v).map_err(msg)?, extended),
        Kind::Lie2 => check_lie2(&parse_lie2(&v).map_err(msg)?),
        Kind::Leibniz => check_leibniz(parse_leibniz(&v, "$").map_err(msg)?.bracket()),
        Kind::Module => {
            let m = parse_module_with_algebra(&v, "$").map_err(msg)?;
            let mut r = check_leibniz(m.algebra().bracket()).prefixed("algebra-");
            r.extend(m.check());
            r
        }
        Kind::Decomposition => validate(&parse_decomposition(&v).map_err(msg)?),
        Kind::Form => return Err("a binary form has no axioms to check; use classify-delta".into()),
    };
    Ok(Outcome::report(&r))
}

/// Runs the ELA axioms and returns the failing report, if any.
fn require_ela(e: &ELA) -> Option<Outcome> {
    let r = check_ela(e, false);
    (!r.passed()).then(|| Outcome::report(&r))
}

pub fn decompose(input: &str) -> CmdResult {
    let e = load_ela(input)?;
    if let Some(fail) = require_ela(&e) {
        return Ok(fail);
    }
    if !e.is_symmetric() {
        return Err("the product is not symmetric; only symmetric ELAs decompose".into());
    }
    let d = structure::decompose(&e).map_err(msg)?;
    Ok(Outcome::ok(decomposition_to_json(&d)))
}

pub fn reconstruct(input: &str) -> CmdResult {
    let v = load(input)?;
    if kind(&v)? != Kind::Decomposition {
        return Err("expected a decomposition".into());
    }
    let d = parse_decomposition(&v).map_err(msg)?;
    let r = validate(&d);
    if !r.passed() {
        return Ok(Outcome::report(&r));
    }
    let rec = structure::reconstruct(&d).map_err(msg)?;
    Ok(Outcome::ok(reconstruction_to_json(&rec)))
}

pub fn functor(input: &str) -> CmdResult {
    let e = load_ela(input)?;
    if let Some(fail) = require_ela(&e) {
        return Ok(fail);
    }
    Ok(Outcome::ok(lie2_to_json(&induced_lie2(&e))))
}

fn choose_ideal(choice: Option<&str>, l: &LeibnizAlgebra, e: Option<&ELA>) -> Result<Subspace, String> {
    match choice {
        None => Ok(match e {
            Some(e) => Subspace::column_span(e.t()),
            None => squares_ideal(l),
        }),
        Some("squares") => Ok(squares_ideal(l)),
        Some("center") => Ok(left_center(l)),
        Some("image") => e
            .map(|e| Subspace::column_span(e.t()))
            .ok_or_else(|| "--ideal image needs an ELA input".to_string()),
        Some(text) => {
            let v = parse_str(text).map_err(|_| format!("--ideal: expected squares, center, image or a JSON list of vectors, got {text:?}"))?;
            parse_subspace(&v, l.dim(), "--ideal").map_err(msg)
        }
    }
}

pub fn cohomology(input: &str, complex: Complex, u_dim: Option<usize>, ideal: Option<&str>) -> CmdResult {
    let v = load(input)?;
    let k = kind(&v)?;
    if complex == Complex::Loday && u_dim.is_some() {
        return Err("--u-dim applies to the d complex only".into());
    }
    if k == Kind::Module {
        if complex != Complex::Loday || ideal.is_some() {
            return Err("a module input takes --complex loday and no --ideal".into());
        }
        let m = parse_module_with_algebra(&v, "$").map_err(msg)?;
        let h = leibniz_h2(m.algebra(), &m).map_err(msg)?;
        return Ok(Outcome::ok(loday_cohomology_to_json(&h, &m)));
    }
    let (l, e) = match k {
        Kind::Ela => {
            let e = parse_ela(&v).map_err(msg)?;
            (e.algebra().clone(), Some(e))
        }
        Kind::Leibniz => (parse_leibniz(&v, "$").map_err(msg)?, None),
        other => return Err(format!("cohomology takes an ELA, Leibniz algebra or module, found a {other:?} description")),
    };
    let lr = check_leibniz(l.bracket());
    if !lr.passed() {
        return Ok(Outcome::report(&lr));
    }
    let i = choose_ideal(ideal, &l, e.as_ref())?;
    let couple = check_couple(&l, &i);
    if !couple.passed() {
        return Ok(Outcome::report(&couple.prefixed("couple-")));
    }
    match complex {
        Complex::D => {
            let u = u_dim.unwrap_or_else(|| match &e {
                Some(e) => kernel(e.t()).dim(),
                None => 1,
            });
            let h = d_cohomology(&l, &i, u).map_err(msg)?;
            Ok(Outcome::ok(d_cohomology_to_json(&h, u)))
        }
        Complex::Loday => {
            let n = l.dim();
            let d = Decomposition::from_parts(l, i, DCochain2::zero(n, 0)).map_err(msg)?;
            let m: &LeibnizModule = &d.module_action;
            let h = leibniz_h2(&d.g, m).map_err(msg)?;
            Ok(Outcome::ok(loday_cohomology_to_json(&h, m)))
        }
    }
}

pub fn corpus(name: Option<&str>, list: bool) -> CmdResult {
    match (name, list) {
        (None, true) => Ok(Outcome::ok(json!(CORPUS_NAMES))),
        (Some(n), false) => {
            let n = n.strip_prefix("corpus:").unwrap_or(n);
            by_name(n)
                .map(|e| Outcome::ok(ela_to_json(&e)))
                .ok_or_else(|| format!("unknown corpus item \"{n}\"; known: {}", CORPUS_NAMES.join(", ")))
        }
        _ => Err("give either a corpus name or --list".into()),
    }
}

fn parse_form(v: &Value) -> Result<QuadraticFormTwoVars, String> {
    let get = |k: &str| -> Result<_, String> {
        let x = v.get(k).ok_or_else(|| format!("$: missing field \"{k}\""))?;
        parse_rational(x, &format!("$.{k}")).map_err(msg)
    };
    Ok(QuadraticFormTwoVars::new(get("mu1")?, get("mu2")?, get("mu3")?))
}

pub fn classify_delta(input: &str) -> CmdResult {
    let v = load(input)?;
    let q = match kind(&v)? {
        Kind::Form => parse_form(&v)?,
        Kind::Ela => {
            let e = parse_ela(&v).map_err(msg)?;
            if let Some(fail) = require_ela(&e) {
                return Ok(fail);
            }
            if !e.is_symmetric() {
                return Err("the product is not symmetric".into());
            }
            let d = structure::decompose(&e).map_err(msg)?;
            if d.dim_g() != 2 || d.u_dim != 1 {
                return Err(format!(
                    "classification needs a 2-dimensional quotient and a 1-dimensional kernel, found {} and {}",
                    d.dim_g(),
                    d.u_dim
                ));
            }
            QuadraticFormTwoVars::from_bilinear(&d.delta_g).map_err(msg)?
        }
        other => return Err(format!("expected an ELA or a binary form, found a {other:?} description")),
    };
    let class = canonical_delta_class(&q);
    let normalizing = normalizing_parameters(&q).map(|(a, b, c)| json!({ "a": a, "b": b, "c": c }));
    Ok(Outcome::ok(json!({
        "form": q,
        "class": class,
        "representative": class.representative_index(),
        "normalizing": normalizing,
    })))
}
