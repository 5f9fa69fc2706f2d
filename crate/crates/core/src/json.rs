// SPDX-License-Identifier: Apache-2.0

//! JSON interchange. Parsing walks a `serde_json::Value` so that every
//! error carries the path of the offending entry (`$.circ[1][0][2]`).
//! Objects are written with sorted keys, so output is byte-stable.
//!
//! Index conventions: `bracket[k][i][j]` is the `e_k` coefficient of
//! `[e_i, e_j]`, matrices are row-major, `l3[k][a][b][c]` is the `k`-th
//! coefficient of `l3(e_a, e_b, e_c)`. Subspaces are lists of basis vectors.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::Cohomology;
use crate::ela::{BetaTwist, ElaMorphism, ELA};
use crate::error::{Error, Result};
use crate::leibniz::{LeibnizAlgebra, LeibnizModule, LodayCochain};
use crate::lie2::Lie2Algebra;
use crate::linalg::{BilinearMap, Matrix, Rational, Subspace, TrilinearMap, Vector};
use crate::structure::{DCochain2, DCohomology, Decomposition, Reconstruction, SourceFrame};

fn err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

fn to_value<T: Serialize + ?Sized>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn parse_str(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| err("$", format!("malformed JSON: {e}")))
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a serde_json::Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    object(v, path)?
        .get(key)
        .ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn optional<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.get(key).filter(|x| !x.is_null())
}

fn array<'a>(v: &'a Value, len: Option<usize>, path: &str) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| err(path, "expected an array"))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(err(path, format!("expected {n} entries, found {}", a.len())));
        }
    }
    Ok(a)
}

pub fn parse_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn usize_field(v: &Value, key: &str, path: &str) -> Result<usize> {
    parse_usize(field(v, key, path)?, &format!("{path}.{key}"))
}

pub fn parse_rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::Number(_) | Value::String(_) => {
            serde_json::from_value(v.clone()).map_err(|e| err(path, e.to_string()))
        }
        _ => Err(err(path, "expected an integer or a \"p/q\" string")),
    }
}

pub fn parse_vector(v: &Value, len: usize, path: &str) -> Result<Vector> {
    array(v, Some(len), path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_rational(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn parse_matrix(v: &Value, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
    let a = array(v, Some(rows), path)?;
    let mut out = Vec::with_capacity(rows);
    for (i, r) in a.iter().enumerate() {
        out.push(parse_vector(r, cols, &format!("{path}[{i}]"))?);
    }
    Ok(Matrix::from_rows(cols, out))
}

/// `v[k][i][j]` with extents `(dim_out, a, b)`.
pub fn parse_bilinear(v: &Value, a: usize, b: usize, dim_out: usize, path: &str) -> Result<BilinearMap> {
    let mut m = BilinearMap::zeros(a, b, dim_out);
    for (k, slice) in array(v, Some(dim_out), path)?.iter().enumerate() {
        let p = format!("{path}[{k}]");
        for (i, row) in array(slice, Some(a), &p)?.iter().enumerate() {
            for (j, x) in parse_vector(row, b, &format!("{p}[{i}]"))?.into_iter().enumerate() {
                m.set(k, i, j, x);
            }
        }
    }
    Ok(m)
}

/// `v[k][a][b][c]`.
pub fn parse_trilinear(v: &Value, dims: [usize; 3], dim_out: usize, path: &str) -> Result<TrilinearMap> {
    let [a, b, c] = dims;
    let mut nested = Vec::with_capacity(dim_out);
    for (k, slice) in array(v, Some(dim_out), path)?.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let mut s = Vec::with_capacity(a);
        for (i, sub) in array(slice, Some(a), &p)?.iter().enumerate() {
            let q = format!("{p}[{i}]");
            let mut rows = Vec::with_capacity(b);
            for (j, row) in array(sub, Some(b), &q)?.iter().enumerate() {
                rows.push(parse_vector(row, c, &format!("{q}[{j}]"))?);
            }
            s.push(rows);
        }
        nested.push(s);
    }
    TrilinearMap::from_nested(&nested, a, b, c, dim_out).map_err(|m| err(path, m))
}

/// A subspace given as a list of spanning vectors.
pub fn parse_subspace(v: &Value, ambient: usize, path: &str) -> Result<Subspace> {
    let mut vs = Vec::new();
    for (i, x) in array(v, None, path)?.iter().enumerate() {
        vs.push(parse_vector(x, ambient, &format!("{path}[{i}]"))?);
    }
    Ok(Subspace::span(ambient, &vs))
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    to_value(&s.basis_vectors())
}

fn shape(path: &str, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => err(path, other.to_string()),
    }
}

// ---- Leibniz algebras and modules

pub fn leibniz_to_json(l: &LeibnizAlgebra) -> Value {
    json!({ "dim": l.dim(), "bracket": to_value(l.bracket()) })
}

pub fn parse_leibniz(v: &Value, path: &str) -> Result<LeibnizAlgebra> {
    let n = usize_field(v, "dim", path)?;
    let b = parse_bilinear(field(v, "bracket", path)?, n, n, n, &format!("{path}.bracket"))?;
    LeibnizAlgebra::new(b).map_err(|e| shape(path, e))
}

pub fn module_to_json(m: &LeibnizModule) -> Value {
    json!({
        "dimM": m.dim_m(),
        "rho_l": to_value(m.rho_l()),
        "rho_r": m.rho_r().map(to_value),
    })
}

fn parse_matrices(v: &Value, count: usize, d: usize, path: &str) -> Result<Vec<Matrix>> {
    array(v, Some(count), path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_matrix(x, d, d, &format!("{path}[{i}]")))
        .collect()
}

/// A module over `algebra`. `dimM` may be omitted when `rho_l` is nonempty.
pub fn parse_module(v: &Value, algebra: LeibnizAlgebra, path: &str) -> Result<LeibnizModule> {
    let n = algebra.dim();
    let rho_l_v = field(v, "rho_l", path)?;
    let d = match optional(v, "dimM") {
        Some(x) => parse_usize(x, &format!("{path}.dimM"))?,
        None => match array(rho_l_v, None, &format!("{path}.rho_l"))?.first() {
            Some(first) => array(first, None, &format!("{path}.rho_l[0]"))?.len(),
            None => return Err(err(path, "missing field \"dimM\"")),
        },
    };
    let rho_l = parse_matrices(rho_l_v, n, d, &format!("{path}.rho_l"))?;
    let rho_r = match optional(v, "rho_r") {
        Some(x) => Some(parse_matrices(x, n, d, &format!("{path}.rho_r"))?),
        None => None,
    };
    LeibnizModule::new(algebra, d, rho_l, rho_r).map_err(|e| shape(path, e))
}

/// `{"algebra": {...}, "rho_l": [...], "rho_r": [...]?}`.
pub fn parse_module_with_algebra(v: &Value, path: &str) -> Result<LeibnizModule> {
    let g = parse_leibniz(field(v, "algebra", path)?, &format!("{path}.algebra"))?;
    parse_module(v, g, path)
}

// ---- ELAs, twists and morphisms

pub fn ela_to_json(e: &ELA) -> Value {
    json!({
        "dimV": e.dim_v(),
        "dimW": e.dim_w(),
        "bracket": to_value(e.bracket()),
        "t": to_value(e.t()),
        "circ": to_value(e.circ()),
    })
}

/// Checks shapes only; the axioms are left to `check_ela`.
pub fn parse_ela(v: &Value) -> Result<ELA> {
    let path = "$";
    let n = usize_field(v, "dimV", path)?;
    let m = usize_field(v, "dimW", path)?;
    let bracket = parse_bilinear(field(v, "bracket", path)?, n, n, n, "$.bracket")?;
    let t = parse_matrix(field(v, "t", path)?, n, m, "$.t")?;
    let circ = parse_bilinear(field(v, "circ", path)?, n, n, m, "$.circ")?;
    let l = LeibnizAlgebra::new(bracket).map_err(|e| shape(path, e))?;
    ELA::new(l, t, circ).map_err(|e| shape(path, e))
}

pub fn morphism_to_json(f: &ElaMorphism) -> Value {
    json!({
        "phi": to_value(&f.phi),
        "psi": to_value(&f.psi),
        "beta": to_value(f.post_beta.beta()),
    })
}

/// `{"phi": W'×W, "psi": V'×V, "beta": [k][i][j] on V'}`.
pub fn parse_morphism(v: &Value, src: &ELA, dst: &ELA, path: &str) -> Result<ElaMorphism> {
    let phi = parse_matrix(field(v, "phi", path)?, dst.dim_w(), src.dim_w(), &format!("{path}.phi"))?;
    let psi = parse_matrix(field(v, "psi", path)?, dst.dim_v(), src.dim_v(), &format!("{path}.psi"))?;
    let n = dst.dim_v();
    let post_beta = match optional(v, "beta") {
        Some(b) => {
            let p = format!("{path}.beta");
            BetaTwist::new(parse_bilinear(b, n, n, dst.dim_w(), &p)?).map_err(|e| shape(&p, e))?
        }
        None => BetaTwist::zero(n, dst.dim_w()),
    };
    Ok(ElaMorphism { phi, psi, post_beta })
}

// ---- Lie-2 algebras

pub fn lie2_to_json(a: &Lie2Algebra) -> Value {
    json!({
        "dimV": a.dim_v(),
        "dimW": a.dim_w(),
        "t": to_value(&a.t),
        "l2vv": to_value(&a.l2_vv),
        "l2vw": to_value(&a.l2_vw),
        "l3": to_value(&a.l3),
    })
}

pub fn parse_lie2(v: &Value) -> Result<Lie2Algebra> {
    let path = "$";
    let n = usize_field(v, "dimV", path)?;
    let m = usize_field(v, "dimW", path)?;
    let t = parse_matrix(field(v, "t", path)?, n, m, "$.t")?;
    let l2_vv = parse_bilinear(field(v, "l2vv", path)?, n, n, n, "$.l2vv")?;
    let l2_vw = parse_bilinear(field(v, "l2vw", path)?, n, m, m, "$.l2vw")?;
    let l3 = parse_trilinear(field(v, "l3", path)?, [n, n, n], m, "$.l3")?;
    Lie2Algebra::new(t, l2_vv, l2_vw, l3).map_err(|e| shape(path, e))
}

// ---- Decompositions

pub fn decomposition_to_json(d: &Decomposition) -> Value {
    let source = d.source.as_ref().map(|s| {
        json!({
            "dim_w": s.dim_w,
            "kernel": subspace_to_json(&s.kernel),
            "sigma": to_value(&s.sigma),
        })
    });
    json!({
        "algebra": leibniz_to_json(&d.algebra),
        "ideal_i": subspace_to_json(&d.ideal_i),
        "g": leibniz_to_json(&d.g),
        "g_projection": to_value(&d.g_projection),
        "g_section": to_value(&d.g_section),
        "module_action": module_to_json(&d.module_action),
        "alpha": to_value(&d.alpha.to_bilinear()),
        "u_dim": d.u_dim,
        "delta": to_value(d.delta.delta()),
        "delta_g": to_value(&d.delta_g),
        "delta_mix": to_value(&d.delta_mix),
        "source": source,
    })
}

/// Shape-checked only; `structure::validate` checks the mathematics.
pub fn parse_decomposition(v: &Value) -> Result<Decomposition> {
    let path = "$";
    let algebra = parse_leibniz(field(v, "algebra", path)?, "$.algebra")?;
    let n = algebra.dim();
    let ideal_i = parse_subspace(field(v, "ideal_i", path)?, n, "$.ideal_i")?;
    let di = ideal_i.dim();
    let g = parse_leibniz(field(v, "g", path)?, "$.g")?;
    let dg = g.dim();
    let g_projection = parse_matrix(field(v, "g_projection", path)?, dg, n, "$.g_projection")?;
    let g_section = parse_matrix(field(v, "g_section", path)?, n, dg, "$.g_section")?;
    let module_action = parse_module(field(v, "module_action", path)?, g.clone(), "$.module_action")?;
    if module_action.dim_m() != di {
        return Err(err("$.module_action.dimM", format!("expected {di}, the dimension of ideal_i")));
    }
    let alpha = LodayCochain::from_bilinear(&parse_bilinear(field(v, "alpha", path)?, dg, dg, di, "$.alpha")?);
    let u_dim = usize_field(v, "u_dim", path)?;
    let delta = DCochain2::new(parse_bilinear(field(v, "delta", path)?, n, n, u_dim, "$.delta")?)
        .map_err(|e| shape("$.delta", e))?;
    let delta_g = parse_bilinear(field(v, "delta_g", path)?, dg, dg, u_dim, "$.delta_g")?;
    let delta_mix = parse_bilinear(field(v, "delta_mix", path)?, dg, di, u_dim, "$.delta_mix")?;
    let source = match optional(v, "source") {
        None => None,
        Some(s) => {
            let p = "$.source";
            let dim_w = usize_field(s, "dim_w", p)?;
            let kernel = parse_subspace(field(s, "kernel", p)?, dim_w, "$.source.kernel")?;
            let sigma = parse_matrix(field(s, "sigma", p)?, dim_w, di, "$.source.sigma")?;
            if kernel.dim() != u_dim {
                return Err(err("$.source.kernel", format!("expected {u_dim} basis vectors")));
            }
            Some(SourceFrame { dim_w, kernel, sigma })
        }
    };
    Ok(Decomposition {
        algebra,
        ideal_i,
        g,
        g_projection,
        g_section,
        module_action,
        alpha,
        u_dim,
        delta,
        delta_g,
        delta_mix,
        source,
    })
}

pub fn reconstruction_to_json(r: &Reconstruction) -> Value {
    json!({
        "ela": ela_to_json(&r.ela),
        "from_source": r.from_source.as_ref().map(morphism_to_json),
        "to_source": r.to_source.as_ref().map(morphism_to_json),
    })
}

// ---- Cohomology

pub fn d_cohomology_to_json(h: &DCohomology, u_dim: usize) -> Value {
    let list = |v: &[BilinearMap]| Value::Array(v.iter().map(to_value).collect());
    json!({
        "complex": "d",
        "u_dim": u_dim,
        "dimension": h.dimension,
        "cocycles": list(&h.cocycles),
        "coboundaries": list(&h.coboundaries),
        "representatives": list(&h.representatives),
    })
}

/// Degree-2 Loday cohomology with cochains written as `[k][i][j]` tensors.
pub fn loday_cohomology_to_json(h: &Cohomology, module: &LeibnizModule) -> Value {
    let n = module.algebra().dim();
    let m = module.dim_m();
    let conv = |vs: Vec<Vector>| -> Value {
        Value::Array(
            vs.iter()
                .map(|v| to_value(&LodayCochain::from_vector(2, n, m, v).to_bilinear()))
                .collect(),
        )
    };
    json!({
        "complex": "loday",
        "dimension": h.dimension,
        "cocycles": conv(h.cocycles.basis_vectors()),
        "coboundaries": conv(h.coboundaries.basis_vectors()),
        "representatives": conv(h.representatives.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{by_name, CORPUS_NAMES};
    use crate::structure::decompose;

    #[test]
    fn corpus_round_trips_byte_for_byte() {
        for name in CORPUS_NAMES {
            let text = render(&ela_to_json(&by_name(name).unwrap()));
            let back = parse_ela(&parse_str(&text).unwrap()).unwrap();
            assert_eq!(render(&ela_to_json(&back)), text, "{name}");
        }
    }

    #[test]
    fn decomposition_round_trips() {
        let d = decompose(&by_name("end2").unwrap()).unwrap();
        let text = render(&decomposition_to_json(&d));
        let back = parse_decomposition(&parse_str(&text).unwrap()).unwrap();
        assert_eq!(back, d);
        assert_eq!(render(&decomposition_to_json(&back)), text);
    }

    #[test]
    fn wrong_extent_names_the_path() {
        let mut v = ela_to_json(&by_name("end2").unwrap());
        v["circ"][1][0].as_array_mut().unwrap().pop();
        match parse_ela(&v) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "$.circ[1][0]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rationals_are_normalized_and_floats_rejected() {
        assert_eq!(parse_rational(&json!("3/6"), "$").unwrap(), Rational::new(1, 2));
        assert_eq!(to_value(&Rational::new(3, 6)), json!("1/2"));
        assert!(parse_rational(&json!(0.5), "$").is_err());
        assert!(parse_rational(&json!(null), "$").is_err());
    }
}
