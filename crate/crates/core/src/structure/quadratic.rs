// SPDX-License-Identifier: Apache-2.0

//! Positive quadratic symmetric ELAs from Lie-algebraic data, and the
//! orthogonal complement of a left ideal.

use crate::ela::{QuadraticELA, ELA};
use crate::error::{invalid, Result};
use crate::leibniz::{hemisemidirect, LeibnizAlgebra, LeibnizModule};
use crate::linalg::matrix::{unit_vector, vec_add, vec_scale};
use crate::linalg::{is_positive_definite, BilinearMap, Matrix, Rational, Subspace};
use crate::report::Report;

/// Inputs of [`build_positive_quadratic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveQuadraticData {
    pub g: LeibnizAlgebra,
    pub kappa_g: Matrix,
    /// A module of `g` (left action only).
    pub i_action: LeibnizModule,
    pub kappa_i: Matrix,
    pub kappa_i_prime: Matrix,
    pub u_dim: usize,
    pub kappa_u: Matrix,
    /// `(dim_g, dim_g, u_dim)`.
    pub delta_g: BilinearMap,
    /// `(dim_g, dim_i, u_dim)`.
    pub delta_mix: BilinearMap,
}

/// Every hypothesis of the builder, each under its own id: `shape`,
/// `g-lie`, `kappa-g-invariant`, `kappa-g-positive`, `i-module-*`,
/// `kappa-i-invariant`, `kappa-i-positive`, `kappa-i-prime-invariant`,
/// `kappa-i-prime-positive`, `kappa-u-positive`, `delta-g-symmetric`,
/// `delta-g-invariant`, `delta-mix-equivariant`, `delta-mix-vanishes`.
pub fn positive_quadratic_hypotheses(d: &PositiveQuadraticData) -> Report {
    let mut r = Report::new();
    let dg = d.g.dim();
    let di = d.i_action.dim_m();
    let u = d.u_dim;
    let square = |m: &Matrix, k: usize| m.rows() == k && m.cols() == k;
    let shapes_ok = square(&d.kappa_g, dg)
        && square(&d.kappa_i, di)
        && square(&d.kappa_i_prime, di)
        && square(&d.kappa_u, u)
        && d.i_action.algebra() == &d.g
        && d.delta_g.dims() == (dg, dg, u)
        && d.delta_mix.dims() == (dg, di, u);
    if !shapes_ok {
        r.push("shape", Vec::new(), Vec::new());
        return r;
    }
    r.require("g-lie", d.g.is_lie());
    let positive = |m: &Matrix| is_positive_definite(m).unwrap_or(false);
    for x in 0..dg {
        r.check("kappa-g-invariant", &[x], skew(&d.kappa_g, &d.g.left_mult(x)));
    }
    r.require("kappa-g-positive", positive(&d.kappa_g));
    r.extend(d.i_action.check().prefixed("i-module-"));
    for x in 0..dg {
        let a = &d.i_action.rho_l()[x];
        r.check("kappa-i-invariant", &[x], skew(&d.kappa_i, a));
        r.check("kappa-i-prime-invariant", &[x], skew(&d.kappa_i_prime, a));
    }
    r.require("kappa-i-positive", positive(&d.kappa_i));
    r.require("kappa-i-prime-positive", positive(&d.kappa_i_prime));
    r.require("kappa-u-positive", positive(&d.kappa_u));
    r.require("delta-g-symmetric", d.delta_g.is_symmetric());
    let eg = |x: usize| unit_vector(dg, x);
    for z in 0..dg {
        for x in 0..dg {
            for y in 0..dg {
                let s = vec_add(
                    &d.delta_g.apply(&d.g.br_basis(z, x), &eg(y)),
                    &d.delta_g.apply(&eg(x), &d.g.br_basis(z, y)),
                );
                r.check("delta-g-invariant", &[z, x, y], s);
            }
        }
    }
    for x in 0..dg {
        for y in 0..dg {
            for m in 0..di {
                let lhs = d.delta_mix.apply(&d.g.br_basis(x, y), &unit_vector(di, m));
                let a = d.delta_mix.apply(&eg(x), &d.i_action.rho_l()[y].column(m));
                let b = d.delta_mix.apply(&eg(y), &d.i_action.rho_l()[x].column(m));
                let s: Vec<Rational> = lhs
                    .iter()
                    .zip(a.iter().zip(&b))
                    .map(|(l, (a, b))| l - a + b)
                    .collect();
                r.check("delta-mix-equivariant", &[x, y, m], s);
            }
        }
    }
    // With κ_W = κ_U ⊕ κ_i', invariance of κ_W forces Δ_mix = 0.
    for x in 0..dg {
        for m in 0..di {
            r.check("delta-mix-vanishes", &[x, m], d.delta_mix.basis_value(x, m));
        }
    }
    r
}

/// `V = g ⊕ i` with the hemisemidirect bracket, `W = U ⊕ i`,
/// `t(u, m) = (0, m)` and
/// `(x,m)∘(y,n) = (Δ_g(x,y) + Δ_mix(x,n) + Δ_mix(y,m), ½(x·n + y·m))`,
/// with `κ_V = κ_g ⊕ κ_i` and `κ_W = κ_U ⊕ κ_i'`.
pub fn build_positive_quadratic(d: &PositiveQuadraticData) -> Result<QuadraticELA> {
    let r = positive_quadratic_hypotheses(d);
    if !r.passed() {
        let ids: Vec<String> = r.failed_axioms().into_iter().collect();
        return Err(invalid(format!("violated hypotheses: {}", ids.join(", "))));
    }
    let dg = d.g.dim();
    let di = d.i_action.dim_m();
    let u = d.u_dim;
    let n = dg + di;
    let algebra = hemisemidirect(&d.g, &d.i_action)?;
    let t = Matrix::zeros(dg, u + di).vstack(&Matrix::zeros(di, u).hstack(&Matrix::identity(di)));
    let half = Rational::half();
    let split = |v: usize| -> (Vec<Rational>, Vec<Rational>) {
        let e = unit_vector(n, v);
        (e[..dg].to_vec(), e[dg..].to_vec())
    };
    let circ = BilinearMap::from_basis_fn(n, n, u + di, |a, b| {
        let (x, m) = split(a);
        let (y, nn) = split(b);
        let mut upart = d.delta_g.apply(&x, &y);
        upart = vec_add(&upart, &d.delta_mix.apply(&x, &nn));
        upart = vec_add(&upart, &d.delta_mix.apply(&y, &m));
        let xn = d.i_action.left_of(&x).mul_vec(&nn);
        let ym = d.i_action.left_of(&y).mul_vec(&m);
        let ipart = vec_scale(&half, &vec_add(&xn, &ym));
        upart.into_iter().chain(ipart).collect()
    });
    let base = ELA::new(algebra, t, circ)?;
    Ok(QuadraticELA {
        base,
        kappa_v: d.kappa_g.direct_sum(&d.kappa_i),
        kappa_w: d.kappa_u.direct_sum(&d.kappa_i_prime),
        positive: true,
    })
}

/// True when `[V, s] ⊆ s`.
pub fn is_left_ideal(l: &LeibnizAlgebra, s: &Subspace) -> bool {
    let n = l.dim();
    s.ambient_dim() == n
        && s.basis_vectors().iter().all(|m| {
            (0..n).all(|a| s.contains_vector(&l.br(&unit_vector(n, a), m)))
        })
}

/// The smallest left ideal containing `vectors`.
pub fn left_ideal_generated(l: &LeibnizAlgebra, vectors: &[Vec<Rational>]) -> Subspace {
    let n = l.dim();
    let mut s = Subspace::span(n, vectors);
    loop {
        let mut new = s.basis_vectors();
        for m in s.basis_vectors() {
            for a in 0..n {
                new.push(l.br(&unit_vector(n, a), &m));
            }
        }
        let next = Subspace::span(n, &new);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

/// `{ v : κ(v, s) = 0 }`; for an invariant `κ` and a left ideal `s` this
/// is again a left ideal.
pub fn orthogonal_left_ideal(l: &LeibnizAlgebra, kappa: &Matrix, s: &Subspace) -> Result<Subspace> {
    if !is_left_ideal(l, s) {
        return Err(invalid("subspace is not a left ideal"));
    }
    Ok(s.orthogonal(kappa))
}

/// `κ(L_x v, w) + κ(v, L_x w) = 0` for all basis `x`.
pub fn is_invariant_form(l: &LeibnizAlgebra, kappa: &Matrix) -> bool {
    (0..l.dim()).all(|x| skew(kappa, &l.left_mult(x)).iter().all(|c| c.is_zero()))
}

fn skew(kappa: &Matrix, a: &Matrix) -> Vec<Rational> {
    kappa
        .mul(a)
        .add(&a.transpose().mul(kappa))
        .to_rows()
        .concat()
}
