// SPDX-License-Identifier: Apache-2.0

//! From ELAs to 2-term L-infinity algebras, on objects and on morphisms.

use crate::ela::{beta_transform, check_ela, check_morphism, BetaTwist, ElaMorphism, ELA};
use crate::error::{invalid, Result};
use crate::linalg::matrix::{unit_vector, vec_add, vec_sub};
use crate::linalg::{BilinearMap, Matrix, TrilinearMap};
use crate::report::Report;

use super::{lie2_beta_transform, Lie2Algebra};

/// The induced structure on the same complex:
/// `{v1,v2} = [v1,v2] - t(v1∘v2)`, `v ∗ w = t(w)∘v` and
///
/// `l3(v1,v2,v3) = -v1∘[v2,v3] + [v1,v2]∘v3 + v2∘[v1,v3]
///     - t(v2∘v3)∘v1 - t(v1∘v2)∘v3 + t(v1∘v3)∘v2`.
///
/// Rejects inputs failing the ELA axioms.
pub fn functor_objects(e: &ELA) -> Result<Lie2Algebra> {
    let r = check_ela(e, false);
    if let Some(f) = r.failures.first() {
        return Err(invalid(format!(
            "not an ELA: axiom {} fails at basis tuple {:?}",
            f.axiom, f.witness
        )));
    }
    Ok(induced_lie2(e))
}

/// The formulas of [`functor_objects`] applied without checking the
/// source.
pub fn induced_lie2(e: &ELA) -> Lie2Algebra {
    let n = e.dim_v();
    let m = e.dim_w();
    let t = e.t();
    let l2_vv = e.bracket().sub(&e.circ().map_output(t));
    let l2_vw = BilinearMap::from_basis_fn(n, m, m, |v, w| {
        e.circ_apply(&t.column(w), &unit_vector(n, v))
    });
    let ev = |i: usize| unit_vector(n, i);
    let br = |i: usize, j: usize| e.algebra().br_basis(i, j);
    let tc = |i: usize, j: usize| e.apply_t(&e.circ().basis_value(i, j));
    let l3 = TrilinearMap::from_basis_fn(n, n, n, m, |a, b, c| {
        let mut s = vec_sub(&e.circ_apply(&br(a, b), &ev(c)), &e.circ_apply(&ev(a), &br(b, c)));
        s = vec_add(&s, &e.circ_apply(&ev(b), &br(a, c)));
        s = vec_sub(&s, &e.circ_apply(&tc(b, c), &ev(a)));
        s = vec_sub(&s, &e.circ_apply(&tc(a, b), &ev(c)));
        vec_add(&s, &e.circ_apply(&tc(a, c), &ev(b)))
    });
    Lie2Algebra {
        t: t.clone(),
        l2_vv,
        l2_vw,
        l3,
    }
}

/// Compares the image of the twisted ELA with the transformed image.
///
/// Failure ids: `t`, `l2vv`, `l2vw`, `l3`.
pub fn functor_naturality_check(e: &ELA, b: &BetaTwist) -> Result<Report> {
    let lhs = functor_objects(&beta_transform(e, b)?)?;
    let rhs = lie2_beta_transform(&functor_objects(e)?, b)?;
    Ok(compare(&lhs, &rhs))
}

/// A plain Lie-2 morphism `(φ, ψ)` followed by a twist of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Morphism {
    pub phi: Matrix,
    pub psi: Matrix,
    pub post_beta: BetaTwist,
}

/// Carries the plain part of `m` verbatim and its twist to
/// [`lie2_beta_transform`]. The report checks that `(φ, ψ)` is a strict
/// morphism from the image of `src` to the image of the untwisted target
/// (ids `square`, `bracket`, `action`, `anomaly`) and that twisting that
/// image gives the image of `dst` (ids `twist-*`).
pub fn functor_morphism(src: &ELA, dst: &ELA, m: &ElaMorphism) -> Result<(Lie2Morphism, Report)> {
    let r = check_morphism(src, dst, m);
    if let Some(f) = r.failures.first() {
        return Err(invalid(format!(
            "not a morphism: {} fails at {:?}",
            f.axiom, f.witness
        )));
    }
    let a = functor_objects(src)?;
    let plain_dst = beta_transform(dst, &m.post_beta.neg())?;
    let b = functor_objects(&plain_dst)?;
    let c = functor_objects(dst)?;
    let mut r = plain_lie2_morphism_report(&a, &b, &m.phi, &m.psi);
    let twisted = lie2_beta_transform(&b, &m.post_beta)?;
    r.extend(compare(&twisted, &c).prefixed("twist-"));
    let out = Lie2Morphism {
        phi: m.phi.clone(),
        psi: m.psi.clone(),
        post_beta: m.post_beta.clone(),
    };
    Ok((out, r))
}

fn plain_lie2_morphism_report(a: &Lie2Algebra, b: &Lie2Algebra, phi: &Matrix, psi: &Matrix) -> Report {
    let mut r = Report::new();
    let n = a.dim_v();
    let m = a.dim_w();
    let sq = b.t.mul(phi).sub(&psi.mul(&a.t));
    for w in 0..m {
        r.check("square", &[w], sq.column(w));
    }
    let pc = psi.columns();
    for x in 0..n {
        for y in 0..n {
            let lhs = psi.mul_vec(&a.l2_vv.basis_value(x, y));
            r.check("bracket", &[x, y], vec_sub(&lhs, &b.bracket(&pc[x], &pc[y])));
        }
        for w in 0..m {
            let lhs = phi.mul_vec(&a.l2_vw.basis_value(x, w));
            let rhs = b.act(&pc[x], &phi.column(w));
            r.check("action", &[x, w], vec_sub(&lhs, &rhs));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = phi.mul_vec(&a.l3.basis_value(x, y, z));
                let rhs = b.anomaly(&pc[x], &pc[y], &pc[z]);
                r.check("anomaly", &[x, y, z], vec_sub(&lhs, &rhs));
            }
        }
    }
    r
}

/// Component-wise difference of two structures on the same dimensions.
pub(crate) fn compare(a: &Lie2Algebra, b: &Lie2Algebra) -> Report {
    let mut r = Report::new();
    if a.dim_v() != b.dim_v() || a.dim_w() != b.dim_w() {
        r.push("shape", Vec::new(), Vec::new());
        return r;
    }
    let n = a.dim_v();
    let m = a.dim_w();
    let dt = a.t.sub(&b.t);
    for w in 0..m {
        r.check("t", &[w], dt.column(w));
    }
    for x in 0..n {
        for y in 0..n {
            r.check("l2vv", &[x, y], vec_sub(&a.l2_vv.basis_value(x, y), &b.l2_vv.basis_value(x, y)));
            for z in 0..n {
                r.check(
                    "l3",
                    &[x, y, z],
                    vec_sub(&a.l3.basis_value(x, y, z), &b.l3.basis_value(x, y, z)),
                );
            }
        }
        for w in 0..m {
            r.check("l2vw", &[x, w], vec_sub(&a.l2_vw.basis_value(x, w), &b.l2_vw.basis_value(x, w)));
        }
    }
    r
}
