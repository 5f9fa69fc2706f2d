// SPDX-License-Identifier: Apache-2.0

//! The adjoint representation of an ELA on `V` and `W`, and the induced
//! action of the Lie algebra `V / im t`.

use crate::error::Result;
use crate::leibniz::{quotient_by, LeibnizAlgebra, LeibnizModule};
use crate::linalg::matrix::unit_vector;
use crate::linalg::{Matrix, Rational, Subspace};
use crate::report::Report;

use super::ELA;

/// `ρ(u) v = [u, v]` on `V` and `ρ(u) w = 2 u∘ˢt(w)` on `W`.
pub fn adjoint_rep(e: &ELA) -> Result<(LeibnizModule, LeibnizModule)> {
    adjoint_rep_with_prefactor(e, &Rational::from_int(2))
}

/// The adjoint representation with `ρ(u) w = c u∘ˢt(w)`. Only `c = 2` gives
/// a representation in general.
pub fn adjoint_rep_with_prefactor(e: &ELA, c: &Rational) -> Result<(LeibnizModule, LeibnizModule)> {
    let n = e.dim_v();
    let m = e.dim_w();
    let on_v = LeibnizModule::adjoint(e.algebra());
    let tcols = e.t().columns();
    let ops: Vec<Matrix> = (0..n)
        .map(|u| {
            let eu = unit_vector(n, u);
            let cols: Vec<_> = tcols
                .iter()
                .map(|tw| e.circ_sym(&eu, tw).into_iter().map(|x| c * x).collect())
                .collect();
            Matrix::from_columns(m, &cols)
        })
        .collect();
    let on_w = LeibnizModule::new(e.algebra().clone(), m, ops, None)?;
    Ok((on_v, on_w))
}

/// The Lie algebra `g = V / im t` with its actions on `V` and `W`.
#[derive(Clone, Debug)]
pub struct QuotientAction {
    pub g: LeibnizAlgebra,
    /// `dim_g x dim_v`.
    pub projection: Matrix,
    /// `dim_v x dim_g`, onto the pivot complement of `im t`.
    pub section: Matrix,
    pub on_v: LeibnizModule,
    pub on_w: LeibnizModule,
    /// Failure ids: `image-acts-on-v`, `image-acts-on-w`, `equivariance`,
    /// and the module ids prefixed by `v-` or `w-`.
    pub report: Report,
}

pub fn quotient_action(e: &ELA) -> Result<QuotientAction> {
    let image = Subspace::column_span(e.t());
    let q = quotient_by(e.algebra(), &image, true)?;
    let (rv, rw) = adjoint_rep(e)?;
    let mut report = Report::new();
    for (w, tw) in e.t().columns().iter().enumerate() {
        report.check("image-acts-on-v", &[w], flat(&rv.left_of(tw)));
        report.check("image-acts-on-w", &[w], flat(&rw.left_of(tw)));
    }
    let n = e.dim_v();
    for u in 0..n {
        // L(u) t = t ρ_W(u)
        let lhs = rv.rho_l()[u].mul(e.t());
        let rhs = e.t().mul(&rw.rho_l()[u]);
        report.check("equivariance", &[u], flat(&lhs.sub(&rhs)));
    }
    let sec = q.section.columns();
    let on_v = LeibnizModule::new(
        q.algebra.clone(),
        n,
        sec.iter().map(|s| rv.left_of(s)).collect(),
        None,
    )?;
    let on_w = LeibnizModule::new(
        q.algebra.clone(),
        e.dim_w(),
        sec.iter().map(|s| rw.left_of(s)).collect(),
        None,
    )?;
    report.extend(on_v.check().prefixed("v-"));
    report.extend(on_w.check().prefixed("w-"));
    Ok(QuotientAction {
        g: q.algebra,
        projection: q.projection,
        section: q.section,
        on_v,
        on_w,
        report,
    })
}

fn flat(m: &Matrix) -> Vec<Rational> {
    m.to_rows().concat()
}
