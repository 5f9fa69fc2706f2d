// SPDX-License-Identifier: Apache-2.0

//! ELAs with invariant symmetric forms on `V` and `W`.

use crate::linalg::{is_positive_definite, Matrix, Rational};
use crate::report::Report;

use super::{adjoint_rep, quotient_action, ELA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticELA {
    pub base: ELA,
    pub kappa_v: Matrix,
    pub kappa_w: Matrix,
    /// Whether both forms are claimed to be positive definite.
    pub positive: bool,
}

/// Checks that every `ρ(u)` is skew for `κ_V` and `κ_W` (on `W` the action
/// is `w ↦ 2u∘ˢt(w)`), that both forms are nondegenerate, positivity when
/// claimed, and that the forms are invariant under the quotient Lie
/// algebra `V / im t`.
///
/// Failure ids: `shape`, `kappa-v-symmetric`, `kappa-w-symmetric`,
/// `kappa-v-invariance`, `kappa-w-invariance`, `kappa-v-nondegenerate`,
/// `kappa-w-nondegenerate`, `kappa-v-positive`, `kappa-w-positive`,
/// `g-invariance-v`, `g-invariance-w`, `g-action`.
pub fn check_quadratic(q: &QuadraticELA) -> Report {
    let mut r = Report::new();
    let e = &q.base;
    let (n, m) = (e.dim_v(), e.dim_w());
    let shape_ok = q.kappa_v.rows() == n
        && q.kappa_v.cols() == n
        && q.kappa_w.rows() == m
        && q.kappa_w.cols() == m;
    if !shape_ok {
        r.push("shape", Vec::new(), Vec::new());
        return r;
    }
    r.require("kappa-v-symmetric", q.kappa_v.is_symmetric());
    r.require("kappa-w-symmetric", q.kappa_w.is_symmetric());
    if !r.passed() {
        return r;
    }
    let (on_v, on_w) = match adjoint_rep(e) {
        Ok(p) => p,
        Err(_) => {
            r.push("shape", Vec::new(), Vec::new());
            return r;
        }
    };
    for u in 0..n {
        r.check("kappa-v-invariance", &[u], skew_residual(&q.kappa_v, &on_v.rho_l()[u]));
        r.check("kappa-w-invariance", &[u], skew_residual(&q.kappa_w, &on_w.rho_l()[u]));
    }
    r.require("kappa-v-nondegenerate", q.kappa_v.rank() == n);
    r.require("kappa-w-nondegenerate", q.kappa_w.rank() == m);
    if q.positive {
        r.require(
            "kappa-v-positive",
            is_positive_definite(&q.kappa_v).unwrap_or(false),
        );
        r.require(
            "kappa-w-positive",
            is_positive_definite(&q.kappa_w).unwrap_or(false),
        );
    }
    match quotient_action(e) {
        Ok(qa) => {
            for x in 0..qa.g.dim() {
                r.check("g-invariance-v", &[x], skew_residual(&q.kappa_v, &qa.on_v.rho_l()[x]));
                r.check("g-invariance-w", &[x], skew_residual(&q.kappa_w, &qa.on_w.rho_l()[x]));
            }
        }
        Err(_) => r.push("g-action", Vec::new(), Vec::new()),
    }
    r
}

// κ A + Aᵀ κ, flattened row by row.
fn skew_residual(kappa: &Matrix, a: &Matrix) -> Vec<Rational> {
    kappa
        .mul(a)
        .add(&a.transpose().mul(kappa))
        .to_rows()
        .concat()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_ela_with_identity_forms_is_positive_quadratic() {
        let q = QuadraticELA {
            base: ELA::zero(2, 3),
            kappa_v: Matrix::identity(2),
            kappa_w: Matrix::identity(3),
            positive: true,
        };
        assert!(check_quadratic(&q).passed());
    }

    #[test]
    fn indefinite_form_fails_positivity_only() {
        let q = QuadraticELA {
            base: ELA::zero(2, 1),
            kappa_v: Matrix::diagonal(&[Rational::one(), Rational::from_int(-1)]),
            kappa_w: Matrix::identity(1),
            positive: true,
        };
        let r = check_quadratic(&q);
        assert_eq!(
            r.failed_axioms().into_iter().collect::<Vec<_>>(),
            vec!["kappa-v-positive".to_string()]
        );
    }
}
