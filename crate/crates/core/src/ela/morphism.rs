// SPDX-License-Identifier: Apache-2.0

//! Morphisms in normal form: a plain morphism followed by a twist on the
//! target.

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::matrix::vec_sub;
use crate::linalg::{solve, splitting, BilinearMap, Matrix, Subspace};
use crate::report::Report;

use super::{beta_transform, BetaTwist, ELA};

/// `(φ, ψ)` followed by the twist `post_beta` of the target. As a map of
/// ELAs it goes from the source to `dst`, through the plain target
/// `beta_transform(dst, -post_beta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElaMorphism {
    /// `dim_w' x dim_w`.
    pub phi: Matrix,
    /// `dim_v' x dim_v`.
    pub psi: Matrix,
    pub post_beta: BetaTwist,
}

impl ElaMorphism {
    pub fn plain(phi: Matrix, psi: Matrix) -> Self {
        let post_beta = BetaTwist::zero(psi.rows(), phi.rows());
        ElaMorphism {
            phi,
            psi,
            post_beta,
        }
    }

    pub fn identity(e: &ELA) -> Self {
        ElaMorphism::plain(Matrix::identity(e.dim_w()), Matrix::identity(e.dim_v()))
    }

    /// The twist `e -> beta_transform(e, b)` as a morphism.
    pub fn twist(e: &ELA, b: BetaTwist) -> Self {
        ElaMorphism {
            phi: Matrix::identity(e.dim_w()),
            psi: Matrix::identity(e.dim_v()),
            post_beta: b,
        }
    }

    pub fn is_plain(&self) -> bool {
        self.post_beta.is_zero()
    }
}

/// Checks the commuting square, that `ψ` preserves brackets, and
/// `φ(v1∘v2) = ψv1 ∘'' ψv2` where `∘''` is the target product with the
/// post-twist removed.
///
/// Failure ids: `shape`, `square`, `bracket`, `circ`.
pub fn check_morphism(src: &ELA, dst: &ELA, m: &ElaMorphism) -> Report {
    let mut r = Report::new();
    let shapes_ok = m.phi.rows() == dst.dim_w()
        && m.phi.cols() == src.dim_w()
        && m.psi.rows() == dst.dim_v()
        && m.psi.cols() == src.dim_v()
        && m.post_beta.dim_v() == dst.dim_v()
        && m.post_beta.dim_w() == dst.dim_w();
    if !shapes_ok {
        r.push("shape", Vec::new(), Vec::new());
        return r;
    }
    let Ok(plain_dst) = beta_transform(dst, &m.post_beta.neg()) else {
        r.push("shape", Vec::new(), Vec::new());
        return r;
    };
    let n = src.dim_v();
    let sq = dst.t().mul(&m.phi).sub(&m.psi.mul(src.t()));
    for w in 0..src.dim_w() {
        r.check("square", &[w], sq.column(w));
    }
    let psi_cols = m.psi.columns();
    for i in 0..n {
        for j in 0..n {
            let lhs = m.psi.mul_vec(&src.algebra().br_basis(i, j));
            let rhs = dst.br(&psi_cols[i], &psi_cols[j]);
            r.check("bracket", &[i, j], vec_sub(&lhs, &rhs));
            let lhs = m.phi.mul_vec(&src.circ().basis_value(i, j));
            let rhs = plain_dst.circ_apply(&psi_cols[i], &psi_cols[j]);
            r.check("circ", &[i, j], vec_sub(&lhs, &rhs));
        }
    }
    r
}

/// Normal form of `g ∘ f` for `f: A -> B`, `g: B -> C`.
///
/// The plain parts compose. The twist of `f` is moved past `g`'s plain
/// part: it becomes a twist `β'` on `C` with
/// `β'(K a1, K a2) = φ_g β_f(ψ_f a1, ψ_f a2)`, `K = ψ_g ψ_f`, defined on
/// the image of `K` and extended by zero on the pivot complement. When no
/// such `β'` exists the composite has no normal form and an error is
/// returned.
pub fn compose_morphisms(f: &ElaMorphism, g: &ElaMorphism) -> Result<ElaMorphism> {
    ensure_dim(
        g.phi.cols() == f.phi.rows() && g.psi.cols() == f.psi.rows(),
        || "target of the first morphism is not the source of the second".into(),
    )?;
    let phi = g.phi.mul(&f.phi);
    let k = g.psi.mul(&f.psi);
    let dim_wc = g.phi.rows();
    let dim_va = f.psi.cols();
    if f.post_beta.is_zero() {
        return Ok(ElaMorphism {
            phi,
            psi: k,
            post_beta: g.post_beta.clone(),
        });
    }
    // Transported twist on A: (a1, a2) ↦ φ_g β_f(ψ_f a1, ψ_f a2).
    let pulled = f
        .post_beta
        .beta()
        .pullback(&f.psi, &f.psi)
        .map_output(&g.phi);
    let image = Subspace::column_span(&k);
    let sp = splitting(&image);
    let img_basis = image.basis_vectors();
    let mut pre = Vec::with_capacity(img_basis.len());
    for b in &img_basis {
        let (x, _) = solve(&k, b)?.ok_or_else(|| Error::Internal("image vector without preimage".into()))?;
        pre.push(x);
    }
    let r = image.dim();
    let on_image = BilinearMap::from_basis_fn(r, r, dim_wc, |a, b| pulled.apply(&pre[a], &pre[b]));
    let transported = on_image.pullback(&sp.coordinates, &sp.coordinates);
    let k_cols = k.columns();
    for i in 0..dim_va {
        for j in 0..dim_va {
            if transported.apply(&k_cols[i], &k_cols[j]) != pulled.basis_value(i, j) {
                return Err(Error::NotRepresentable(format!(
                    "the first twist does not factor through the second map (basis pair {i}, {j})"
                )));
            }
        }
    }
    let post_beta = g.post_beta.add(&BetaTwist::new(transported)?);
    Ok(ElaMorphism {
        phi,
        psi: k,
        post_beta,
    })
}
