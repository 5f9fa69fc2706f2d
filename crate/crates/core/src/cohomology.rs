// SPDX-License-Identifier: Apache-2.0

//! Degree-wise cohomology of a cochain complex given by explicit matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Subspace, Vector};

/// Cocycles, coboundaries and a quotient basis in the coordinates of the
/// middle cochain space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cohomology {
    pub dimension: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Cocycle basis vectors that complete the coboundary basis; their
    /// classes form a basis of the quotient.
    pub representatives: Vec<Vector>,
}

impl Cohomology {
    /// Cohomology at the middle of `C0 --d_in--> C1 --d_out--> C2`, where the
    /// cocycle condition is `d_out x = 0` and `extra x = 0`.
    pub fn from_maps(d_in: &Matrix, d_out: &Matrix, extra: Option<&Matrix>) -> Result<Self> {
        let n = d_out.cols();
        if d_in.rows() != n {
            return Err(Error::Dimension(format!(
                "incoming map lands in dimension {} but cocycles live in dimension {n}",
                d_in.rows()
            )));
        }
        let stacked = match extra {
            Some(e) => d_out.vstack(e),
            None => d_out.clone(),
        };
        Self::from_subspaces(kernel(&stacked), Subspace::column_span(d_in))
    }

    /// Cohomology from precomputed cocycle and coboundary spaces.
    pub fn from_subspaces(cocycles: Subspace, coboundaries: Subspace) -> Result<Self> {
        if !cocycles.contains(&coboundaries) {
            return Err(Error::Internal(
                "coboundaries are not cocycles; the differential does not square to zero".into(),
            ));
        }
        let representatives = complete_basis(&coboundaries, &cocycles);
        Ok(Cohomology {
            dimension: cocycles.dim() - coboundaries.dim(),
            cocycles,
            coboundaries,
            representatives,
        })
    }

    /// True when `v` is a cocycle cohomologous to zero.
    pub fn is_trivial_class(&self, v: &[crate::linalg::Rational]) -> bool {
        self.coboundaries.contains_vector(v)
    }
}

/// Basis vectors of `outer` that, added greedily in canonical order, extend
/// a basis of `inner` to one of `outer`.
pub fn complete_basis(inner: &Subspace, outer: &Subspace) -> Vec<Vector> {
    let mut current = inner.clone();
    let mut picked = Vec::new();
    for v in outer.basis_vectors() {
        if !current.contains_vector(&v) {
            current = current.sum(&Subspace::span(outer.ambient_dim(), &[v.clone()]));
            picked.push(v);
        }
    }
    picked
}
