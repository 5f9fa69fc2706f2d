// SPDX-License-Identifier: Apache-2.0

//! Subspaces of a coordinate space in a canonical basis, plus the
//! kernel/image, solver, splitting and positivity primitives built on
//! row reduction.

use serde::{Deserialize, Serialize};

use super::matrix::{is_zero_vector, unit_vector, vec_sub, zero_vector, Matrix, Vector};
use super::rational::Rational;
use crate::error::{dim_err, Result};

/// A subspace of `Q^ambient_dim`.
///
/// The basis is stored as the columns of an `ambient_dim x k` matrix whose
/// transpose is in reduced row echelon form, so equal subspaces have equal
/// records.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors, which may be dependent.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector outside the ambient space");
        }
        let rows = Matrix::from_rows(ambient_dim, vectors.to_vec());
        let r = rows.rref();
        let k = r.pivots.len();
        let basis = Matrix::from_fn(ambient_dim, k, |i, j| r.matrix[(j, i)].clone());
        Subspace {
            ambient_dim,
            basis,
            pivots: r.pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn column_span(m: &Matrix) -> Self {
        Subspace::span(m.rows(), &m.columns())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis as the columns of an `ambient_dim x dim` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    /// Pivot index of each basis vector, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim);
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.basis.mul_vec(&c) == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && other.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve A x = B y, i.e. [A | -B] (x, y) = 0, and map x through A.
        let a = &self.basis;
        let b = other.basis.scale(&Rational::from_int(-1));
        let (ker, _) = kernel_image(&a.hstack(&b));
        let vs: Vec<Vector> = ker
            .basis_vectors()
            .iter()
            .map(|xy| a.mul_vec(&xy[..self.dim()]))
            .collect();
        Subspace::span(self.ambient_dim, &vs)
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::column_span(&m.mul(&self.basis))
    }

    /// Orthogonal complement with respect to a symmetric bilinear form.
    pub fn orthogonal(&self, form: &Matrix) -> Subspace {
        assert_eq!(form.rows(), self.ambient_dim);
        // y is orthogonal iff (B^T G) y = 0.
        let (ker, _) = kernel_image(&self.basis.transpose().mul(form));
        ker
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ambient_dim: usize,
            basis: Matrix,
        }
        let raw = Raw::deserialize(deserializer)?;
        let basis = if raw.basis.rows() == 0 {
            Matrix::zeros(raw.ambient_dim, 0)
        } else {
            raw.basis
        };
        if basis.rows() != raw.ambient_dim {
            return Err(serde::de::Error::custom(format!(
                "basis has {} rows but ambient_dim is {}",
                basis.rows(),
                raw.ambient_dim
            )));
        }
        Ok(Subspace::column_span(&basis))
    }
}

/// `(ker m, im m)` in canonical form.
pub fn kernel_image(m: &Matrix) -> (Subspace, Subspace) {
    (kernel(m), Subspace::column_span(m))
}

pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let r = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut ker = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(n);
        v[f] = Rational::one();
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = -&r.matrix[(row, f)];
        }
        ker.push(v);
    }
    Subspace::span(n, &ker)
}

/// Solves `a x = b`. Returns `Ok(None)` when `b` is not in the image of `a`,
/// otherwise a particular solution and the kernel of `a`.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<(Vector, Subspace)>> {
    if a.rows() != b.len() {
        return Err(dim_err(format!(
            "system has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let aug = a.hstack(&Matrix::from_columns(b.len(), &[b.to_vec()]));
    let r = aug.rref();
    if r.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vector(n);
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix[(row, n)].clone();
    }
    Ok(Some((x, kernel(a))))
}

/// A direct-sum decomposition `ambient = s ⊕ complement`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub complement: Subspace,
    /// `ambient x ambient` projection onto `s` along the complement.
    pub projection: Matrix,
    /// `ambient x dim s`: s-coordinates to ambient vectors (the canonical basis).
    pub section: Matrix,
    /// `dim s x ambient`: ambient vectors to s-coordinates of their
    /// projection. `section * coordinates = projection`.
    pub coordinates: Matrix,
}

/// Deterministic splitting: the complement is spanned by the standard
/// basis vectors at the non-pivot indices of `s`.
pub fn splitting(s: &Subspace) -> Splitting {
    let n = s.ambient_dim();
    let pivots = s.pivots();
    let free: Vec<Vector> = (0..n)
        .filter(|i| !pivots.contains(i))
        .map(|i| unit_vector(n, i))
        .collect();
    let complement = Subspace::span(n, &free);
    let coordinates = Matrix::from_fn(s.dim(), n, |k, j| {
        if pivots[k] == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let section = s.basis().clone();
    let projection = section.mul(&coordinates);
    Splitting {
        complement,
        projection,
        section,
        coordinates,
    }
}

/// Exact positive-definiteness test by symmetric elimination.
pub fn is_positive_definite(g: &Matrix) -> Result<bool> {
    if !g.is_square() {
        return Err(dim_err(format!("{}x{} form is not square", g.rows(), g.cols())));
    }
    if !g.is_symmetric() {
        return Err(crate::error::invalid("bilinear form is not symmetric"));
    }
    let n = g.rows();
    let mut a = g.clone();
    for k in 0..n {
        let d = a[(k, k)].clone();
        if !d.is_positive() {
            return Ok(false);
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &d;
            for j in k..n {
                let x = &f * &a[(k, j)];
                a[(i, j)] -= x;
            }
        }
    }
    Ok(true)
}

/// Checks that `m` maps `s` into `t`.
pub fn maps_into(m: &Matrix, s: &Subspace, t: &Subspace) -> bool {
    s.image_under(m).ambient_dim() == t.ambient_dim() && t.contains(&s.image_under(m))
}

/// `v - w` is in `s`.
pub fn congruent_mod(v: &[Rational], w: &[Rational], s: &Subspace) -> bool {
    let d = vec_sub(v, w);
    is_zero_vector(&d) || s.contains_vector(&d)
}
