// SPDX-License-Identifier: Apache-2.0

//! The short complex `V* -> S²V* -> V* ⊗ S²V*` with values in a trivial
//! coefficient space `U`, and its degree-2 cohomology.
//!
//! Flat coordinates: a 1-cochain `δ` (a `dim_u x dim_v` matrix) is stored
//! row by row, a 2-cochain `Δ` at `(k * n + i) * n + j`, a 3-cochain at
//! `((k * n + a) * n + b) * n + c`.

use crate::cohomology::Cohomology;
use crate::error::{ensure_dim, invalid, Result};
use crate::leibniz::{check_couple, LeibnizAlgebra};
use crate::linalg::{kernel, BilinearMap, Matrix, Rational, Subspace, TrilinearMap, Vector};

/// A linear map `V -> U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCochain1 {
    /// `dim_u x dim_v`.
    pub delta: Matrix,
}

/// A symmetric bilinear map `V x V -> U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCochain2 {
    delta: BilinearMap,
}

impl DCochain2 {
    pub fn new(delta: BilinearMap) -> Result<Self> {
        if delta.dim_a() != delta.dim_b() {
            return Err(invalid("2-cochain arguments must live in the same space"));
        }
        if !delta.is_symmetric() {
            return Err(invalid("2-cochain is not symmetric"));
        }
        Ok(DCochain2 { delta })
    }

    pub fn zero(dim_v: usize, dim_u: usize) -> Self {
        DCochain2 {
            delta: BilinearMap::zeros(dim_v, dim_v, dim_u),
        }
    }

    pub fn delta(&self) -> &BilinearMap {
        &self.delta
    }

    pub fn into_inner(self) -> BilinearMap {
        self.delta
    }

    pub fn dim_v(&self) -> usize {
        self.delta.dim_a()
    }

    pub fn dim_u(&self) -> usize {
        self.delta.dim_out()
    }
}

/// `dδ(u, v) = ½δ([u,v]) + ½δ([v,u])`.
pub fn d1(l: &LeibnizAlgebra, delta: &DCochain1) -> Result<DCochain2> {
    let n = l.dim();
    ensure_dim(delta.delta.cols() == n, || {
        format!("1-cochain has {} columns, expected {n}", delta.delta.cols())
    })?;
    let sym = l.symmetric_bracket();
    let out = BilinearMap::from_basis_fn(n, n, delta.delta.rows(), |i, j| {
        delta.delta.mul_vec(&sym.basis_value(i, j))
    });
    Ok(DCochain2 { delta: out })
}

/// `dΔ(v0,v1,v2) = Δ([v0,v1],v2) + Δ(v1,[v0,v2]) - Δ(v0,[v1,v2]) - Δ(v0,[v2,v1])`.
pub fn d2(l: &LeibnizAlgebra, delta: &DCochain2) -> Result<TrilinearMap> {
    ensure_dim(delta.dim_v() == l.dim(), || {
        format!("2-cochain lives on dimension {}, expected {}", delta.dim_v(), l.dim())
    })?;
    Ok(d2_raw(l, &delta.delta))
}

/// The same four-term formula on an arbitrary bilinear map.
pub(crate) fn d2_raw(l: &LeibnizAlgebra, delta: &BilinearMap) -> TrilinearMap {
    let n = l.dim();
    let e = |i: usize| crate::linalg::matrix::unit_vector(n, i);
    TrilinearMap::from_basis_fn(n, n, n, delta.dim_out(), |a, b, c| {
        let mut out = delta.apply(&l.br_basis(a, b), &e(c));
        let t2 = delta.apply(&e(b), &l.br_basis(a, c));
        let t3 = delta.apply(&e(a), &l.br_basis(b, c));
        let t4 = delta.apply(&e(a), &l.br_basis(c, b));
        for k in 0..out.len() {
            out[k] = &out[k] + &t2[k] - &t3[k] - &t4[k];
        }
        out
    })
}

/// Matrix of `d1` from flat 1-cochains to flat 2-cochains.
pub fn d1_matrix(l: &LeibnizAlgebra, dim_u: usize) -> Matrix {
    let n = l.dim();
    let sym = l.symmetric_bracket();
    let mut m = Matrix::zeros(dim_u * n * n, dim_u * n);
    for k in 0..dim_u {
        for i in 0..n {
            for j in 0..n {
                for (a, x) in sym.basis_value(i, j).into_iter().enumerate() {
                    m[((k * n + i) * n + j, k * n + a)] = x;
                }
            }
        }
    }
    m
}

/// Matrix of the four-term `d` from flat 2-cochains (not necessarily
/// symmetric) to flat 3-cochains.
pub fn d2_matrix(l: &LeibnizAlgebra, dim_u: usize) -> Matrix {
    let n = l.dim();
    let mut m = Matrix::zeros(dim_u * n * n * n, dim_u * n * n);
    let idx2 = |k: usize, p: usize, q: usize| (k * n + p) * n + q;
    for k in 0..dim_u {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let row = ((k * n + a) * n + b) * n + c;
                    let ab = l.br_basis(a, b);
                    let ac = l.br_basis(a, c);
                    let bc = l.br_basis(b, c);
                    let cb = l.br_basis(c, b);
                    for p in 0..n {
                        if !ab[p].is_zero() {
                            m[(row, idx2(k, p, c))] += &ab[p];
                        }
                        if !ac[p].is_zero() {
                            m[(row, idx2(k, b, p))] += &ac[p];
                        }
                        let s = &bc[p] + &cb[p];
                        if !s.is_zero() {
                            m[(row, idx2(k, a, p))] -= &s;
                        }
                    }
                }
            }
        }
    }
    m
}

/// Rows expressing `Δ(e_i, e_j) = Δ(e_j, e_i)`.
#[cfg(test)]
fn symmetry_constraints(n: usize, dim_u: usize) -> Matrix {
    let cols = dim_u * n * n;
    let mut rows = Vec::new();
    for k in 0..dim_u {
        for i in 0..n {
            for j in i + 1..n {
                let mut r = vec![Rational::zero(); cols];
                r[(k * n + i) * n + j] = Rational::one();
                r[(k * n + j) * n + i] = Rational::from_int(-1);
                rows.push(r);
            }
        }
    }
    Matrix::from_rows(cols, rows)
}

/// Rows expressing `Δ(b_s, b_t) = 0` for basis vectors of `i`.
fn restriction_constraints(i: &Subspace, dim_u: usize) -> Matrix {
    let n = i.ambient_dim();
    let cols = dim_u * n * n;
    let basis = i.basis_vectors();
    let mut rows = Vec::new();
    for k in 0..dim_u {
        for s in 0..basis.len() {
            for t in s..basis.len() {
                let mut r = vec![Rational::zero(); cols];
                for p in 0..n {
                    for q in 0..n {
                        r[(k * n + p) * n + q] = &basis[s][p] * &basis[t][q];
                    }
                }
                rows.push(r);
            }
        }
    }
    Matrix::from_rows(cols, rows)
}

/// Degree-2 cohomology of the complex with cochains as bilinear maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCohomology {
    pub dimension: usize,
    pub cocycles: Vec<BilinearMap>,
    pub coboundaries: Vec<BilinearMap>,
    /// Cocycles whose classes form a basis of the quotient.
    pub representatives: Vec<BilinearMap>,
    /// The same data in flat coordinates.
    pub flat: Cohomology,
}

impl DCohomology {
    fn from_flat(flat: Cohomology, n: usize, dim_u: usize) -> Self {
        let conv = |vs: Vec<Vector>| vs.iter().map(|v| bilinear_from_flat(n, dim_u, v)).collect();
        DCohomology {
            dimension: flat.dimension,
            cocycles: conv(flat.cocycles.basis_vectors()),
            coboundaries: conv(flat.coboundaries.basis_vectors()),
            representatives: conv(flat.representatives.clone()),
            flat,
        }
    }

    /// True when `delta` is a cocycle that is a coboundary.
    pub fn is_trivial_class(&self, delta: &BilinearMap) -> bool {
        self.flat.is_trivial_class(&flatten_bilinear(delta))
    }

    pub fn is_cocycle(&self, delta: &BilinearMap) -> bool {
        self.flat.cocycles.contains_vector(&flatten_bilinear(delta))
    }
}

/// Cohomology with the constraint `Δ|_{S²i} = 0` on cocycles. Coboundaries
/// are all of `d1(Hom(V, U))`.
pub fn d_cohomology(l: &LeibnizAlgebra, i: &Subspace, dim_u: usize) -> Result<DCohomology> {
    let couple = check_couple(l, i);
    if let Some(f) = couple.failures.first() {
        return Err(invalid(format!(
            "not a Leibniz couple: {} fails at {:?}",
            f.axiom, f.witness
        )));
    }
    let n = l.dim();
    let one = symmetric_kernel(&d2_matrix(l, 1).vstack(&restriction_constraints(i, 1)), n);
    let flat = Cohomology::from_subspaces(
        spread(&one, dim_u),
        Subspace::column_span(&d1_matrix(l, dim_u)),
    )?;
    Ok(DCohomology::from_flat(flat, n, dim_u))
}

/// Kernel of `m` on symmetric flat forms `Q^{n×n} -> Q`, solved in the
/// `n(n+1)/2` upper-triangular coordinates.
fn symmetric_kernel(m: &Matrix, n: usize) -> Subspace {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let embed = Matrix::from_fn(n * n, pairs.len(), |r, c| {
        let (i, j) = pairs[c];
        if r == i * n + j || r == j * n + i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    kernel(&m.mul(&embed)).image_under(&embed)
}

/// `⊕_k e_k ⊗ s` inside `Q^{dim_u} ⊗ Q^{n×n}`.
fn spread(s: &Subspace, dim_u: usize) -> Subspace {
    let d = s.ambient_dim();
    let mut vs = Vec::new();
    for k in 0..dim_u {
        for b in s.basis_vectors() {
            let mut v = vec![Rational::zero(); dim_u * d];
            v[k * d..(k + 1) * d].clone_from_slice(&b);
            vs.push(v);
        }
    }
    Subspace::span(dim_u * d, &vs)
}

/// Cohomology of the complex itself, without the restriction constraint.
pub fn d_cohomology_unconstrained(l: &LeibnizAlgebra, dim_u: usize) -> Result<DCohomology> {
    let n = l.dim();
    let one = symmetric_kernel(&d2_matrix(l, 1), n);
    let flat = Cohomology::from_subspaces(
        spread(&one, dim_u),
        Subspace::column_span(&d1_matrix(l, dim_u)),
    )?;
    Ok(DCohomology::from_flat(flat, n, dim_u))
}

pub fn flatten_bilinear(b: &BilinearMap) -> Vector {
    b.unfold().to_rows().concat()
}

pub fn bilinear_from_flat(n: usize, dim_u: usize, v: &[Rational]) -> BilinearMap {
    let nn = n * n;
    let m = Matrix::from_fn(dim_u, nn, |k, c| v[k * nn + c].clone());
    BilinearMap::fold(n, n, &m)
}

pub fn flatten_trilinear(t: &TrilinearMap) -> Vector {
    let [a, b, c] = t.dims();
    let mut out = Vec::with_capacity(t.dim_out() * a * b * c);
    for k in 0..t.dim_out() {
        for i in 0..a {
            for j in 0..b {
                for l in 0..c {
                    out.push(t.get(k, i, j, l).clone());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_couple, rng};

    #[test]
    fn componentwise_solve_matches_the_full_system() {
        let mut r = rng(11);
        for _ in 0..6 {
            let (l, i) = random_couple(&mut r, 3, 2);
            let n = l.dim();
            for u in 1..=2 {
                let extra = symmetry_constraints(n, u).vstack(&restriction_constraints(&i, u));
                let full = Cohomology::from_maps(&d1_matrix(&l, u), &d2_matrix(&l, u), Some(&extra)).unwrap();
                assert_eq!(d_cohomology(&l, &i, u).unwrap().flat, full);
            }
        }
    }
}
