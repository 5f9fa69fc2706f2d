// SPDX-License-Identifier: Apache-2.0

//! Leibniz modules, Loday cochains and the Loday coboundary.

use crate::cohomology::Cohomology;
use crate::error::{ensure_dim, invalid, Result};
use crate::linalg::matrix::{vec_axpy, zero_vector};
use crate::linalg::{Matrix, Rational, Subspace, Vector};
use crate::report::Report;

use super::LeibnizAlgebra;

/// A representation of a Leibniz algebra by left operators and, optionally,
/// right operators. A missing right action means the antisymmetric module
/// with `ρ_r = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizModule {
    algebra: LeibnizAlgebra,
    dim_m: usize,
    rho_l: Vec<Matrix>,
    rho_r: Option<Vec<Matrix>>,
}

fn flatten(m: &Matrix) -> Vector {
    m.to_rows().concat()
}

impl LeibnizModule {
    pub fn new(
        algebra: LeibnizAlgebra,
        dim_m: usize,
        rho_l: Vec<Matrix>,
        rho_r: Option<Vec<Matrix>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let shape_ok = |ops: &[Matrix]| {
            ops.len() == n && ops.iter().all(|m| m.rows() == dim_m && m.cols() == dim_m)
        };
        ensure_dim(shape_ok(&rho_l), || {
            format!("left action needs {n} operators of size {dim_m}x{dim_m}")
        })?;
        if let Some(r) = &rho_r {
            ensure_dim(shape_ok(r), || {
                format!("right action needs {n} operators of size {dim_m}x{dim_m}")
            })?;
        }
        Ok(LeibnizModule {
            algebra,
            dim_m,
            rho_l,
            rho_r,
        })
    }

    /// Zero action on `Q^dim_m`.
    pub fn trivial(algebra: &LeibnizAlgebra, dim_m: usize) -> Self {
        LeibnizModule {
            algebra: algebra.clone(),
            dim_m,
            rho_l: vec![Matrix::zeros(dim_m, dim_m); algebra.dim()],
            rho_r: None,
        }
    }

    /// The algebra acting on itself from the left, with zero right action.
    pub fn adjoint(algebra: &LeibnizAlgebra) -> Self {
        let n = algebra.dim();
        LeibnizModule {
            algebra: algebra.clone(),
            dim_m: n,
            rho_l: (0..n).map(|i| algebra.left_mult(i)).collect(),
            rho_r: None,
        }
    }

    /// The algebra acting on itself by left and right multiplication:
    /// `ρ_l(x) m = [x, m]`, `ρ_r(y) m = [m, y]`.
    pub fn bi_adjoint(algebra: &LeibnizAlgebra) -> Self {
        let n = algebra.dim();
        LeibnizModule {
            algebra: algebra.clone(),
            dim_m: n,
            rho_l: (0..n).map(|i| algebra.left_mult(i)).collect(),
            rho_r: Some((0..n).map(|j| algebra.right_mult(j)).collect()),
        }
    }

    /// Left multiplication restricted to an invariant subspace, in the
    /// canonical coordinates of that subspace.
    pub fn restricted_adjoint(algebra: &LeibnizAlgebra, s: &Subspace) -> Result<Self> {
        let basis = s.basis_vectors();
        let mut rho_l = Vec::with_capacity(algebra.dim());
        for i in 0..algebra.dim() {
            let l = algebra.left_mult(i);
            let mut cols = Vec::with_capacity(basis.len());
            for b in &basis {
                let v = l.mul_vec(b);
                cols.push(
                    s.coordinates(&v)
                        .ok_or_else(|| invalid("subspace is not invariant under left multiplication"))?,
                );
            }
            rho_l.push(Matrix::from_columns(s.dim(), &cols));
        }
        LeibnizModule::new(algebra.clone(), s.dim(), rho_l, None)
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn rho_l(&self) -> &[Matrix] {
        &self.rho_l
    }

    pub fn rho_r(&self) -> Option<&[Matrix]> {
        self.rho_r.as_deref()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rho_r
            .as_ref()
            .map_or(true, |r| r.iter().all(Matrix::is_zero))
    }

    pub fn left_of(&self, x: &[Rational]) -> Matrix {
        combine(&self.rho_l, x, self.dim_m)
    }

    pub fn right_of(&self, x: &[Rational]) -> Matrix {
        match &self.rho_r {
            Some(r) => combine(r, x, self.dim_m),
            None => Matrix::zeros(self.dim_m, self.dim_m),
        }
    }

    /// Checks (LLM) and, when a right action is present, (LML) and (MLL) on
    /// all basis pairs.
    pub fn check(&self) -> Report {
        let mut r = Report::new();
        let n = self.algebra.dim();
        for x in 0..n {
            for y in 0..n {
                let xy = self.algebra.br_basis(x, y);
                let (lx, ly) = (&self.rho_l[x], &self.rho_l[y]);
                let llm = lx.mul(ly).sub(&self.left_of(&xy)).sub(&ly.mul(lx));
                r.check("LLM", &[x, y], flatten(&llm));
                if let Some(rr) = &self.rho_r {
                    let (ry, rx) = (&rr[y], &rr[x]);
                    let rxy = self.right_of(&xy);
                    let lml = lx.mul(ry).sub(&ry.mul(lx)).sub(&rxy);
                    r.check("LML", &[x, y], flatten(&lml));
                    let mll = rxy.sub(&ry.mul(rx)).sub(&lx.mul(ry));
                    r.check("MLL", &[x, y], flatten(&mll));
                }
            }
        }
        r
    }
}

fn combine(ops: &[Matrix], x: &[Rational], d: usize) -> Matrix {
    let mut out = Matrix::zeros(d, d);
    for (op, c) in ops.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&op.scale(c));
        }
    }
    out
}

/// A multilinear map `h^p -> M`, stored as a `dim_m x dim^p` matrix whose
/// column for the basis tuple `(i_1, ..., i_p)` has index
/// `i_1 dim^(p-1) + ... + i_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LodayCochain {
    arity: usize,
    dim: usize,
    dim_m: usize,
    values: Matrix,
}

impl LodayCochain {
    pub fn new(arity: usize, dim: usize, values: Matrix) -> Result<Self> {
        let cols = dim.pow(arity as u32);
        ensure_dim(values.cols() == cols, || {
            format!("arity-{arity} cochain on dimension {dim} needs {cols} columns, got {}", values.cols())
        })?;
        Ok(LodayCochain {
            arity,
            dim,
            dim_m: values.rows(),
            values,
        })
    }

    pub fn zero(arity: usize, dim: usize, dim_m: usize) -> Self {
        LodayCochain {
            arity,
            dim,
            dim_m,
            values: Matrix::zeros(dim_m, dim.pow(arity as u32)),
        }
    }

    /// Builds a 2-cochain from a bilinear map `h x h -> M`.
    pub fn from_bilinear(b: &crate::linalg::BilinearMap) -> Self {
        let (n, _, m) = b.dims();
        LodayCochain {
            arity: 2,
            dim: n,
            dim_m: m,
            values: b.unfold(),
        }
    }

    pub fn to_bilinear(&self) -> crate::linalg::BilinearMap {
        assert_eq!(self.arity, 2);
        crate::linalg::BilinearMap::fold(self.dim, self.dim, &self.values)
    }

    /// Builds a 1-cochain from a linear map `h -> M`.
    pub fn from_linear(m: &Matrix) -> Self {
        LodayCochain {
            arity: 1,
            dim: m.cols(),
            dim_m: m.rows(),
            values: m.clone(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    fn column_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.arity);
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn basis_value(&self, idx: &[usize]) -> Vector {
        self.values.column(self.column_index(idx))
    }

    /// Coordinates in the flat cochain space (row-major over the values
    /// matrix).
    pub fn to_vector(&self) -> Vector {
        flatten(&self.values)
    }

    pub fn from_vector(arity: usize, dim: usize, dim_m: usize, v: &[Rational]) -> Self {
        let cols = dim.pow(arity as u32);
        assert_eq!(v.len(), cols * dim_m);
        LodayCochain {
            arity,
            dim,
            dim_m,
            values: Matrix::from_fn(dim_m, cols, |k, c| v[k * cols + c].clone()),
        }
    }

    /// Value on a basis tuple where one slot carries an arbitrary vector.
    fn value_with_vector(&self, idx: &mut [usize], slot: usize, v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim_m);
        let keep = idx[slot];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx[slot] = k;
            vec_axpy(&mut out, c, &self.basis_value(idx));
        }
        idx[slot] = keep;
        out
    }
}

fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * dim);
        for t in &out {
            for i in 0..dim {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

/// The Loday coboundary of a `p`-cochain:
///
/// `Df(x_0..x_p) = Σ_{i<p} (-1)^(i+1) x_i·f(..x̂_i..) + (-1)^p f(x_0..x_{p-1})·x_p
///     + Σ_{i<j} (-1)^i f(x_0..x̂_i..x_{j-1},[x_i,x_j],x_{j+1}..x_p)`.
///
/// On 1-cochains with values in an antisymmetric module this is
/// `Df(x, y) = f([x, y]) - x·f(y)`.
pub fn loday_coboundary(m: &LeibnizModule, f: &LodayCochain) -> Result<LodayCochain> {
    let n = m.algebra().dim();
    ensure_dim(f.dim == n && f.dim_m == m.dim_m(), || {
        "cochain dimensions do not match the module".into()
    })?;
    let p = f.arity;
    let alg = m.algebra();
    let cols = n.pow(p as u32 + 1);
    let mut values = Matrix::zeros(m.dim_m(), cols);
    for (c, x) in tuples(n, p + 1).into_iter().enumerate() {
        let mut out = zero_vector(m.dim_m());
        for i in 0..p {
            let rest: Vec<usize> = x.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &v)| v).collect();
            let v = m.rho_l()[x[i]].mul_vec(&f.basis_value(&rest));
            vec_axpy(&mut out, &sign(i + 1), &v);
        }
        if let Some(rr) = m.rho_r() {
            let v = rr[x[p]].mul_vec(&f.basis_value(&x[..p]));
            vec_axpy(&mut out, &sign(p), &v);
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let b = alg.br_basis(x[i], x[j]);
                let mut rest: Vec<usize> = x.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &v)| v).collect();
                // x_j sits at position j - 1 once x_i is removed.
                let v = f.value_with_vector(&mut rest, j - 1, &b);
                vec_axpy(&mut out, &sign(i), &v);
            }
        }
        for (k, o) in out.into_iter().enumerate() {
            values[(k, c)] = o;
        }
    }
    LodayCochain::new(p + 1, n, values)
}

/// Matrix of the coboundary on arity-`p` cochains in flat coordinates.
pub fn coboundary_matrix(m: &LeibnizModule, p: usize) -> Result<Matrix> {
    let n = m.algebra().dim();
    let d = m.dim_m();
    let src = d * n.pow(p as u32);
    let mut cols = Vec::with_capacity(src);
    for s in 0..src {
        let mut e = zero_vector(src);
        e[s] = Rational::one();
        let f = LodayCochain::from_vector(p, n, d, &e);
        cols.push(loday_coboundary(m, &f)?.to_vector());
    }
    let rows = d * n.pow(p as u32 + 1);
    Ok(Matrix::from_columns(rows, &cols))
}

/// Degree-2 Loday cohomology with coefficients in `m`, in the flat
/// coordinates of [`LodayCochain::to_vector`].
pub fn leibniz_h2(g: &LeibnizAlgebra, m: &LeibnizModule) -> Result<Cohomology> {
    ensure_dim(m.algebra() == g, || "module is over a different algebra".into())?;
    let d1 = coboundary_matrix(m, 1)?;
    let d2 = coboundary_matrix(m, 2)?;
    Cohomology::from_maps(&d1, &d2, None)
}
