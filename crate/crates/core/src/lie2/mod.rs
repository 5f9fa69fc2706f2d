// SPDX-License-Identifier: Apache-2.0

//! 2-term L-infinity algebras: the complex `t: W -> V` with a bracket on
//! `V`, an operation `∗` of `V` on `W` and a 3-bracket `l3`.
//!
//! Only the left operation `v ∗ w` is stored; the right one is its
//! negative, so antisymmetry of the mixed bracket and vanishing of the
//! bracket on `W x W` hold by construction.

mod functor;

pub use functor::{
    functor_morphism, functor_naturality_check, functor_objects, induced_lie2, Lie2Morphism,
};

use crate::error::{ensure_dim, invalid, Result};
use crate::ela::BetaTwist;
use crate::linalg::matrix::{unit_vector, vec_add, vec_axpy, vec_neg, vec_sub, zero_vector};
use crate::linalg::{BilinearMap, Matrix, Rational, TrilinearMap, Vector};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lie2Algebra {
    /// `dim_v x dim_w`.
    pub t: Matrix,
    /// `(dim_v, dim_v, dim_v)`.
    pub l2_vv: BilinearMap,
    /// `(dim_v, dim_w, dim_w)`: `v ∗ w`.
    pub l2_vw: BilinearMap,
    /// `(dim_v, dim_v, dim_v, dim_w)`.
    pub l3: TrilinearMap,
}

impl Lie2Algebra {
    pub fn new(t: Matrix, l2_vv: BilinearMap, l2_vw: BilinearMap, l3: TrilinearMap) -> Result<Self> {
        let a = Lie2Algebra { t, l2_vv, l2_vw, l3 };
        ensure_dim(a.shape_ok(), || "inconsistent Lie-2 dimensions".into())?;
        Ok(a)
    }

    /// All brackets zero on the complex `t`.
    pub fn zero(t: Matrix) -> Self {
        let (n, m) = (t.rows(), t.cols());
        Lie2Algebra {
            t,
            l2_vv: BilinearMap::zeros(n, n, n),
            l2_vw: BilinearMap::zeros(n, m, m),
            l3: TrilinearMap::zeros(n, n, n, m),
        }
    }

    pub fn dim_v(&self) -> usize {
        self.t.rows()
    }

    pub fn dim_w(&self) -> usize {
        self.t.cols()
    }

    fn shape_ok(&self) -> bool {
        let (n, m) = (self.dim_v(), self.dim_w());
        self.l2_vv.dims() == (n, n, n)
            && self.l2_vw.dims() == (n, m, m)
            && self.l3.dims() == [n, n, n]
            && self.l3.dim_out() == m
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.l2_vv.apply(x, y)
    }

    pub fn act(&self, v: &[Rational], w: &[Rational]) -> Vector {
        self.l2_vw.apply(v, w)
    }

    pub fn anomaly(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.l3.apply(x, y, z)
    }
}

/// Checks axioms (a) and (d)-(i) on basis tuples. Axioms (b) and (c) hold
/// by the storage convention and are not reported. Axiom (i) is checked
/// twice: term by term (`i`) and as `D̄ l3 = 0` (`i-cartan`).
///
/// Failure ids: `shape`, `a`, `d`, `e`, `f`, `g`, `h`, `i`, `i-cartan`.
pub fn check_lie2(a: &Lie2Algebra) -> Report {
    let mut r = Report::new();
    if !a.shape_ok() {
        r.push("shape", Vec::new(), Vec::new());
        return r;
    }
    let n = a.dim_v();
    let m = a.dim_w();
    let ev: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let tw: Vec<Vector> = (0..m).map(|w| a.t.column(w)).collect();
    let ew: Vec<Vector> = (0..m).map(|w| unit_vector(m, w)).collect();
    let br = |x: &[Rational], y: &[Rational]| a.bracket(x, y);
    let act = |x: &[Rational], w: &[Rational]| a.act(x, w);

    for x in 0..n {
        for y in x..n {
            r.check("a", &[x, y], vec_add(&a.l2_vv.basis_value(x, y), &a.l2_vv.basis_value(y, x)));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = a.l3.basis_value(x, y, z);
                r.check("d", &[x, y, z], vec_add(&v, &a.l3.basis_value(y, x, z)));
                r.check("d", &[x, y, z], vec_add(&v, &a.l3.basis_value(x, z, y)));
            }
        }
    }
    for x in 0..n {
        for h in 0..m {
            let lhs = a.t.mul_vec(&act(&ev[x], &ew[h]));
            r.check("e", &[x, h], vec_sub(&lhs, &br(&ev[x], &tw[h])));
        }
    }
    for h in 0..m {
        for k in h..m {
            r.check("f", &[h, k], vec_add(&act(&tw[h], &ew[k]), &act(&tw[k], &ew[h])));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = a.t.mul_vec(&a.l3.basis_value(x, y, z));
                let mut rhs = vec_neg(&br(&br(&ev[x], &ev[y]), &ev[z]));
                rhs = vec_add(&rhs, &br(&br(&ev[x], &ev[z]), &ev[y]));
                rhs = vec_add(&rhs, &br(&ev[x], &br(&ev[y], &ev[z])));
                r.check("g", &[x, y, z], vec_sub(&lhs, &rhs));
            }
        }
    }
    // l3(t(h),x,y) = -{x,y}∗h - y∗(x∗h) + x∗(y∗h)
    for h in 0..m {
        for x in 0..n {
            for y in 0..n {
                let lhs = a.anomaly(&tw[h], &ev[x], &ev[y]);
                let mut rhs = vec_neg(&act(&br(&ev[x], &ev[y]), &ew[h]));
                rhs = vec_sub(&rhs, &act(&ev[y], &act(&ev[x], &ew[h])));
                rhs = vec_add(&rhs, &act(&ev[x], &act(&ev[y], &ew[h])));
                r.check("h", &[h, x, y], vec_sub(&lhs, &rhs));
            }
        }
    }
    let l3 = |x: &[Rational], y: &[Rational], z: &[Rational]| a.anomaly(x, y, z);
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (w_, x_, y_, z_) = (&ev[w], &ev[x], &ev[y], &ev[z]);
                    // {l3(..), z} = -z ∗ l3(..)
                    let mut s = vec_neg(&act(z_, &l3(w_, x_, y_)));
                    s = vec_sub(&s, &act(x_, &l3(w_, y_, z_)));
                    s = vec_add(&s, &act(y_, &l3(w_, x_, z_)));
                    s = vec_add(&s, &act(w_, &l3(x_, y_, z_)));
                    s = vec_add(&s, &l3(&br(x_, z_), w_, y_));
                    s = vec_add(&s, &l3(&br(w_, y_), x_, z_));
                    s = vec_sub(&s, &l3(&br(w_, x_), y_, z_));
                    s = vec_sub(&s, &l3(&br(w_, z_), x_, y_));
                    s = vec_sub(&s, &l3(&br(x_, y_), w_, z_));
                    s = vec_sub(&s, &l3(&br(y_, z_), w_, x_));
                    r.check("i", &[w, x, y, z], s);
                }
            }
        }
    }
    let dg = bar_d(a, &Lie2Cochain::from_trilinear(&a.l3));
    for (c, idx) in tuples(n, 4).into_iter().enumerate() {
        r.check("i-cartan", &idx, dg.values.column(c));
    }
    r
}

/// A multilinear map `V^p -> W`, stored as a `dim_w x dim_v^p` matrix whose
/// column for `(i_1, ..., i_p)` has index `i_1 dim_v^(p-1) + ... + i_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Cochain {
    arity: usize,
    dim_v: usize,
    values: Matrix,
}

impl Lie2Cochain {
    pub fn new(arity: usize, dim_v: usize, values: Matrix) -> Result<Self> {
        let cols = dim_v.pow(arity as u32);
        ensure_dim(values.cols() == cols, || {
            format!("arity-{arity} form on dimension {dim_v} needs {cols} columns, got {}", values.cols())
        })?;
        let c = Lie2Cochain { arity, dim_v, values };
        if !c.is_alternating() {
            return Err(invalid("form is not alternating"));
        }
        Ok(c)
    }

    pub fn zero(arity: usize, dim_v: usize, dim_w: usize) -> Self {
        Lie2Cochain {
            arity,
            dim_v,
            values: Matrix::zeros(dim_w, dim_v.pow(arity as u32)),
        }
    }

    /// A 0-form, i.e. an element of `W`.
    pub fn from_element(dim_v: usize, w: &[Rational]) -> Self {
        Lie2Cochain {
            arity: 0,
            dim_v,
            values: Matrix::from_columns(w.len(), &[w.to_vec()]),
        }
    }

    /// A 1-form from a `dim_w x dim_v` matrix.
    pub fn from_linear(m: &Matrix) -> Self {
        Lie2Cochain {
            arity: 1,
            dim_v: m.cols(),
            values: m.clone(),
        }
    }

    pub fn from_bilinear(b: &BilinearMap) -> Self {
        Lie2Cochain {
            arity: 2,
            dim_v: b.dim_a(),
            values: b.unfold(),
        }
    }

    pub fn from_trilinear(f: &TrilinearMap) -> Self {
        let n = f.dims()[0];
        let m = f.dim_out();
        Lie2Cochain {
            arity: 3,
            dim_v: n,
            values: Matrix::from_fn(m, n * n * n, |k, c| {
                f.get(k, c / (n * n), (c / n) % n, c % n).clone()
            }),
        }
    }

    pub fn to_bilinear(&self) -> BilinearMap {
        assert_eq!(self.arity, 2);
        BilinearMap::fold(self.dim_v, self.dim_v, &self.values)
    }

    pub fn to_trilinear(&self) -> TrilinearMap {
        assert_eq!(self.arity, 3);
        let n = self.dim_v;
        TrilinearMap::from_basis_fn(n, n, n, self.dim_w(), |i, j, l| {
            self.values.column((i * n + j) * n + l)
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_w(&self) -> usize {
        self.values.rows()
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    fn column_index(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.dim_v + i)
    }

    pub fn basis_value(&self, idx: &[usize]) -> Vector {
        self.values.column(self.column_index(idx))
    }

    /// Swapping any two adjacent arguments flips the sign.
    pub fn is_alternating(&self) -> bool {
        let p = self.arity;
        tuples(self.dim_v, p).iter().all(|idx| {
            let v = self.basis_value(idx);
            (0..p.saturating_sub(1)).all(|s| {
                let mut sw = idx.clone();
                sw.swap(s, s + 1);
                vec_add(&v, &self.basis_value(&sw)).iter().all(Rational::is_zero)
            })
        })
    }

    /// Value on a basis tuple whose first slot carries a vector.
    fn value_first_slot(&self, v: &[Rational], rest: &[usize]) -> Vector {
        let mut out = zero_vector(self.dim_w());
        let mut idx = Vec::with_capacity(rest.len() + 1);
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx.clear();
            idx.push(k);
            idx.extend_from_slice(rest);
            vec_axpy(&mut out, c, &self.basis_value(&idx));
        }
        out
    }
}

/// The generalized Cartan operator
///
/// `D̄ω(v_1..v_{p+1}) = Σ_i (-1)^(i+1) v_i ∗ ω(..v̂_i..)
///     + Σ_{i<j} (-1)^(i+j) ω({v_i,v_j}, ..v̂_i..v̂_j..)`.
///
/// It squares to zero when `l3 = 0`, the bracket is Lie and `∗` is an
/// action.
pub fn bar_d(a: &Lie2Algebra, omega: &Lie2Cochain) -> Lie2Cochain {
    let n = a.dim_v();
    let m = a.dim_w();
    assert!(omega.dim_v == n && omega.dim_w() == m, "form dimensions do not match");
    let p = omega.arity;
    let cols: Vec<Vector> = tuples(n, p + 1)
        .into_iter()
        .map(|idx| {
            let mut out = zero_vector(m);
            for i in 0..=p {
                let rest: Vec<usize> = idx.iter().enumerate().filter(|&(s, _)| s != i).map(|(_, &x)| x).collect();
                let term = a.l2_vw.left_basis_operator(idx[i]).mul_vec(&omega.basis_value(&rest));
                if i % 2 == 0 {
                    out = vec_add(&out, &term);
                } else {
                    out = vec_sub(&out, &term);
                }
            }
            for i in 0..=p {
                for j in i + 1..=p {
                    let rest: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|&(s, _)| s != i && s != j)
                        .map(|(_, &x)| x)
                        .collect();
                    let b = a.l2_vv.basis_value(idx[i], idx[j]);
                    let term = omega.value_first_slot(&b, &rest);
                    if (i + j) % 2 == 0 {
                        out = vec_add(&out, &term);
                    } else {
                        out = vec_sub(&out, &term);
                    }
                }
            }
            out
        })
        .collect();
    Lie2Cochain {
        arity: p + 1,
        dim_v: n,
        values: Matrix::from_columns(m, &cols),
    }
}

/// The Lie-2 transform induced by a twist `β`:
/// `{x,y} ↦ {x,y} - t β(x,y)`, `v ∗ w ↦ v ∗ w + β(t(w), v)` and
/// `l3 ↦ l3 - D̄β - Σ_cyc β(t β(x,y), z)`, with `D̄` taken for the source
/// structure.
pub fn lie2_beta_transform(a: &Lie2Algebra, b: &BetaTwist) -> Result<Lie2Algebra> {
    let n = a.dim_v();
    let m = a.dim_w();
    ensure_dim(b.dim_v() == n && b.dim_w() == m, || {
        "twist dimensions do not match the Lie-2 algebra".into()
    })?;
    let beta = b.beta();
    let l2_vv = a.l2_vv.sub(&beta.map_output(&a.t));
    let l2_vw = BilinearMap::from_basis_fn(n, m, m, |v, w| {
        vec_add(&a.l2_vw.basis_value(v, w), &beta.apply(&a.t.column(w), &unit_vector(n, v)))
    });
    let db = bar_d(a, &Lie2Cochain::from_bilinear(beta)).to_trilinear();
    let tb = |x: usize, y: usize| a.t.mul_vec(&beta.basis_value(x, y));
    let quad = TrilinearMap::from_basis_fn(n, n, n, m, |x, y, z| {
        let mut s = beta.apply(&tb(x, y), &unit_vector(n, z));
        s = vec_add(&s, &beta.apply(&tb(y, z), &unit_vector(n, x)));
        vec_add(&s, &beta.apply(&tb(z, x), &unit_vector(n, y)))
    });
    let l3 = a.l3.sub(&db).sub(&quad);
    Ok(Lie2Algebra {
        t: a.t.clone(),
        l2_vv,
        l2_vw,
        l3,
    })
}

pub(crate) fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ints;

    #[test]
    fn zero_structure_passes() {
        let a = Lie2Algebra::zero(Matrix::from_ints(&[&[1], &[0]]));
        assert!(check_lie2(&a).passed());
    }

    #[test]
    fn symmetric_bracket_fails_antisymmetry() {
        let mut a = Lie2Algebra::zero(Matrix::zeros(1, 0));
        a.l2_vv.set(0, 0, 0, Rational::one());
        let r = check_lie2(&a);
        assert!(r.fails("a"));
    }

    #[test]
    fn bar_d_of_element_is_the_action() {
        let mut a = Lie2Algebra::zero(Matrix::zeros(1, 1));
        a.l2_vw.set(0, 0, 0, Rational::from_int(3));
        let d = bar_d(&a, &Lie2Cochain::from_element(1, &ints(&[2])));
        assert_eq!(d.basis_value(&[0]), ints(&[6]));
    }
}
