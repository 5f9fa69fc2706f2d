// SPDX-License-Identifier: Apache-2.0

//! Enhanced Leibniz algebras: the record, its axiom checker, symmetrization
//! and twists, morphisms, representations and invariant forms.

mod morphism;
mod quadratic;
mod rep;

pub use morphism::{check_morphism, compose_morphisms, ElaMorphism};
pub use quadratic::{check_quadratic, QuadraticELA};
pub use rep::{adjoint_rep, adjoint_rep_with_prefactor, quotient_action, QuotientAction};

use crate::error::{ensure_dim, invalid, Result};
use crate::leibniz::{
    check_leibniz, squares_ideal, LeibnizAlgebra, LeibnizModule,
};
use crate::linalg::matrix::{unit_vector, vec_add, vec_scale, vec_sub};
use crate::linalg::{kernel, BilinearMap, Matrix, Rational, Subspace, Vector};
use crate::report::Report;

/// A map `t: W -> V` into a Leibniz algebra together with a `W`-valued
/// product on `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ELA {
    algebra: LeibnizAlgebra,
    /// `dim_v x dim_w`.
    t: Matrix,
    /// `(dim_v, dim_v, dim_w)`.
    circ: BilinearMap,
}

impl ELA {
    /// Assembles an ELA after checking shapes only.
    pub fn new(algebra: LeibnizAlgebra, t: Matrix, circ: BilinearMap) -> Result<Self> {
        let n = algebra.dim();
        ensure_dim(t.rows() == n, || {
            format!("t has {} rows but V has dimension {n}", t.rows())
        })?;
        let m = t.cols();
        ensure_dim(circ.dims() == (n, n, m), || {
            let (a, b, c) = circ.dims();
            format!("product must be ({n}, {n}, {m}), got ({a}, {b}, {c})")
        })?;
        Ok(ELA { algebra, t, circ })
    }

    /// Like [`new`](Self::new) but also requires axioms (a)-(d).
    pub fn new_checked(algebra: LeibnizAlgebra, t: Matrix, circ: BilinearMap) -> Result<Self> {
        let e = ELA::new(algebra, t, circ)?;
        let r = check_ela(&e, false);
        if let Some(f) = r.failures.first() {
            return Err(invalid(format!(
                "axiom {} fails at basis tuple {:?}",
                f.axiom, f.witness
            )));
        }
        Ok(e)
    }

    /// All-zero structure on the given dimensions.
    pub fn zero(dim_v: usize, dim_w: usize) -> Self {
        ELA {
            algebra: LeibnizAlgebra::abelian(dim_v),
            t: Matrix::zeros(dim_v, dim_w),
            circ: BilinearMap::zeros(dim_v, dim_v, dim_w),
        }
    }

    pub fn dim_v(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_w(&self) -> usize {
        self.t.cols()
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn bracket(&self) -> &BilinearMap {
        self.algebra.bracket()
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn circ(&self) -> &BilinearMap {
        &self.circ
    }

    pub fn is_symmetric(&self) -> bool {
        self.circ.is_symmetric()
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.algebra.br(x, y)
    }

    pub fn apply_t(&self, w: &[Rational]) -> Vector {
        self.t.mul_vec(w)
    }

    pub fn circ_apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.circ.apply(x, y)
    }

    /// The symmetrized product `½(x∘y + y∘x)`.
    pub fn circ_sym(&self, x: &[Rational], y: &[Rational]) -> Vector {
        vec_scale(
            &Rational::half(),
            &vec_add(&self.circ.apply(x, y), &self.circ.apply(y, x)),
        )
    }

    pub fn with_circ(&self, circ: BilinearMap) -> Result<ELA> {
        ELA::new(self.algebra.clone(), self.t.clone(), circ)
    }

    pub fn with_t(&self, t: Matrix) -> Result<ELA> {
        ELA::new(self.algebra.clone(), t, self.circ.clone())
    }

    /// The same structure in new bases: `p_v` and `p_w` map new coordinates
    /// to old ones.
    pub fn change_basis(&self, p_v: &Matrix, p_w: &Matrix) -> Result<ELA> {
        let inv_w = p_w
            .inverse()
            .ok_or_else(|| invalid("W basis change is singular"))?;
        let inv_v = p_v
            .inverse()
            .ok_or_else(|| invalid("V basis change is singular"))?;
        let algebra = self.algebra.change_basis(p_v)?;
        let t = inv_v.mul(&self.t).mul(p_w);
        let circ = self.circ.pullback(p_v, p_v).map_output(&inv_w);
        ELA::new(algebra, t, circ)
    }

    /// Block sum with `self` first on both `V` and `W`.
    pub fn direct_sum(&self, other: &ELA) -> ELA {
        let bracket = block_sum(self.bracket(), other.bracket());
        ELA {
            algebra: LeibnizAlgebra::new(bracket).expect("square blocks"),
            t: self.t.direct_sum(&other.t),
            circ: block_sum(&self.circ, &other.circ),
        }
    }
}

fn block_sum(a: &BilinearMap, b: &BilinearMap) -> BilinearMap {
    let (n1, _, m1) = a.dims();
    let (n2, _, m2) = b.dims();
    BilinearMap::from_basis_fn(n1 + n2, n1 + n2, m1 + m2, |i, j| {
        let mut v = vec![Rational::zero(); m1 + m2];
        if i < n1 && j < n1 {
            v[..m1].clone_from_slice(&a.basis_value(i, j));
        } else if i >= n1 && j >= n1 {
            v[m1..].clone_from_slice(&b.basis_value(i - n1, j - n1));
        }
        v
    })
}

/// Checks axioms (a)-(d) and the Leibniz identity on basis tuples, the
/// quadratic identities in polarized form. With `extended`, also checks the
/// derived identities on the image of `t`; for a structure passing (a)-(d)
/// these hold automatically.
///
/// Failure ids: `leibniz`, `a`, `b`, `c`, `d`, and in extended mode
/// `image-square`, `image-exchange`, `image-bracket`, `image-ideal`,
/// `image-abelian`.
pub fn check_ela(e: &ELA, extended: bool) -> Report {
    let mut r = check_leibniz(e.bracket());
    let n = e.dim_v();
    let m = e.dim_w();
    let ev: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let tw: Vec<Vector> = (0..m).map(|w| e.t.column(w)).collect();
    let brb = |i: usize, j: usize| e.algebra.br_basis(i, j);

    // (a) [t(w), v] = 0
    for (w, t) in tw.iter().enumerate() {
        for v in 0..n {
            r.check("a", &[w, v], e.br(t, &ev[v]));
        }
    }
    // (b) t(w1)∘t(w2) + t(w2)∘t(w1) = 0
    for w1 in 0..m {
        for w2 in w1..m {
            let s = vec_add(&e.circ_apply(&tw[w1], &tw[w2]), &e.circ_apply(&tw[w2], &tw[w1]));
            r.check("b", &[w1, w2], s);
        }
    }
    // (c) u∘ˢ([v1,v2] + [v2,v1]) = v1∘ˢ[u,v2] + v2∘ˢ[u,v1]
    for u in 0..n {
        for v1 in 0..n {
            for v2 in v1..n {
                let sq = vec_add(&brb(v1, v2), &brb(v2, v1));
                let lhs = e.circ_sym(&ev[u], &sq);
                let rhs = vec_add(
                    &e.circ_sym(&ev[v1], &brb(u, v2)),
                    &e.circ_sym(&ev[v2], &brb(u, v1)),
                );
                r.check("c", &[u, v1, v2], vec_sub(&lhs, &rhs));
            }
        }
    }
    // (d) [v1,v2] + [v2,v1] = t(v1∘v2 + v2∘v1)
    for v1 in 0..n {
        for v2 in v1..n {
            let lhs = vec_add(&brb(v1, v2), &brb(v2, v1));
            let c = vec_add(&e.circ.basis_value(v1, v2), &e.circ.basis_value(v2, v1));
            r.check("d", &[v1, v2], vec_sub(&lhs, &e.apply_t(&c)));
        }
    }
    if extended {
        check_image_identities(e, &ev, &tw, &mut r);
    }
    r
}

fn check_image_identities(e: &ELA, ev: &[Vector], tw: &[Vector], r: &mut Report) {
    let n = e.dim_v();
    let m = e.dim_w();
    let two = Rational::from_int(2);
    for w1 in 0..m {
        for w2 in w1..m {
            r.check("image-square", &[w1, w2], e.circ_sym(&tw[w1], &tw[w2]));
            r.check("image-abelian", &[w1, w2], e.br(&tw[w1], &tw[w2]));
        }
    }
    let image = Subspace::column_span(&e.t);
    for w in 0..m {
        for v in 0..n {
            let vt = e.br(&ev[v], &tw[w]);
            // [v, t(w)] = 2 t(v∘ˢt(w))
            let rhs = vec_scale(&two, &e.apply_t(&e.circ_sym(&ev[v], &tw[w])));
            r.check("image-bracket", &[v, w], vec_sub(&vt, &rhs));
            if !image.contains_vector(&vt) {
                r.push("image-ideal", vec![v, w], vt.clone());
            }
            let tv = e.br(&tw[w], &ev[v]);
            if !image.contains_vector(&tv) {
                r.push("image-ideal", vec![w, v], tv);
            }
            // u∘ˢ[v,t(w)] = v∘ˢ[u,t(w)] + t(w)∘ˢ[u,v]
            for u in 0..n {
                let lhs = e.circ_sym(&ev[u], &vt);
                let rhs = vec_add(
                    &e.circ_sym(&ev[v], &e.br(&ev[u], &tw[w])),
                    &e.circ_sym(&tw[w], &e.br(&ev[u], &ev[v])),
                );
                r.check("image-exchange", &[u, v, w], vec_sub(&lhs, &rhs));
            }
        }
    }
}

/// An antisymmetric `W`-valued 2-form on `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaTwist {
    beta: BilinearMap,
}

impl BetaTwist {
    pub fn new(beta: BilinearMap) -> Result<Self> {
        if !beta.is_antisymmetric() {
            return Err(invalid("twist is not antisymmetric"));
        }
        Ok(BetaTwist { beta })
    }

    pub fn zero(dim_v: usize, dim_w: usize) -> Self {
        BetaTwist {
            beta: BilinearMap::zeros(dim_v, dim_v, dim_w),
        }
    }

    pub fn beta(&self) -> &BilinearMap {
        &self.beta
    }

    pub fn dim_v(&self) -> usize {
        self.beta.dim_a()
    }

    pub fn dim_w(&self) -> usize {
        self.beta.dim_out()
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_zero()
    }

    pub fn neg(&self) -> BetaTwist {
        BetaTwist {
            beta: self.beta.scale(&Rational::from_int(-1)),
        }
    }

    pub fn add(&self, other: &BetaTwist) -> BetaTwist {
        BetaTwist {
            beta: self.beta.add(&other.beta),
        }
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.beta.apply(x, y)
    }
}

/// `∘ ↦ ∘ + β`.
pub fn beta_transform(e: &ELA, b: &BetaTwist) -> Result<ELA> {
    ensure_dim(
        b.dim_v() == e.dim_v() && b.dim_w() == e.dim_w(),
        || "twist dimensions do not match the ELA".into(),
    )?;
    if !b.beta.is_antisymmetric() {
        return Err(invalid("twist is not antisymmetric"));
    }
    e.with_circ(e.circ.add(&b.beta))
}

/// Splits `e` into its symmetric part and the twist that recovers it:
/// `beta_transform(s, β) == e`.
pub fn symmetrize(e: &ELA) -> (ELA, BetaTwist) {
    let s = ELA {
        algebra: e.algebra.clone(),
        t: e.t.clone(),
        circ: e.circ.symmetric_part(),
    };
    let b = BetaTwist {
        beta: e.circ.antisymmetric_part(),
    };
    (s, b)
}

/// The symmetric ELA of a Leibniz algebra: `W` is the ideal of squares,
/// `t` its inclusion and `∘` the symmetrized bracket.
pub fn canonical_from_leibniz(l: &LeibnizAlgebra) -> Result<ELA> {
    let sq = squares_ideal(l);
    let sym = l.symmetric_bracket();
    let n = l.dim();
    let mut circ = BilinearMap::zeros(n, n, sq.dim());
    for i in 0..n {
        for j in 0..n {
            let c = sq
                .coordinates(&sym.basis_value(i, j))
                .ok_or_else(|| crate::error::Error::Internal("symmetric bracket outside the squares".into()))?;
            for (k, x) in c.into_iter().enumerate() {
                circ.set(k, i, j, x);
            }
        }
    }
    ELA::new(l.clone(), sq.basis().clone(), circ)
}

/// The ELA on a module `M` of a Lie algebra `g` induced by an equivariant
/// map `θ: M -> g`: `[m,n] = θ(m)·n`, `∘` the symmetrization of that
/// bracket, `W = ker θ` with `t` the inclusion.
pub fn from_intertwiner(g: &LeibnizAlgebra, m: &LeibnizModule, theta: &Matrix) -> Result<ELA> {
    ensure_dim(m.algebra() == g, || "module is over a different algebra".into())?;
    ensure_dim(theta.rows() == g.dim() && theta.cols() == m.dim_m(), || {
        format!("intertwiner must be {}x{}", g.dim(), m.dim_m())
    })?;
    if !g.is_lie() {
        return Err(invalid("expected a Lie algebra"));
    }
    let d = m.dim_m();
    let gd = g.dim();
    for x in 0..gd {
        for k in 0..d {
            let lhs = theta.mul_vec(&m.rho_l()[x].column(k));
            let rhs = g.br(&unit_vector(gd, x), &theta.column(k));
            if lhs != rhs {
                return Err(invalid(format!(
                    "intertwiner is not equivariant at (algebra basis {x}, module basis {k})"
                )));
            }
        }
    }
    let bracket = BilinearMap::from_basis_fn(d, d, d, |a, b| {
        m.left_of(&theta.column(a)).column(b)
    });
    let algebra = LeibnizAlgebra::new(bracket)?;
    let ker = kernel(theta);
    let sym = algebra.symmetric_bracket();
    let mut circ = BilinearMap::zeros(d, d, ker.dim());
    for a in 0..d {
        for b in 0..d {
            let c = ker.coordinates(&sym.basis_value(a, b)).ok_or_else(|| {
                crate::error::Error::Internal("symmetrized bracket leaves ker θ".into())
            })?;
            for (k, x) in c.into_iter().enumerate() {
                circ.set(k, a, b, x);
            }
        }
    }
    ELA::new(algebra, ker.basis().clone(), circ)
}

/// Polarized form of the invariance identity `v∘[u,v] = 0`, which holds
/// for every symmetric ELA over a Lie algebra.
pub fn lie_invariance_report(e: &ELA) -> Report {
    let mut r = Report::new();
    let n = e.dim_v();
    for u in 0..n {
        for v1 in 0..n {
            for v2 in v1..n {
                let a = e.circ_apply(&unit_vector(n, v1), &e.algebra.br_basis(u, v2));
                let b = e.circ_apply(&unit_vector(n, v2), &e.algebra.br_basis(u, v1));
                r.check("circ-invariance", &[u, v1, v2], vec_add(&a, &b));
            }
        }
    }
    r
}

/// `(v, v', v'') ↦ v∘[v',v'']` as a trilinear map.
pub fn circ_bracket_form(e: &ELA) -> crate::linalg::TrilinearMap {
    let n = e.dim_v();
    crate::linalg::TrilinearMap::from_basis_fn(n, n, n, e.dim_w(), |a, b, c| {
        e.circ_apply(&unit_vector(n, a), &e.algebra.br_basis(b, c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ints;

    #[test]
    fn zero_ela_passes() {
        assert!(check_ela(&ELA::zero(3, 2), true).passed());
    }

    #[test]
    fn symmetrize_round_trip() {
        let mut circ = BilinearMap::zeros(2, 2, 1);
        circ.set(0, 0, 1, Rational::from_int(3));
        let e = ELA::new(LeibnizAlgebra::abelian(2), Matrix::zeros(2, 1), circ).unwrap();
        let (s, b) = symmetrize(&e);
        assert!(s.is_symmetric());
        assert_eq!(beta_transform(&s, &b).unwrap(), e);
        assert!(check_ela(&e, true).passed());
    }

    #[test]
    fn canonical_ela_of_square_bracket() {
        // [x, x] = y
        let l = LeibnizAlgebra::new(BilinearMap::from_basis_fn(2, 2, 2, |i, j| {
            if (i, j) == (0, 0) {
                ints(&[0, 1])
            } else {
                ints(&[0, 0])
            }
        }))
        .unwrap();
        let e = canonical_from_leibniz(&l).unwrap();
        assert_eq!(e.dim_w(), 1);
        assert_eq!(e.t(), &Matrix::from_ints(&[&[0], &[1]]));
        assert_eq!(e.circ().basis_value(0, 0), ints(&[1]));
        assert!(check_ela(&e, true).passed());
    }
}
