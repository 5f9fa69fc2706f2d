// SPDX-License-Identifier: Apache-2.0

//! Left Leibniz algebras, their canonical ideals and couples, and the
//! hemisemidirect and twisted extension constructions.

mod module;

pub use module::{leibniz_h2, loday_coboundary, LeibnizModule, LodayCochain};

use crate::error::{ensure_dim, invalid, Result};
use crate::linalg::matrix::{unit_vector, vec_add, vec_sub, zero_vector};
use crate::linalg::{kernel, splitting, BilinearMap, Matrix, Rational, Subspace, Vector};
use crate::report::Report;

/// A bracket on `Q^dim`. Validity is not enforced at construction; use
/// [`check_leibniz`] or [`LeibnizAlgebra::new_checked`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    dim: usize,
    bracket: BilinearMap,
}

impl LeibnizAlgebra {
    pub fn new(bracket: BilinearMap) -> Result<Self> {
        let (a, b, c) = bracket.dims();
        ensure_dim(a == b && b == c, || {
            format!("bracket must be (n, n, n), got ({a}, {b}, {c})")
        })?;
        Ok(LeibnizAlgebra { dim: a, bracket })
    }

    /// Like [`new`](Self::new) but rejects brackets violating the Leibniz
    /// identity.
    pub fn new_checked(bracket: BilinearMap) -> Result<Self> {
        let l = LeibnizAlgebra::new(bracket)?;
        let r = check_leibniz(&l.bracket);
        if let Some(f) = r.failures.first() {
            return Err(invalid(format!(
                "Leibniz identity fails on basis triple {:?}",
                f.witness
            )));
        }
        Ok(l)
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra {
            dim,
            bracket: BilinearMap::zeros(dim, dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn br_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.basis_value(i, j)
    }

    /// Left multiplication by `e_i`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        self.bracket.left_basis_operator(i)
    }

    pub fn left_mult_by(&self, x: &[Rational]) -> Matrix {
        self.bracket.left_operator(x)
    }

    /// Right multiplication by `e_j`: `m ↦ [m, e_j]`.
    pub fn right_mult(&self, j: usize) -> Matrix {
        self.bracket.right_basis_operator(j)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.bracket.is_antisymmetric()
    }

    /// Antisymmetric and Leibniz, hence a Lie algebra.
    pub fn is_lie(&self) -> bool {
        self.is_antisymmetric() && check_leibniz(&self.bracket).passed()
    }

    /// The algebra in new coordinates: `p` maps new coordinates to old ones.
    pub fn change_basis(&self, p: &Matrix) -> Result<LeibnizAlgebra> {
        let inv = p
            .inverse()
            .ok_or_else(|| invalid("basis change matrix is singular"))?;
        LeibnizAlgebra::new(self.bracket.pullback(p, p).map_output(&inv))
    }

    /// The symmetric part `[u,v]₊ = ½([u,v] + [v,u])`.
    pub fn symmetric_bracket(&self) -> BilinearMap {
        self.bracket.symmetric_part()
    }
}

/// Evaluates the left Leibniz identity `[a,[b,c]] = [[a,b],c] + [b,[a,c]]`
/// on every basis triple. The residual is left side minus right side.
pub fn check_leibniz(bracket: &BilinearMap) -> Report {
    let mut r = Report::new();
    let (a, b, c) = bracket.dims();
    if a != b || b != c {
        r.push("shape", vec![a, b, c], Vec::new());
        return r;
    }
    let n = a;
    let lm: Vec<Matrix> = (0..n).map(|i| bracket.left_basis_operator(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let bij = bracket.basis_value(i, j);
            let l_bij = bracket.left_operator(&bij);
            for k in 0..n {
                let lhs = lm[i].mul_vec(&bracket.basis_value(j, k));
                let t1 = l_bij.column(k);
                let t2 = lm[j].mul_vec(&bracket.basis_value(i, k));
                r.check("leibniz", &[i, j, k], vec_sub(&lhs, &vec_add(&t1, &t2)));
            }
        }
    }
    r
}

/// Span of all squares, computed as the span of `[e_i,e_j] + [e_j,e_i]`.
pub fn squares_ideal(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim;
    let mut vs = Vec::new();
    for i in 0..n {
        for j in i..n {
            vs.push(vec_add(&l.br_basis(i, j), &l.br_basis(j, i)));
        }
    }
    Subspace::span(n, &vs)
}

/// Elements whose left multiplication vanishes.
pub fn left_center(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim;
    // Row (k, j), column i: coefficient of e_k in [e_i, e_j].
    let m = Matrix::from_fn(n * n, n, |r, i| l.bracket.get(r / n, i, r % n).clone());
    kernel(&m)
}

/// Checks `[V, i] ⊆ i`, `Sq(V) ⊆ i` and `i ⊆ Z_L(V)`.
pub fn check_couple(l: &LeibnizAlgebra, i: &Subspace) -> Report {
    let mut r = Report::new();
    if i.ambient_dim() != l.dim {
        r.push("shape", vec![i.ambient_dim(), l.dim], Vec::new());
        return r;
    }
    for (b, m) in i.basis_vectors().iter().enumerate() {
        for a in 0..l.dim {
            let v = l.br(&unit_vector(l.dim, a), m);
            if !i.contains_vector(&v) {
                r.push("left-ideal", vec![a, b], v);
            }
        }
    }
    let sq = squares_ideal(l);
    for (b, s) in sq.basis_vectors().into_iter().enumerate() {
        if !i.contains_vector(&s) {
            r.push("squares", vec![b], s);
        }
    }
    let zl = left_center(l);
    for (b, m) in i.basis_vectors().into_iter().enumerate() {
        if !zl.contains_vector(&m) {
            r.push("left-center", vec![b], m);
        }
    }
    r
}

/// A quotient `V / i` with its coordinate maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    /// `dim_q x dim_v`: quotient coordinates of a vector of `V`.
    pub projection: Matrix,
    /// `dim_v x dim_q`: the deterministic section onto the pivot complement.
    pub section: Matrix,
}

/// Quotient by a two-sided ideal; when `require_lie` is set the result must
/// be a Lie algebra.
pub fn quotient_by(l: &LeibnizAlgebra, i: &Subspace, require_lie: bool) -> Result<Quotient> {
    ensure_dim(i.ambient_dim() == l.dim, || {
        format!("ideal lives in dimension {} but algebra has dimension {}", i.ambient_dim(), l.dim)
    })?;
    let n = l.dim;
    let sp = splitting(i);
    let free: Vec<usize> = (0..n).filter(|k| !i.pivots().contains(k)).collect();
    let q = free.len();
    let complement_proj = Matrix::identity(n).sub(&sp.projection);
    let projection = complement_proj.select_rows(&free);
    let section = Matrix::from_fn(n, q, |r, c| {
        if free[c] == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    for m in i.basis_vectors() {
        for a in 0..n {
            let e = unit_vector(n, a);
            if !is_zero(&projection.mul_vec(&l.br(&e, &m)))
                || !is_zero(&projection.mul_vec(&l.br(&m, &e)))
            {
                return Err(invalid("subspace is not a two-sided ideal; quotient bracket is ill-defined"));
            }
        }
    }
    let sec_cols = section.columns();
    let bracket = BilinearMap::from_basis_fn(q, q, q, |a, b| {
        projection.mul_vec(&l.br(&sec_cols[a], &sec_cols[b]))
    });
    let algebra = LeibnizAlgebra::new(bracket)?;
    if require_lie && !algebra.is_lie() {
        return Err(invalid("quotient is not a Lie algebra; the subspace does not contain all squares"));
    }
    Ok(Quotient {
        algebra,
        projection,
        section,
    })
}

/// The Lie algebra `V / i` of a Leibniz couple together with the
/// projection matrix.
pub fn quotient_algebra(l: &LeibnizAlgebra, i: &Subspace) -> Result<(LeibnizAlgebra, Matrix)> {
    let c = check_couple(l, i);
    if !c.passed() {
        return Err(invalid(format!(
            "not a Leibniz couple: {}",
            c.failed_axioms().into_iter().collect::<Vec<_>>().join(", ")
        )));
    }
    let q = quotient_by(l, i, true)?;
    Ok((q.algebra, q.projection))
}

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

fn require_lie(g: &LeibnizAlgebra) -> Result<()> {
    if g.is_lie() {
        Ok(())
    } else {
        Err(invalid("expected a Lie algebra (antisymmetric Leibniz bracket)"))
    }
}

fn require_llm(m: &LeibnizModule) -> Result<()> {
    let r = m.check();
    if let Some(f) = r.failures.first() {
        return Err(invalid(format!(
            "module axiom {} fails at basis pair {:?}",
            f.axiom, f.witness
        )));
    }
    Ok(())
}

/// Bracket `[(x,m),(y,n)] = ([x,y], x·n)` on `g ⊕ M`, g-coordinates first.
pub fn hemisemidirect(g: &LeibnizAlgebra, m: &LeibnizModule) -> Result<LeibnizAlgebra> {
    let zero = LodayCochain::zero(2, g.dim(), m.dim_m());
    twisted_product(g, m, &zero)
}

/// Bracket `[(x,m),(y,n)] = ([x,y], x·n + α(x,y))` on `g ⊕ M`. The
/// 2-cochain must be closed.
pub fn abelian_extension(
    g: &LeibnizAlgebra,
    m: &LeibnizModule,
    alpha: &LodayCochain,
) -> Result<LeibnizAlgebra> {
    ensure_dim(alpha.arity() == 2, || format!("cochain has arity {}, expected 2", alpha.arity()))?;
    let d = loday_coboundary(m, alpha)?;
    for (idx, col) in d.values().columns().iter().enumerate() {
        if !is_zero(col) {
            let n = g.dim();
            return Err(invalid(format!(
                "cochain is not closed: differential nonzero on basis triple {:?}",
                [idx / (n * n), (idx / n) % n, idx % n]
            )));
        }
    }
    twisted_product(g, m, alpha)
}

fn twisted_product(
    g: &LeibnizAlgebra,
    m: &LeibnizModule,
    alpha: &LodayCochain,
) -> Result<LeibnizAlgebra> {
    ensure_dim(m.algebra() == g, || "module is over a different algebra".into())?;
    ensure_dim(
        alpha.dim() == g.dim() && alpha.dim_m() == m.dim_m(),
        || "cochain dimensions do not match the algebra and module".into(),
    )?;
    require_lie(g)?;
    if m.rho_r().is_some() {
        return Err(invalid("expected an antisymmetric module (no right action)"));
    }
    require_llm(m)?;
    let gd = g.dim();
    let md = m.dim_m();
    let n = gd + md;
    let bracket = BilinearMap::from_basis_fn(n, n, n, |a, b| {
        let mut out = zero_vector(n);
        if a < gd {
            if b < gd {
                let xy = g.br_basis(a, b);
                out[..gd].clone_from_slice(&xy);
                let al = alpha.basis_value(&[a, b]);
                out[gd..].clone_from_slice(&al);
            } else {
                let v = m.rho_l()[a].column(b - gd);
                out[gd..].clone_from_slice(&v);
            }
        }
        out
    });
    LeibnizAlgebra::new(bracket)
}
