// SPDX-License-Identifier: Apache-2.0

//! Decomposition of a symmetric ELA into a Leibniz couple `V ⊃ i` and a
//! `d`-cocycle `Δ`, and the reverse construction.

use crate::ela::{check_ela, ElaMorphism, ELA};
use crate::error::{ensure_dim, invalid, Error, Result};
use crate::leibniz::{
    check_couple, loday_coboundary, quotient_by, LeibnizAlgebra, LeibnizModule, LodayCochain,
};
use crate::linalg::matrix::{unit_vector, vec_add, vec_scale, vec_sub};
use crate::linalg::{kernel, solve, BilinearMap, Matrix, Rational, Subspace, Vector};
use crate::report::Report;

use super::complex::{d2, DCochain2};

/// Where the blocks of a decomposition sit inside the source ELA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceFrame {
    pub dim_w: usize,
    /// `ker t`, whose basis identifies `U` with a subspace of `W`.
    pub kernel: Subspace,
    /// `dim_w x dim_i`: a section of `t` over `im t`, in `i`-coordinates.
    pub sigma: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// The Leibniz algebra `V`.
    pub algebra: LeibnizAlgebra,
    pub ideal_i: Subspace,
    /// `V / i`.
    pub g: LeibnizAlgebra,
    /// `dim_g x dim_v`.
    pub g_projection: Matrix,
    /// `dim_v x dim_g`.
    pub g_section: Matrix,
    /// `g` acting on `i`, in the coordinates of the basis of `ideal_i`.
    pub module_action: LeibnizModule,
    /// `α(x, y)` in `i`-coordinates.
    pub alpha: LodayCochain,
    pub u_dim: usize,
    /// `(dim_v, dim_v, u_dim)`.
    pub delta: DCochain2,
    /// `Δ` on section vectors, `(dim_g, dim_g, u_dim)`.
    pub delta_g: BilinearMap,
    /// `Δ(s x, m)`, `(dim_g, dim_i, u_dim)`.
    pub delta_mix: BilinearMap,
    pub source: Option<SourceFrame>,
}

impl Decomposition {
    /// Derives `g`, the action, `α`, `Δ_g` and `Δ_mix` from a couple and a
    /// cochain using the deterministic splitting of `V` over `i`.
    pub fn from_parts(
        algebra: LeibnizAlgebra,
        ideal_i: Subspace,
        delta: DCochain2,
    ) -> Result<Decomposition> {
        let n = algebra.dim();
        ensure_dim(ideal_i.ambient_dim() == n && delta.dim_v() == n, || {
            "ideal and cochain must live on V".into()
        })?;
        let couple = check_couple(&algebra, &ideal_i);
        if let Some(f) = couple.failures.first() {
            return Err(invalid(format!(
                "not a Leibniz couple: {} fails at {:?}",
                f.axiom, f.witness
            )));
        }
        let q = quotient_by(&algebra, &ideal_i, true)?;
        let dg = q.algebra.dim();
        let di = ideal_i.dim();
        let sec = q.section.columns();
        let ib = ideal_i.basis_vectors();
        let i_coords = |v: &[Rational]| -> Result<Vector> {
            ideal_i
                .coordinates(v)
                .ok_or_else(|| Error::Internal("vector expected in the ideal".into()))
        };
        let mut rho = Vec::with_capacity(dg);
        for x in &sec {
            let cols = ib
                .iter()
                .map(|m| i_coords(&algebra.br(x, m)))
                .collect::<Result<Vec<_>>>()?;
            rho.push(Matrix::from_columns(di, &cols));
        }
        let module_action = LeibnizModule::new(q.algebra.clone(), di, rho, None)?;
        let mut alpha_cols = Vec::with_capacity(dg * dg);
        for x in &sec {
            for y in &sec {
                let b = algebra.br(x, y);
                let rest = vec_sub(&b, &q.section.mul_vec(&q.projection.mul_vec(&b)));
                alpha_cols.push(i_coords(&rest)?);
            }
        }
        let alpha = LodayCochain::new(2, dg, Matrix::from_columns(di, &alpha_cols))?;
        let u = delta.dim_u();
        let delta_g = BilinearMap::from_basis_fn(dg, dg, u, |a, b| delta.delta().apply(&sec[a], &sec[b]));
        let delta_mix = BilinearMap::from_basis_fn(dg, di, u, |a, m| delta.delta().apply(&sec[a], &ib[m]));
        Ok(Decomposition {
            algebra,
            ideal_i,
            g: q.algebra,
            g_projection: q.projection,
            g_section: q.section,
            module_action,
            alpha,
            u_dim: u,
            delta,
            delta_g,
            delta_mix,
            source: None,
        })
    }

    pub fn dim_v(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_g(&self) -> usize {
        self.g.dim()
    }

    pub fn dim_i(&self) -> usize {
        self.ideal_i.dim()
    }
}

/// Splits a symmetric ELA using the deterministic section of `t`.
pub fn decompose(e: &ELA) -> Result<Decomposition> {
    let image = Subspace::column_span(e.t());
    let mut cols = Vec::with_capacity(image.dim());
    for b in image.basis_vectors() {
        let (x, _) = solve(e.t(), &b)?
            .ok_or_else(|| Error::Internal("image vector without preimage".into()))?;
        cols.push(x);
    }
    let sigma = Matrix::from_columns(e.dim_w(), &cols);
    decompose_with_section(e, &sigma)
}

/// Splits a symmetric ELA using the given section `σ` (`dim_w x dim_i`,
/// with `t σ` the inclusion of `im t`).
pub fn decompose_with_section(e: &ELA, sigma: &Matrix) -> Result<Decomposition> {
    if !e.is_symmetric() {
        return Err(invalid(
            "the product is not symmetric; symmetrize first and keep the twist",
        ));
    }
    let r = check_ela(e, false);
    if let Some(f) = r.failures.first() {
        return Err(invalid(format!("not an ELA: axiom {} fails at {:?}", f.axiom, f.witness)));
    }
    let n = e.dim_v();
    let image = Subspace::column_span(e.t());
    let ker = kernel(e.t());
    ensure_dim(sigma.rows() == e.dim_w() && sigma.cols() == image.dim(), || {
        format!("section must be {}x{}", e.dim_w(), image.dim())
    })?;
    if e.t().mul(sigma) != *image.basis() {
        return Err(invalid("sigma is not a section of t over its image"));
    }
    let sym = e.algebra().symmetric_bracket();
    let mut delta = BilinearMap::zeros(n, n, ker.dim());
    for a in 0..n {
        for b in 0..n {
            let s = image
                .coordinates(&sym.basis_value(a, b))
                .ok_or_else(|| Error::Internal("symmetric bracket outside im t".into()))?;
            let diff = vec_sub(&e.circ().basis_value(a, b), &sigma.mul_vec(&s));
            let c = ker
                .coordinates(&diff)
                .ok_or_else(|| Error::Internal("deviation outside ker t".into()))?;
            for (k, x) in c.into_iter().enumerate() {
                delta.set(k, a, b, x);
            }
        }
    }
    let delta = DCochain2::new(delta)?;
    if !d2(e.algebra(), &delta)?.is_zero() {
        return Err(Error::Internal("deviation is not closed".into()));
    }
    let mut d = Decomposition::from_parts(e.algebra().clone(), image, delta)?;
    d.source = Some(SourceFrame {
        dim_w: e.dim_w(),
        kernel: ker,
        sigma: sigma.clone(),
    });
    let v = validate(&d);
    if let Some(f) = v.failures.first() {
        return Err(Error::Internal(format!(
            "decomposition inconsistent: {} fails at {:?}",
            f.axiom, f.witness
        )));
    }
    Ok(d)
}

/// Checks every invariant of a decomposition.
///
/// Failure ids: `couple-*`, `delta-cocycle`, `delta-restriction`,
/// `module-*`, `alpha-cocycle`, `split-quadratic`, `split-mixed`,
/// `split-consistency`, `source`.
pub fn validate(d: &Decomposition) -> Report {
    let mut r = check_couple(&d.algebra, &d.ideal_i).prefixed("couple-");
    if !r.passed() {
        return r;
    }
    match d2(&d.algebra, &d.delta) {
        Ok(t) => {
            let [a, b, c] = t.dims();
            for i in 0..a {
                for j in 0..b {
                    for l in 0..c {
                        r.check("delta-cocycle", &[i, j, l], t.basis_value(i, j, l));
                    }
                }
            }
        }
        Err(_) => r.push("delta-cocycle", Vec::new(), Vec::new()),
    }
    let ib = d.ideal_i.basis_vectors();
    for s in 0..ib.len() {
        for t in s..ib.len() {
            r.check("delta-restriction", &[s, t], d.delta.delta().apply(&ib[s], &ib[t]));
        }
    }
    r.extend(d.module_action.check().prefixed("module-"));
    match loday_coboundary(&d.module_action, &d.alpha) {
        Ok(da) => {
            for (c, col) in da.values().columns().into_iter().enumerate() {
                r.check("alpha-cocycle", &[c], col);
            }
        }
        Err(_) => r.push("alpha-cocycle", Vec::new(), Vec::new()),
    }
    r.extend(split_cocycle_check(d));
    let sec = d.g_section.columns();
    let (dg, di) = (d.dim_g(), d.dim_i());
    for a in 0..dg {
        for b in 0..dg {
            let v = d.delta.delta().apply(&sec[a], &sec[b]);
            r.check("split-consistency", &[a, b], vec_sub(&v, &d.delta_g.basis_value(a, b)));
        }
        for m in 0..di {
            let v = d.delta.delta().apply(&sec[a], &ib[m]);
            r.check("split-consistency", &[a, dg + m], vec_sub(&v, &d.delta_mix.basis_value(a, m)));
        }
    }
    if let Some(s) = &d.source {
        let ok = s.kernel.dim() == d.u_dim
            && s.kernel.ambient_dim() == s.dim_w
            && s.sigma.rows() == s.dim_w
            && s.sigma.cols() == di;
        r.require("source", ok);
    }
    r
}

/// The split cocycle condition
/// `Δ_g(y,[x,y]) + Δ_mix([x,y],m) + Δ_mix(y, x·m + α(x,y)) - Δ_mix(x, y·m + α(y,y)) = 0`,
/// checked through its part quadratic in `y` (polarized, id
/// `split-quadratic`, witness `[x, y1, y2]`) and its part bilinear in
/// `(y, m)` (id `split-mixed`, witness `[x, y, m]`).
pub fn split_cocycle_check(d: &Decomposition) -> Report {
    let mut r = Report::new();
    let (dg, di) = (d.dim_g(), d.dim_i());
    if d.delta_g.dims() != (dg, dg, d.u_dim)
        || d.delta_mix.dims() != (dg, di, d.u_dim)
        || d.alpha.dim() != dg
        || d.alpha.dim_m() != di
    {
        r.push("split-shape", Vec::new(), Vec::new());
        return r;
    }
    let eg = |x: usize| unit_vector(dg, x);
    let br = |x: usize, y: usize| d.g.br_basis(x, y);
    let alpha = |x: usize, y: usize| d.alpha.basis_value(&[x, y]);
    let act = |x: usize| &d.module_action.rho_l()[x];
    for x in 0..dg {
        for y1 in 0..dg {
            for y2 in y1..dg {
                let mut s = vec_add(
                    &d.delta_g.apply(&eg(y1), &br(x, y2)),
                    &d.delta_g.apply(&eg(y2), &br(x, y1)),
                );
                s = vec_add(&s, &d.delta_mix.apply(&eg(y1), &alpha(x, y2)));
                s = vec_add(&s, &d.delta_mix.apply(&eg(y2), &alpha(x, y1)));
                let a = vec_add(&alpha(y1, y2), &alpha(y2, y1));
                s = vec_sub(&s, &d.delta_mix.apply(&eg(x), &a));
                r.check("split-quadratic", &[x, y1, y2], s);
            }
        }
        for y in 0..dg {
            for m in 0..di {
                let em = unit_vector(di, m);
                let mut s = d.delta_mix.apply(&br(x, y), &em);
                s = vec_add(&s, &d.delta_mix.apply(&eg(y), &act(x).column(m)));
                s = vec_sub(&s, &d.delta_mix.apply(&eg(x), &act(y).column(m)));
                r.check("split-mixed", &[x, y, m], s);
            }
        }
    }
    r
}

/// The reconstructed ELA together with isomorphisms to and from the source
/// when the decomposition remembers one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub ela: ELA,
    /// Source -> reconstructed.
    pub from_source: Option<ElaMorphism>,
    /// Reconstructed -> source.
    pub to_source: Option<ElaMorphism>,
}

/// `W = U ⊕ i` (U first), `t(u, m) = m`, `u∘v = ½σ([u,v]+[v,u]) + Δ(u,v)`.
pub fn reconstruct(d: &Decomposition) -> Result<Reconstruction> {
    let v = validate(d);
    if let Some(f) = v.failures.first() {
        return Err(invalid(format!(
            "invalid decomposition: {} fails at {:?}",
            f.axiom, f.witness
        )));
    }
    let n = d.dim_v();
    let (u, di) = (d.u_dim, d.dim_i());
    let dim_w = u + di;
    let ib = d.ideal_i.basis();
    let t = Matrix::zeros(n, u).hstack(ib);
    let sym = d.algebra.symmetric_bracket();
    let mut circ = BilinearMap::zeros(n, n, dim_w);
    for a in 0..n {
        for b in 0..n {
            let dv = d.delta.delta().basis_value(a, b);
            let s = d
                .ideal_i
                .coordinates(&sym.basis_value(a, b))
                .ok_or_else(|| Error::Internal("symmetric bracket outside the ideal".into()))?;
            for (k, x) in dv.into_iter().chain(s).enumerate() {
                circ.set(k, a, b, x);
            }
        }
    }
    let ela = ELA::new(d.algebra.clone(), t, circ)?;
    let (from_source, to_source) = match &d.source {
        Some(s) => {
            let kb = s.kernel.basis();
            let back = kb.hstack(&s.sigma);
            let fwd = back
                .inverse()
                .ok_or_else(|| Error::Internal("kernel and section do not span W".into()))?;
            let id = Matrix::identity(n);
            (
                Some(ElaMorphism::plain(fwd, id.clone())),
                Some(ElaMorphism::plain(back, id)),
            )
        }
        None => (None, None),
    };
    Ok(Reconstruction {
        ela,
        from_source,
        to_source,
    })
}

/// The symmetric ELA on the hemisemidirect product `g ⊕ M` with `W = M`,
/// `t` the inclusion and `∘` the symmetrized bracket.
pub fn hemisemidirect_ela(g: &LeibnizAlgebra, m: &LeibnizModule) -> Result<ELA> {
    let v = crate::leibniz::hemisemidirect(g, m)?;
    let (dg, dm) = (g.dim(), m.dim_m());
    let n = dg + dm;
    let t = Matrix::zeros(dg, dm).vstack(&Matrix::identity(dm));
    let half = Rational::half();
    let circ = BilinearMap::from_basis_fn(n, n, dm, |a, b| {
        let s = vec_add(&v.br_basis(a, b), &v.br_basis(b, a));
        vec_scale(&half, &s[dg..])
    });
    ELA::new(v, t, circ)
}
