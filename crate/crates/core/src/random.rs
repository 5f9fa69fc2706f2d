// SPDX-License-Identifier: Apache-2.0

//! Seeded generators of valid structures with small rational entries,
//! for property tests. Every generator is deterministic in its `Rng`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ela::{BetaTwist, ELA};
use crate::leibniz::{abelian_extension, leibniz_h2, LeibnizAlgebra, LeibnizModule, LodayCochain};
use crate::linalg::matrix::{ints, vec_axpy};
use crate::linalg::{BilinearMap, Matrix, Rational, Subspace, Vector};
use crate::structure::{
    d_cohomology, reconstruct, DCochain2, Decomposition, PositiveQuadraticData,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= 3`, `q` in `{1, 2}`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn small_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = small_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

/// A unit upper triangular matrix times a permutation times a diagonal of
/// nonzero entries; always invertible.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Less if rng.gen_bool(0.5) => small_rational(rng),
        _ => Rational::zero(),
    });
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = Matrix::from_fn(n, n, |i, j| {
        if perm[i] == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let d: Vec<Rational> = (0..n).map(|_| small_nonzero(rng)).collect();
    upper.mul(&p).mul(&Matrix::diagonal(&d))
}

pub fn random_bilinear<R: Rng>(rng: &mut R, a: usize, b: usize, out: usize) -> BilinearMap {
    BilinearMap::from_basis_fn(a, b, out, |_, _| random_vector(rng, out))
}

pub fn random_symmetric_bilinear<R: Rng>(rng: &mut R, n: usize, out: usize) -> BilinearMap {
    random_bilinear(rng, n, n, out).symmetric_part()
}

pub fn random_beta<R: Rng>(rng: &mut R, dim_v: usize, dim_w: usize) -> BetaTwist {
    BetaTwist::new(random_bilinear(rng, dim_v, dim_v, dim_w).antisymmetric_part())
        .expect("antisymmetric part is antisymmetric")
}

fn lie_from_fn(n: usize, f: impl Fn(usize, usize) -> Vec<i64>) -> LeibnizAlgebra {
    LeibnizAlgebra::new(BilinearMap::from_basis_fn(n, n, n, |i, j| ints(&f(i, j))))
        .expect("shape is consistent")
}

/// `[e0, e1] = e1`.
pub fn affine_line() -> LeibnizAlgebra {
    lie_from_fn(2, |i, j| match (i, j) {
        (0, 1) => vec![0, 1],
        (1, 0) => vec![0, -1],
        _ => vec![0, 0],
    })
}

/// `[e0, e1] = e2`.
pub fn heisenberg() -> LeibnizAlgebra {
    lie_from_fn(3, |i, j| match (i, j) {
        (0, 1) => vec![0, 0, 1],
        (1, 0) => vec![0, 0, -1],
        _ => vec![0, 0, 0],
    })
}

/// `[e_i, e_j] = ε_ijk e_k`.
pub fn so3() -> LeibnizAlgebra {
    lie_from_fn(3, |i, j| {
        let mut v = vec![0; 3];
        if i != j {
            let k = 3 - i - j;
            v[k] = if (j + 3 - i) % 3 == 1 { 1 } else { -1 };
        }
        v
    })
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h` in the basis `(h, e, f)`.
pub fn sl2() -> LeibnizAlgebra {
    lie_from_fn(3, |i, j| match (i, j) {
        (0, 1) => vec![0, 2, 0],
        (1, 0) => vec![0, -2, 0],
        (0, 2) => vec![0, 0, -2],
        (2, 0) => vec![0, 0, 2],
        (1, 2) => vec![1, 0, 0],
        (2, 1) => vec![-1, 0, 0],
        _ => vec![0, 0, 0],
    })
}

/// A Lie algebra of dimension at most `max_dim` in a random basis.
pub fn random_lie_algebra<R: Rng>(rng: &mut R, max_dim: usize) -> LeibnizAlgebra {
    let mut pool: Vec<LeibnizAlgebra> = (0..=max_dim.min(3)).map(LeibnizAlgebra::abelian).collect();
    if max_dim >= 2 {
        pool.push(affine_line());
    }
    if max_dim >= 3 {
        pool.extend([heisenberg(), so3(), sl2()]);
    }
    let g = pool.choose(rng).expect("pool is not empty").clone();
    let p = random_invertible(rng, g.dim());
    g.change_basis(&p).expect("basis change is invertible")
}

/// A left module of the Lie algebra `g` (no right action) of dimension at
/// most `max_dim`: trivial, adjoint, commuting operators for abelian `g`,
/// or a direct sum of these, in a random basis.
pub fn random_module<R: Rng>(rng: &mut R, g: &LeibnizAlgebra, max_dim: usize) -> LeibnizModule {
    let n = g.dim();
    if n == 0 || max_dim == 0 {
        return LeibnizModule::trivial(g, rng.gen_range(0..=max_dim));
    }
    let mut blocks: Vec<Vec<Matrix>> = Vec::new();
    let mut left = max_dim;
    while left > 0 && (blocks.is_empty() || rng.gen_bool(0.4)) {
        let choice = rng.gen_range(0..3);
        let block: Vec<Matrix> = if choice == 0 && n <= left && !g.bracket().is_zero() {
            (0..n).map(|x| g.left_mult(x)).collect()
        } else if choice == 1 && g.bracket().is_zero() {
            let k = rng.gen_range(1..=left.min(3));
            let a = random_matrix(rng, k, k);
            let a2 = a.mul(&a);
            (0..n)
                .map(|_| {
                    let c0 = small_rational(rng);
                    let c1 = small_rational(rng);
                    a.scale(&c0).add(&a2.scale(&c1))
                })
                .collect()
        } else {
            let k = rng.gen_range(1..=left.min(2));
            (0..n).map(|_| Matrix::zeros(k, k)).collect()
        };
        left -= block[0].rows();
        blocks.push(block);
    }
    let rho: Vec<Matrix> = (0..n)
        .map(|x| {
            blocks
                .iter()
                .map(|b| b[x].clone())
                .reduce(|a, b| a.direct_sum(&b))
                .expect("at least one block")
        })
        .collect();
    let dm = rho[0].rows();
    let p = random_invertible(rng, dm);
    let pinv = p.inverse().expect("invertible");
    let rho = rho.iter().map(|r| pinv.mul(r).mul(&p)).collect();
    LeibnizModule::new(g.clone(), dm, rho, None).expect("module axioms hold by construction")
}

/// A random closed 2-cochain: a combination of the Loday cocycle basis.
pub fn random_closed_cochain<R: Rng>(rng: &mut R, m: &LeibnizModule) -> LodayCochain {
    let g = m.algebra();
    let n = g.dim();
    let h = leibniz_h2(g, m).expect("module is valid");
    let mut v = vec![Rational::zero(); n * n * m.dim_m()];
    for b in h.cocycles.basis_vectors() {
        vec_axpy(&mut v, &small_rational(rng), &b);
    }
    LodayCochain::from_vector(2, n, m.dim_m(), &v)
}

/// An abelian extension `g ⊕ M` with a random closed twist, together with
/// the couple ideal `M`. Dimensions of `g` and `M` are bounded by
/// `max_g` and `max_m`.
pub fn random_couple<R: Rng>(rng: &mut R, max_g: usize, max_m: usize) -> (LeibnizAlgebra, Subspace) {
    let g = random_lie_algebra(rng, max_g);
    let m = random_module(rng, &g, max_m);
    let alpha = if rng.gen_bool(0.5) {
        random_closed_cochain(rng, &m)
    } else {
        LodayCochain::zero(2, g.dim(), m.dim_m())
    };
    let l = abelian_extension(&g, &m, &alpha).expect("cochain is closed");
    let n = l.dim();
    let ideal = Subspace::span(
        n,
        &(g.dim()..n).map(|k| crate::linalg::matrix::unit_vector(n, k)).collect::<Vec<_>>(),
    );
    let p = random_invertible(rng, n);
    let pinv = p.inverse().expect("invertible");
    let l = l.change_basis(&p).expect("basis change is invertible");
    let ideal = Subspace::column_span(&pinv.mul(&ideal.basis()));
    (l, ideal)
}

/// A random Leibniz algebra of dimension at most 6.
pub fn random_leibniz<R: Rng>(rng: &mut R) -> LeibnizAlgebra {
    random_couple(rng, 3, 3).0
}

/// A symmetric ELA with `dim_v <= 6` and `dim_w <= 6`: a random couple
/// with `Δ` a random combination of the constrained cocycle basis,
/// reconstructed and put into random bases of `V` and `W`.
pub fn random_sela<R: Rng>(rng: &mut R) -> ELA {
    loop {
        let (l, i) = random_couple(rng, 3, 3);
        let u = rng.gen_range(0..=2usize);
        if i.dim() + u > 6 {
            continue;
        }
        let h = d_cohomology(&l, &i, u).expect("couple is valid");
        let n = l.dim();
        let mut delta = BilinearMap::zeros(n, n, u);
        for c in &h.cocycles {
            delta = delta.add(&c.scale(&small_rational(rng)));
        }
        let d = DCochain2::new(delta).expect("cocycles are symmetric");
        let dec = Decomposition::from_parts(l, i, d).expect("valid atoms");
        let e = reconstruct(&dec).expect("valid atoms").ela;
        let pv = random_invertible(rng, e.dim_v());
        let pw = random_invertible(rng, e.dim_w());
        return e.change_basis(&pv, &pw).expect("invertible");
    }
}

/// A random symmetric ELA twisted by a random `β`.
pub fn random_ela<R: Rng>(rng: &mut R) -> ELA {
    let s = random_sela(rng);
    let b = random_beta(rng, s.dim_v(), s.dim_w());
    crate::ela::beta_transform(&s, &b).expect("dimensions match")
}

/// Admissible data for the positive quadratic builder, with `g` either
/// abelian (acting on `i` by commuting rotations) or `so(3)` (acting on a
/// sum of adjoint and trivial blocks).
pub fn random_quadratic_data<R: Rng>(rng: &mut R) -> PositiveQuadraticData {
    let pos = |rng: &mut R| Rational::new(rng.gen_range(1..=4), rng.gen_range(1..=2));
    let u_dim = rng.gen_range(0..=2usize);
    let kappa_u = Matrix::diagonal(&(0..u_dim).map(|_| pos(rng)).collect::<Vec<_>>());
    if rng.gen_bool(0.5) {
        let dg = rng.gen_range(1..=3usize);
        let g = LeibnizAlgebra::abelian(dg);
        let kappa_g = Matrix::diagonal(&(0..dg).map(|_| pos(rng)).collect::<Vec<_>>());
        let planes = rng.gen_range(0..=1usize);
        let lines = rng.gen_range(if planes == 0 { 1 } else { 0 }..=1usize);
        let di = 2 * planes + lines;
        let rot = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        let coef: Vec<Vec<Rational>> = (0..dg).map(|_| (0..planes).map(|_| small_rational(rng)).collect()).collect();
        let rho: Vec<Matrix> = (0..dg)
            .map(|x| {
                let mut m = Matrix::zeros(0, 0);
                for c in &coef[x] {
                    m = m.direct_sum(&rot.scale(c));
                }
                m.direct_sum(&Matrix::zeros(lines, lines))
            })
            .collect();
        let i_action = LeibnizModule::new(g.clone(), di, rho, None).expect("commuting operators");
        let block_form = |rng: &mut R| {
            let mut k = Matrix::zeros(0, 0);
            for _ in 0..planes {
                k = k.direct_sum(&Matrix::identity(2).scale(&pos(rng)));
            }
            for _ in 0..lines {
                k = k.direct_sum(&Matrix::identity(1).scale(&pos(rng)));
            }
            k
        };
        let kappa_i = block_form(rng);
        let kappa_i_prime = block_form(rng);
        let delta_g = random_symmetric_bilinear(rng, dg, u_dim);
        PositiveQuadraticData {
            g,
            kappa_g,
            i_action,
            kappa_i,
            kappa_i_prime,
            u_dim,
            kappa_u,
            delta_g,
            delta_mix: BilinearMap::zeros(dg, di, u_dim),
        }
    } else {
        let g = so3();
        let kappa_g = Matrix::identity(3).scale(&pos(rng));
        let adj = rng.gen_bool(0.7);
        let triv = rng.gen_range(if adj { 0 } else { 1 }..=1usize);
        let di = if adj { 3 } else { 0 } + triv;
        let rho: Vec<Matrix> = (0..3)
            .map(|x| {
                let a = if adj { g.left_mult(x) } else { Matrix::zeros(0, 0) };
                a.direct_sum(&Matrix::zeros(triv, triv))
            })
            .collect();
        let i_action = LeibnizModule::new(g.clone(), di, rho, None).expect("adjoint plus trivial");
        let block_form = |rng: &mut R| {
            let a = if adj { Matrix::identity(3).scale(&pos(rng)) } else { Matrix::zeros(0, 0) };
            a.direct_sum(&Matrix::identity(triv).scale(&pos(rng)))
        };
        let kappa_i = block_form(rng);
        let kappa_i_prime = block_form(rng);
        let scales: Vec<Rational> = (0..u_dim).map(|_| small_rational(rng)).collect();
        let delta_g = BilinearMap::from_basis_fn(3, 3, u_dim, |a, b| {
            if a == b {
                scales.clone()
            } else {
                vec![Rational::zero(); u_dim]
            }
        });
        PositiveQuadraticData {
            g,
            kappa_g,
            i_action,
            kappa_i,
            kappa_i_prime,
            u_dim,
            kappa_u,
            delta_g,
            delta_mix: BilinearMap::zeros(3, di, u_dim),
        }
    }
}
