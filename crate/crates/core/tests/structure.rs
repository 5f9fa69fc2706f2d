// SPDX-License-Identifier: Apache-2.0

use ela_core::corpus::{
    by_name, canonical_delta_class, classification_representative, example_a1_isomorphism,
    example_end2, DeltaClass, QuadraticFormTwoVars, CORPUS_NAMES,
};
use ela_core::ela::{canonical_from_leibniz, check_ela, check_morphism, check_quadratic, compose_morphisms, ElaMorphism};
use ela_core::leibniz::{LeibnizAlgebra, LeibnizModule};
use ela_core::linalg::matrix::ints;
use ela_core::linalg::{BilinearMap, Matrix, Rational, Subspace};
use ela_core::structure::*;

#[test]
fn end2_decomposes_into_the_plane_atoms() {
    let d = decompose(&example_end2()).unwrap();
    assert_eq!(d.dim_g(), 2);
    assert_eq!(d.dim_i(), 2);
    assert_eq!(d.u_dim, 1);
    assert!(d.g.bracket().is_zero());
    assert!(d.alpha.is_zero());
    assert!(d.delta_mix.is_zero());
    let q = QuadraticFormTwoVars::from_bilinear(&d.delta_g).unwrap();
    assert_eq!(q, QuadraticFormTwoVars::from_epsilons(0, 1, 0));
    // x·(a, b) = (xa, -xb)
    assert_eq!(d.module_action.rho_l()[0], Matrix::from_ints(&[&[1, 0], &[0, -1]]));
    assert!(d.module_action.rho_l()[1].is_zero());
}

#[test]
fn reconstruction_is_isomorphic_to_the_source() {
    for name in CORPUS_NAMES {
        let e = by_name(name).unwrap();
        let d = decompose(&e).unwrap();
        let rec = reconstruct(&d).unwrap();
        assert!(check_ela(&rec.ela, true).passed(), "{name}");
        assert!(rec.ela.is_symmetric());
        let f = rec.from_source.unwrap();
        let g = rec.to_source.unwrap();
        assert!(check_morphism(&e, &rec.ela, &f).passed(), "{name}");
        assert!(check_morphism(&rec.ela, &e, &g).passed(), "{name}");
        let round = compose_morphisms(&f, &g).unwrap();
        assert_eq!(round, ElaMorphism::identity(&e));
    }
}

#[test]
fn end2_sigma_scales_the_ideal_block_by_two() {
    let d = decompose(&example_end2()).unwrap();
    let s = d.source.unwrap();
    assert_eq!(s.sigma, Matrix::from_ints(&[&[2, 0], &[0, 2], &[0, 0]]));
}

#[test]
fn a1_atoms_reproduce_end2() {
    let (d, m) = example_a1_isomorphism();
    let rec = reconstruct(&d).unwrap();
    assert!(check_morphism(&rec.ela, &example_end2(), &m).passed());
    assert_eq!(m.psi.mul_vec(&ints(&[1, 0, 0, 0])), ints(&[0, 1, 0, 0]));
    assert_eq!(m.phi.mul_vec(&ints(&[0, 1, 0])), ints(&[2, 0, 0]));
    // class-2 -> reconstruction -> end2
    let rep = classification_representative(2).unwrap();
    let perm = Matrix::from_ints(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let to_rec = ElaMorphism::plain(perm, Matrix::identity(4));
    assert!(check_morphism(&rep, &rec.ela, &to_rec).passed());
    let both = compose_morphisms(&to_rec, &m).unwrap();
    assert!(check_morphism(&rep, &example_end2(), &both).passed());
}

#[test]
fn representatives_recover_their_class() {
    for k in 1..=5 {
        let d = decompose(&classification_representative(k).unwrap()).unwrap();
        assert!(d.alpha.is_zero() && d.delta_mix.is_zero());
        let q = QuadraticFormTwoVars::from_bilinear(&d.delta_g).unwrap();
        assert_eq!(canonical_delta_class(&q).representative_index(), Some(k));
    }
}

#[test]
fn plane_cohomology_is_three_dimensional() {
    let e = example_end2();
    let i = Subspace::column_span(e.t());
    let h = d_cohomology(e.algebra(), &i, 1).unwrap();
    assert_eq!(h.dimension, 3);
    let d = decompose(&e).unwrap();
    assert!(h.is_cocycle(d.delta.delta()));
    assert!(!h.is_trivial_class(d.delta.delta()));
}

#[test]
fn abelian_cohomology_is_all_symmetric_forms() {
    let l = LeibnizAlgebra::abelian(3);
    let h = d_cohomology(&l, &Subspace::zero(3), 1).unwrap();
    assert_eq!(h.dimension, 6);
    assert!(h.coboundaries.is_empty());
}

#[test]
fn d1_examples() {
    let (ela1, _) = ela_core::corpus::example_ela_pair();
    let delta = DCochain1 { delta: Matrix::from_ints(&[&[0, 1]]) };
    let dd = d1(ela1.algebra(), &delta).unwrap();
    assert_eq!(dd.delta().basis_value(0, 0), ints(&[1]));
    let lie = LeibnizAlgebra::new(BilinearMap::from_basis_fn(2, 2, 2, |i, j| match (i, j) {
        (0, 1) => ints(&[0, 1]),
        (1, 0) => ints(&[0, -1]),
        _ => ints(&[0, 0]),
    }))
    .unwrap();
    let delta = DCochain1 { delta: Matrix::from_ints(&[&[3, 5]]) };
    assert!(d1(&lie, &delta).unwrap().delta().is_zero());
}

#[test]
fn canonical_ela_has_no_deviation() {
    let l = LeibnizAlgebra::new(BilinearMap::from_basis_fn(3, 3, 3, |i, j| match (i, j) {
        (0, 0) => ints(&[0, 1, 0]),
        (0, 2) => ints(&[0, 0, 1]),
        _ => ints(&[0, 0, 0]),
    }))
    .unwrap();
    let e = canonical_from_leibniz(&l).unwrap();
    let d = decompose(&e).unwrap();
    assert_eq!(d.u_dim, 0);
    assert!(d.delta.delta().is_zero());
}

#[test]
fn zero_ela_keeps_everything_in_delta() {
    let e = ela_core::ela::ELA::zero(2, 2)
        .with_circ(BilinearMap::from_basis_fn(2, 2, 2, |i, j| ints(&[(i + j) as i64, 1])))
        .unwrap();
    let d = decompose(&e).unwrap();
    assert_eq!(d.dim_i(), 0);
    assert_eq!(d.u_dim, 2);
    assert_eq!(d.delta.delta(), e.circ());
}

#[test]
fn split_check_on_abelian_plane() {
    let (d, _) = example_a1_isomorphism();
    assert!(split_cocycle_check(&d).passed());
    let mut bad = d.clone();
    bad.delta_mix.set(0, 1, 0, Rational::one());
    let r = split_cocycle_check(&bad);
    assert!(r.fails("split-mixed"));
}

fn so3() -> LeibnizAlgebra {
    LeibnizAlgebra::new(BilinearMap::from_basis_fn(3, 3, 3, |i, j| {
        let mut v = vec![0i64; 3];
        if i != j {
            let k = 3 - i - j;
            let s = if (j + 3 - i) % 3 == 1 { 1 } else { -1 };
            v[k] = s;
        }
        ints(&v)
    }))
    .unwrap()
}

#[test]
fn builder_trivial_and_compact_cases() {
    let g = LeibnizAlgebra::abelian(1);
    let data = PositiveQuadraticData {
        i_action: LeibnizModule::trivial(&g, 1),
        g,
        kappa_g: Matrix::identity(1),
        kappa_i: Matrix::identity(1),
        kappa_i_prime: Matrix::identity(1),
        u_dim: 0,
        kappa_u: Matrix::identity(0),
        delta_g: BilinearMap::zeros(1, 1, 0),
        delta_mix: BilinearMap::zeros(1, 1, 0),
    };
    let q = build_positive_quadratic(&data).unwrap();
    assert!(check_ela(&q.base, true).passed());
    assert!(check_quadratic(&q).passed());

    let g = so3();
    let data = PositiveQuadraticData {
        i_action: LeibnizModule::adjoint(&g),
        g: g.clone(),
        kappa_g: Matrix::identity(3),
        kappa_i: Matrix::identity(3),
        kappa_i_prime: Matrix::identity(3).scale(&Rational::from_int(2)),
        u_dim: 1,
        kappa_u: Matrix::identity(1),
        delta_g: BilinearMap::from_basis_fn(3, 3, 1, |i, j| ints(&[if i == j { 5 } else { 0 }])),
        delta_mix: BilinearMap::zeros(3, 3, 1),
    };
    let q = build_positive_quadratic(&data).unwrap();
    assert!(check_ela(&q.base, true).passed());
    assert!(check_quadratic(&q).passed(), "{}", check_quadratic(&q));
}

#[test]
fn builder_rejects_non_invariant_form() {
    let g = LeibnizAlgebra::new(BilinearMap::from_basis_fn(2, 2, 2, |i, j| match (i, j) {
        (0, 1) => ints(&[0, 1]),
        (1, 0) => ints(&[0, -1]),
        _ => ints(&[0, 0]),
    }))
    .unwrap();
    let data = PositiveQuadraticData {
        i_action: LeibnizModule::trivial(&g, 1),
        g,
        kappa_g: Matrix::diagonal(&[Rational::from_int(1), Rational::from_int(2)]),
        kappa_i: Matrix::identity(1),
        kappa_i_prime: Matrix::identity(1),
        u_dim: 0,
        kappa_u: Matrix::identity(0),
        delta_g: BilinearMap::zeros(2, 2, 0),
        delta_mix: BilinearMap::zeros(2, 1, 0),
    };
    let r = positive_quadratic_hypotheses(&data);
    assert!(r.fails("kappa-g-invariant"));
    assert!(build_positive_quadratic(&data).is_err());
}

#[test]
fn delta_class_of_y_squared() {
    assert_eq!(
        canonical_delta_class(&QuadraticFormTwoVars::from_epsilons(0, 1, 0)),
        DeltaClass::YSquared
    );
}
