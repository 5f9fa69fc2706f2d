// SPDX-License-Identifier: Apache-2.0

use ela_core::ela::{canonical_from_leibniz, check_ela, check_morphism, check_quadratic, ElaMorphism};
use ela_core::leibniz::{loday_coboundary, LeibnizModule, LodayCochain};
use ela_core::linalg::{kernel, Matrix, Subspace};
use ela_core::random::*;
use ela_core::structure::*;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn d_squares_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (l, _) = random_couple(&mut r, 3, 3);
        let u = r.gen_range(1..=2usize);
        let delta = DCochain1 { delta: random_matrix(&mut r, u, l.dim()) };
        let dd = d2(&l, &d1(&l, &delta).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn loday_squares_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_lie_algebra(&mut r, 3);
        let m = random_module(&mut r, &g, 3);
        for p in 0..=2u32 {
            let cols = g.dim().pow(p);
            let f = LodayCochain::new(p as usize, g.dim(), random_matrix(&mut r, m.dim_m(), cols)).unwrap();
            let dd = loday_coboundary(&m, &loday_coboundary(&m, &f).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }
        let l = random_leibniz(&mut r);
        let bi = LeibnizModule::bi_adjoint(&l);
        let f = LodayCochain::new(1, l.dim(), random_matrix(&mut r, l.dim(), l.dim())).unwrap();
        prop_assert!(loday_coboundary(&bi, &loday_coboundary(&bi, &f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn d1_is_the_symmetrized_loday_coboundary(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_leibniz(&mut r);
        let u = r.gen_range(1..=2usize);
        let delta = random_matrix(&mut r, u, l.dim());
        let dl = loday_coboundary(&LeibnizModule::trivial(&l, u), &LodayCochain::from_linear(&delta)).unwrap();
        let d = d1(&l, &DCochain1 { delta }).unwrap();
        prop_assert_eq!(d.delta(), &dl.to_bilinear().symmetric_part());
    }
}

#[test]
fn changing_the_section_moves_delta_by_a_coboundary() {
    let mut r = rng(30);
    let mut moved = 0;
    for _ in 0..20 {
        let e = random_sela(&mut r);
        let d = decompose(&e).unwrap();
        let sigma = d.source.as_ref().unwrap().sigma.clone();
        let ker = kernel(e.t());
        let shift = ker.basis().mul(&random_matrix(&mut r, ker.dim(), sigma.cols()));
        let other = decompose_with_section(&e, &sigma.add(&shift)).unwrap();
        let diff = d.delta.delta().sub(other.delta.delta());
        if !diff.is_zero() {
            moved += 1;
        }
        let h = d_cohomology(&d.algebra, &d.ideal_i, d.u_dim).unwrap();
        assert!(h.is_cocycle(other.delta.delta()));
        assert!(h.is_trivial_class(&diff));
        let rec = reconstruct(&other).unwrap();
        assert!(check_morphism(&e, &rec.ela, rec.from_source.as_ref().unwrap()).passed());
    }
    assert!(moved > 0);
}

#[test]
fn injective_t_leaves_no_deviation() {
    let mut r = rng(31);
    for _ in 0..15 {
        let l = random_leibniz(&mut r);
        let e = canonical_from_leibniz(&l).unwrap();
        let d = decompose(&e).unwrap();
        assert_eq!(d.u_dim, 0);
        assert!(d.delta.delta().is_zero());
        let g = random_lie_algebra(&mut r, 3);
        let m = random_module(&mut r, &g, 3);
        let h = hemisemidirect_ela(&g, &m).unwrap();
        let d = decompose(&h).unwrap();
        assert_eq!(d.u_dim, 0);
        assert!(d.alpha.is_zero());
    }
}

#[test]
fn random_round_trips() {
    let mut r = rng(32);
    for _ in 0..25 {
        let e = random_sela(&mut r);
        let d = decompose(&e).unwrap();
        assert!(validate(&d).passed());
        assert!(split_cocycle_check(&d).passed());
        let rec = reconstruct(&d).unwrap();
        assert!(check_ela(&rec.ela, false).passed());
        let f = rec.from_source.unwrap();
        let g = rec.to_source.unwrap();
        assert!(check_morphism(&e, &rec.ela, &f).passed());
        assert!(check_morphism(&rec.ela, &e, &g).passed());
        assert_eq!(
            ela_core::ela::compose_morphisms(&f, &g).unwrap(),
            ElaMorphism::identity(&e)
        );
    }
}

#[test]
fn builder_outputs_are_positive_quadratic() {
    let mut r = rng(33);
    for _ in 0..20 {
        let data = random_quadratic_data(&mut r);
        assert!(positive_quadratic_hypotheses(&data).passed());
        let q = build_positive_quadratic(&data).unwrap();
        assert!(check_ela(&q.base, true).passed());
        let rep = check_quadratic(&q);
        assert!(rep.passed(), "{rep}");
        assert!(is_invariant_form(q.base.algebra(), &q.kappa_v));
    }
}

#[test]
fn orthogonal_complement_of_a_left_ideal_is_a_left_ideal() {
    let mut r = rng(34);
    let mut proper = 0;
    for _ in 0..20 {
        let q = build_positive_quadratic(&random_quadratic_data(&mut r)).unwrap();
        let l = q.base.algebra();
        let n = l.dim();
        let s = left_ideal_generated(l, &[random_vector(&mut r, n)]);
        assert!(is_left_ideal(l, &s));
        let perp = orthogonal_left_ideal(l, &q.kappa_v, &s).unwrap();
        assert!(is_left_ideal(l, &perp));
        assert_eq!(perp.dim() + s.dim(), n);
        if s.dim() > 0 && s.dim() < n {
            proper += 1;
        }
    }
    assert!(proper > 0);
    let l = ela_core::corpus::plane_action_algebra();
    let not_ideal = Subspace::span(4, &[vec![1.into(), 1.into(), 0.into(), 0.into()]]);
    assert!(orthogonal_left_ideal(&l, &Matrix::identity(4), &not_ideal).is_err());
}
