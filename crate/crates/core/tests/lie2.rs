// SPDX-License-Identifier: Apache-2.0

use ela_core::corpus::{by_name, example_a1_isomorphism, example_ela_pair, example_end2, CORPUS_NAMES};
use ela_core::ela::{beta_transform, check_ela, symmetrize, BetaTwist, ElaMorphism};
use ela_core::lie2::*;
use ela_core::linalg::matrix::{unit_vector, vec_sub};
use ela_core::linalg::{BilinearMap, Matrix, Rational};
use ela_core::random::{random_beta, random_ela, random_matrix, random_sela, rng};
use ela_core::structure::reconstruct;

#[test]
fn random_elas_are_valid() {
    let mut r = rng(1);
    for _ in 0..30 {
        let e = random_ela(&mut r);
        assert!(e.dim_v() <= 6 && e.dim_w() <= 6);
        let rep = check_ela(&e, true);
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn corpus_images_pass_every_axiom() {
    for name in CORPUS_NAMES {
        let a = functor_objects(&by_name(name).unwrap()).unwrap();
        let r = check_lie2(&a);
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn end2_anomaly_vanishes() {
    // Products of two off-diagonal units vanish, which kills every term.
    let a = functor_objects(&example_end2()).unwrap();
    assert!(a.l3.is_zero());
}

#[test]
fn random_images_pass_every_axiom() {
    let mut r = rng(2);
    let mut nonzero = 0;
    for _ in 0..40 {
        let e = random_ela(&mut r);
        let a = functor_objects(&e).unwrap();
        if !a.l3.is_zero() {
            nonzero += 1;
        }
        let rep = check_lie2(&a);
        assert!(rep.passed(), "{rep}");
    }
    assert!(nonzero > 0);
}

#[test]
fn naturality_on_random_pairs() {
    let mut r = rng(3);
    for _ in 0..30 {
        let e = random_ela(&mut r);
        let b = random_beta(&mut r, e.dim_v(), e.dim_w());
        let rep = functor_naturality_check(&e, &b).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn transform_by_negative_twist_inverts() {
    let mut r = rng(4);
    for _ in 0..20 {
        let e = random_ela(&mut r);
        let b = random_beta(&mut r, e.dim_v(), e.dim_w());
        let a = functor_objects(&e).unwrap();
        let there = lie2_beta_transform(&a, &b).unwrap();
        assert!(check_lie2(&there).passed());
        let back = lie2_beta_transform(&there, &b.neg()).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn symmetrization_transports_the_image() {
    let mut r = rng(5);
    for _ in 0..10 {
        let e = random_ela(&mut r);
        let (s, b) = symmetrize(&e);
        let via = lie2_beta_transform(&functor_objects(&s).unwrap(), &b).unwrap();
        assert_eq!(via, functor_objects(&e).unwrap());
    }
}

fn ev(n: usize, i: usize) -> Vec<Rational> {
    unit_vector(n, i)
}

#[test]
fn anomaly_identities_on_symmetric_elas() {
    let mut r = rng(6);
    for _ in 0..25 {
        let e = random_sela(&mut r);
        let a = functor_objects(&e).unwrap();
        let n = a.dim_v();
        let m = a.dim_w();
        assert!(a.l3.is_totally_antisymmetric());
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (x_, y_, z_) = (ev(n, x), ev(n, y), ev(n, z));
                    let j = vec_sub(
                        &vec_sub(
                            &a.bracket(&x_, &a.bracket(&y_, &z_)),
                            &a.bracket(&a.bracket(&x_, &y_), &z_),
                        ),
                        &a.bracket(&y_, &a.bracket(&x_, &z_)),
                    );
                    assert_eq!(j, a.t.mul_vec(&a.l3.basis_value(x, y, z)));
                }
                for w in 0..m {
                    let (x_, y_, w_) = (ev(n, x), ev(n, y), ev(m, w));
                    let defect = vec_sub(
                        &vec_sub(&a.act(&x_, &a.act(&y_, &w_)), &a.act(&y_, &a.act(&x_, &w_))),
                        &a.act(&a.bracket(&x_, &y_), &w_),
                    );
                    assert_eq!(defect, a.anomaly(&x_, &y_, &a.t.column(w)));
                }
            }
        }
        let dg = bar_d(&a, &Lie2Cochain::from_trilinear(&a.l3));
        assert!(dg.is_zero());
    }
}

#[test]
fn non_injectivity_witness() {
    let (e1, e2) = example_ela_pair();
    assert_ne!(e1, e2);
    assert_eq!(functor_objects(&e1).unwrap(), functor_objects(&e2).unwrap());
}

#[test]
fn broken_d_breaks_only_antisymmetry() {
    let e = example_end2();
    let bad = e.with_t(e.t().scale(&Rational::from_int(2))).unwrap();
    let r = check_ela(&bad, false);
    assert_eq!(r.failed_axioms().into_iter().collect::<Vec<_>>(), vec!["d".to_string()]);
    let a = induced_lie2(&bad);
    let r = check_lie2(&a);
    assert!(r.fails("a"));
    let good = check_lie2(&induced_lie2(&e));
    assert!(!good.fails("a"));
}

#[test]
fn strict_example_has_square_zero_cartan_operator() {
    // abelian V of dim 2 acting on W = Q^2 by commuting operators, t = 0
    let mut a = Lie2Algebra::zero(Matrix::zeros(2, 2));
    let op = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
    let op2 = op.mul(&op);
    a.l2_vw = BilinearMap::from_basis_fn(2, 2, 2, |v, w| {
        if v == 0 { op.column(w) } else { op2.column(w) }
    });
    assert!(check_lie2(&a).passed());
    let mut r = rng(7);
    let omega = Lie2Cochain::from_linear(&random_matrix(&mut r, 2, 2));
    let dd = bar_d(&a, &bar_d(&a, &omega));
    assert!(dd.is_zero());
    // a twist that is a Cartan coboundary leaves the structure unchanged
    let b = BetaTwist::new(bar_d(&a, &omega).to_bilinear()).unwrap();
    assert_eq!(lie2_beta_transform(&a, &b).unwrap(), a);
}

#[test]
fn plain_and_twist_morphisms_are_carried() {
    let (d, m) = example_a1_isomorphism();
    let rec = reconstruct(&d).unwrap().ela;
    let (lm, r) = functor_morphism(&rec, &example_end2(), &m).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(lm.phi, m.phi);

    let mut rg = rng(8);
    let e = random_ela(&mut rg);
    let b = random_beta(&mut rg, e.dim_v(), e.dim_w());
    let tw = beta_transform(&e, &b).unwrap();
    let (_, r) = functor_morphism(&e, &tw, &ElaMorphism::twist(&e, b)).unwrap();
    assert!(r.passed(), "{r}");
    let (_, r) = functor_morphism(&e, &e, &ElaMorphism::identity(&e)).unwrap();
    assert!(r.passed());
}
