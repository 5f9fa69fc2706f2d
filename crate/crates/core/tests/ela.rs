// SPDX-License-Identifier: Apache-2.0

use ela_core::corpus::{by_name, example_end2, perturbed_end2, CORPUS_NAMES, PERTURBED_AXIOMS};
use ela_core::ela::*;
use ela_core::leibniz::{check_leibniz, LeibnizModule};
use ela_core::linalg::{kernel, BilinearMap, Matrix, Rational};
use ela_core::random::*;
use ela_core::structure::hemisemidirect_ela;
use proptest::prelude::*;

#[test]
fn end2_passes_extended_checks_with_a_one_dimensional_kernel() {
    let e = example_end2();
    let r = check_ela(&e, true);
    assert!(r.passed(), "{r}");
    assert_eq!(kernel(e.t()).dim(), 1);
    assert!(!e.algebra().is_antisymmetric());
}

#[test]
fn each_perturbation_fails_exactly_its_axiom() {
    for ax in PERTURBED_AXIOMS {
        let bad = perturbed_end2(ax).unwrap();
        let got: Vec<String> = check_ela(&bad, false).failed_axioms().into_iter().collect();
        assert_eq!(got, vec![ax.to_string()]);
    }
    assert!(perturbed_end2("e").is_none());
}

#[test]
fn corpus_is_valid_and_extended_identities_hold() {
    for name in CORPUS_NAMES {
        let r = check_ela(&by_name(name).unwrap(), true);
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn quotient_action_on_the_corpus() {
    for name in CORPUS_NAMES {
        let q = quotient_action(&by_name(name).unwrap()).unwrap();
        assert!(q.report.passed(), "{name}: {}", q.report);
        assert!(q.g.is_lie());
    }
}

#[test]
fn hemisemidirect_action_on_w_is_the_module_action() {
    let g = sl2();
    let m = LeibnizModule::adjoint(&g);
    let e = hemisemidirect_ela(&g, &m).unwrap();
    assert!(check_ela(&e, true).passed());
    let (_, on_w) = adjoint_rep(&e).unwrap();
    for x in 0..3 {
        assert_eq!(on_w.rho_l()[x], m.rho_l()[x]);
    }
    for u in 3..6 {
        assert!(on_w.rho_l()[u].is_zero());
    }
}

#[test]
fn dropping_the_factor_two_breaks_the_representation() {
    let g = sl2();
    let e = hemisemidirect_ela(&g, &LeibnizModule::adjoint(&g)).unwrap();
    let (on_v, on_w) = adjoint_rep(&e).unwrap();
    assert!(on_v.check().passed());
    assert!(on_w.check().passed());
    let (_, halved) = adjoint_rep_with_prefactor(&e, &Rational::one()).unwrap();
    assert!(halved.check().fails("LLM"));
}

#[test]
fn adjoint_rep_is_a_representation_on_random_elas() {
    let mut r = rng(20);
    for _ in 0..30 {
        let e = random_ela(&mut r);
        let (on_v, on_w) = adjoint_rep(&e).unwrap();
        assert!(on_v.check().passed());
        assert!(on_w.check().passed(), "{}", on_w.check());
    }
}

#[test]
fn canonical_ela_of_random_leibniz_algebras() {
    let mut r = rng(21);
    for _ in 0..30 {
        let l = random_leibniz(&mut r);
        assert!(check_leibniz(l.bracket()).passed());
        let e = canonical_from_leibniz(&l).unwrap();
        assert!(e.is_symmetric());
        assert!(kernel(e.t()).is_zero());
        assert!(check_ela(&e, true).passed());
    }
}

#[test]
fn invariant_form_on_a_lie_algebra() {
    let g = so3();
    let form = BilinearMap::from_basis_fn(3, 3, 1, |i, j| vec![Rational::from_int((i == j) as i64)]);
    let e = ELA::new(g.clone(), Matrix::zeros(3, 1), form).unwrap();
    assert!(check_ela(&e, false).passed());
    assert!(lie_invariance_report(&e).passed());
    let skewed = BilinearMap::from_basis_fn(3, 3, 1, |i, j| vec![Rational::from_int(((i == j) as i64) * (i as i64 + 1))]);
    let bad = ELA::new(g, Matrix::zeros(3, 1), skewed).unwrap();
    assert!(check_ela(&bad, false).fails("c"));
    assert!(!lie_invariance_report(&bad).passed());
}

fn basis_change_morphism(e: &ELA, seed: u64) -> (ELA, ElaMorphism) {
    let mut r = rng(seed);
    let pv = random_invertible(&mut r, e.dim_v());
    let pw = random_invertible(&mut r, e.dim_w());
    let f = e.change_basis(&pv, &pw).unwrap();
    let m = ElaMorphism::plain(pw.inverse().unwrap(), pv.inverse().unwrap());
    (f, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetrize_then_twist_recovers_the_source(seed in any::<u64>()) {
        let e = random_ela(&mut rng(seed));
        let (s, b) = symmetrize(&e);
        prop_assert!(s.is_symmetric());
        prop_assert!(check_ela(&s, false).passed());
        prop_assert_eq!(beta_transform(&s, &b).unwrap(), e);
    }

    #[test]
    fn twist_by_negative_inverts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e = random_ela(&mut r);
        let b = random_beta(&mut r, e.dim_v(), e.dim_w());
        let tw = beta_transform(&e, &b).unwrap();
        prop_assert!(check_ela(&tw, false).passed());
        prop_assert_eq!(beta_transform(&tw, &b.neg()).unwrap(), e.clone());
        prop_assert!(check_morphism(&e, &tw, &ElaMorphism::twist(&e, b)).passed());
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e0 = random_ela(&mut r);
        let (e1, f) = basis_change_morphism(&e0, seed ^ 1);
        let b = random_beta(&mut r, e1.dim_v(), e1.dim_w());
        let e2 = beta_transform(&e1, &b).unwrap();
        let g = ElaMorphism::twist(&e1, b);
        let (e3, h) = basis_change_morphism(&e2, seed ^ 2);
        prop_assert!(check_morphism(&e0, &e1, &f).passed());
        prop_assert!(check_morphism(&e2, &e3, &h).passed());
        let left = compose_morphisms(&compose_morphisms(&f, &g).unwrap(), &h).unwrap();
        let right = compose_morphisms(&f, &compose_morphisms(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert!(check_morphism(&e0, &e3, &left).passed());
    }
}
