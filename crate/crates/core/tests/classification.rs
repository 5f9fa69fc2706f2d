// SPDX-License-Identifier: Apache-2.0

use ela_core::corpus::*;
use ela_core::ela::check_ela;
use ela_core::random::{rng, small_nonzero, small_rational};
use ela_core::structure::decompose;

#[test]
fn representatives_are_valid_and_fixed() {
    for k in 1..=5 {
        let e = classification_representative(k).unwrap();
        assert!(check_ela(&e, true).passed());
        let d = decompose(&e).unwrap();
        let q = QuadraticFormTwoVars::from_bilinear(&d.delta_g).unwrap();
        let [e1, e2, e3] = REPRESENTATIVE_EPSILONS[k - 1];
        assert_eq!(q, QuadraticFormTwoVars::from_epsilons(e1, e2, e3));
        let class = canonical_delta_class(&q);
        assert_eq!(class.representative(), q);
        assert_eq!(class.representative_index(), Some(k));
    }
    assert!(classification_representative(0).is_err());
    assert!(classification_representative(6).is_err());
}

#[test]
fn class_is_invariant_under_the_action() {
    let mut r = rng(40);
    for class in DeltaClass::ALL {
        let rep = class.representative();
        let mut reached = 0;
        for _ in 0..50 {
            let (a, b, c) = (small_nonzero(&mut r), small_nonzero(&mut r), small_rational(&mut r));
            let q = delta_g_action(&rep, &a, &b, &c).unwrap();
            assert_eq!(canonical_delta_class(&q), class, "{q}");
            if let Some((a, b, c)) = normalizing_parameters(&q) {
                assert_eq!(delta_g_action(&q, &a, &b, &c).unwrap(), rep);
                reached += 1;
            }
        }
        // every class except the definite and indefinite ones normalizes
        // over the rationals from any point of its orbit
        if !matches!(class, DeltaClass::Definite | DeltaClass::Indefinite) {
            assert_eq!(reached, 50, "{class}");
        }
    }
}

#[test]
fn zero_form_is_its_own_orbit() {
    let z = QuadraticFormTwoVars::zero();
    assert_eq!(canonical_delta_class(&z), DeltaClass::Zero);
    for class in DeltaClass::ALL.into_iter().skip(1) {
        assert!(!class.representative().is_zero());
    }
    assert_eq!(DeltaClass::Zero.representative_index(), None);
}
