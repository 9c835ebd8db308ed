//! Randomised invariants of the twisted groups over the Gaussian rationals.

use proptest::prelude::*;
use twisted_chevalley::groups::AdjointGroup;
use twisted_chevalley::rings::{GaussianRational, GaussianRationals, InvolutiveRing, Rational};
use twisted_chevalley::roots::ClassKind;
use twisted_chevalley::twist::{twisted_basis, TwistedSystem};
use twisted_chevalley::verifiers::verify_tangent_identities;

fn elem() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| GaussianRational::new(Rational::new(a, b), Rational::new(c, d)))
}

fn group(kind: &str) -> AdjointGroup<GaussianRationals> {
    AdjointGroup::new(TwistedSystem::new(kind.parse().unwrap(), GaussianRationals).unwrap())
}

fn classes_of(g: &AdjointGroup<GaussianRationals>, kind: ClassKind) -> Vec<usize> {
    let cl = g.system().classes();
    (0..cl.len()).filter(|&c| cl.class(c).kind == kind).collect()
}

fn a2_param(t: &GaussianRational, shift: &GaussianRational) -> GaussianRational {
    let r = GaussianRationals;
    let (_, anti) = r.split_fixed_antifixed(shift).unwrap();
    r.add(&r.mul(&r.half().unwrap(), &r.mul(t, &r.theta(t))), &anti)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_are_sigma_fixed(t in elem(), shift in elem(), idx in 0usize..64) {
        let g = group("A4");
        let cl = g.system().classes();
        let c = idx % cl.len();
        let x = match cl.class(c).kind {
            ClassKind::A2 => g.twisted_generator(c, &t, Some(&a2_param(&t, &shift))),
            ClassKind::A1 => g.twisted_generator(c, &GaussianRationals.split_fixed_antifixed(&t).unwrap().0, None),
            ClassKind::A1Sq => g.twisted_generator(c, &t, None),
        }
        .unwrap();
        prop_assert!(g.is_sigma_fixed(&x));
    }

    #[test]
    fn a1sq_generators_are_additive(t in elem(), s in elem()) {
        let g = group("A3");
        let r = GaussianRationals;
        for c in classes_of(&g, ClassKind::A1Sq) {
            let lhs = g.mul(&g.twisted_generator(c, &t, None).unwrap(), &g.twisted_generator(c, &s, None).unwrap());
            prop_assert_eq!(&lhs.matrix, &g.twisted_generator(c, &r.add(&t, &s), None).unwrap().matrix);
        }
    }

    #[test]
    fn a1sq_inverse_negates_parameter(t in elem()) {
        let g = group("D4");
        let r = GaussianRationals;
        for c in classes_of(&g, ClassKind::A1Sq) {
            let x = g.twisted_generator(c, &t, None).unwrap();
            prop_assert_eq!(&g.inverse(&x).unwrap().matrix, &g.twisted_generator(c, &r.neg(&t), None).unwrap().matrix);
        }
    }

    #[test]
    fn a2_generators_compose(t in elem(), s in elem(), p in elem(), q in elem()) {
        let g = group("A4");
        let r = GaussianRationals;
        let (u, v) = (a2_param(&t, &p), a2_param(&s, &q));
        let w = r.add(&r.add(&u, &v), &r.mul(&r.theta(&t), &s));
        for c in classes_of(&g, ClassKind::A2) {
            let lhs = g.mul(&g.twisted_generator(c, &t, Some(&u)).unwrap(), &g.twisted_generator(c, &s, Some(&v)).unwrap());
            prop_assert_eq!(&lhs.matrix, &g.twisted_generator(c, &r.add(&t, &s), Some(&w)).unwrap().matrix);
        }
    }

    #[test]
    fn basis_coordinates_round_trip(coeffs in prop::collection::vec(elem(), 24)) {
        let sys = TwistedSystem::new("A4".parse().unwrap(), GaussianRationals).unwrap();
        let basis = twisted_basis(&sys).unwrap();
        let x = basis.combine(&GaussianRationals, &coeffs);
        prop_assert_eq!(basis.coordinates(&GaussianRationals, &x), coeffs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn sampled_tangents_lie_in_twisted_algebra(seed in any::<u64>()) {
        let report = verify_tangent_identities(&group("A3"), &Default::default(), seed).unwrap();
        let converse: Vec<_> = report.checks.iter().filter(|c| c.id.starts_with("converse/")).collect();
        prop_assert!(!converse.is_empty());
        prop_assert!(report.all_pass(), "{:?}", report.failures().next());
    }
}
