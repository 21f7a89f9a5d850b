use algebroid::expr::parse_poly;
use algebroid::filtered_dual::{convolve, vartheta, FunctionalOracle};
use algebroid::random::Sampler;
use algebroid::{Envelope, Fixture, LElement, MultiIndex, Poly, Rational};
use proptest::prelude::*;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Poly> {
    let term = (prop::collection::vec(0u32..3, nvars), -4i64..=4, 1i64..=3);
    prop::collection::vec(term, 0..4).prop_map(move |terms| {
        Poly::from_terms(
            nvars,
            terms.into_iter().map(|(e, n, d)| (MultiIndex::new(e), Rational::new(n.into(), d.into()))),
        )
    })
}

fn fixture_strategy() -> impl Strategy<Value = Fixture> {
    prop::sample::select(Fixture::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(2), b in poly_strategy(2), c in poly_strategy(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &Poly::one(2), a);
    }

    #[test]
    fn partials_satisfy_leibniz(a in poly_strategy(2), b in poly_strategy(2), i in 0usize..2) {
        prop_assert_eq!((&a * &b).partial(i), &(&a.partial(i) * &b) + &(&a * &b.partial(i)));
    }

    #[test]
    fn render_then_parse(a in poly_strategy(3)) {
        prop_assert_eq!(parse_poly(&a.to_string(), 3).unwrap(), a);
    }

    #[test]
    fn lie_rinehart_axioms(f in fixture_strategy(), seed in any::<u64>()) {
        let pres = f.presentation();
        let (k, r) = (pres.nvars(), pres.rank());
        let mut s = Sampler::new(seed);
        let (x, y, z) = (s.l_element(k, r), s.l_element(k, r), s.l_element(k, r));
        let a = s.poly(k, 2, 3);
        let jacobi = pres.bracket(&x, &pres.bracket(&y, &z))
            .add(&pres.bracket(&y, &pres.bracket(&z, &x)))
            .add(&pres.bracket(&z, &pres.bracket(&x, &y)));
        prop_assert!(jacobi.is_zero());
        prop_assert_eq!(pres.bracket(&x, &y), LElement::zero(k, r).sub(&pres.bracket(&y, &x)));
        let leibniz = pres.bracket(&x, &y.scale(&a));
        let expected = pres.bracket(&x, &y).scale(&a).add(&y.scale(&pres.anchor_apply(&x, &a)));
        prop_assert_eq!(leibniz, expected);
        let lhs = pres.anchor_derivation(&pres.bracket(&x, &y));
        let rhs = pres.anchor_derivation(&x).commutator(&pres.anchor_derivation(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn enveloping_product_is_associative_and_filtered(f in fixture_strategy(), seed in any::<u64>()) {
        let env = Envelope::new(f.presentation());
        let mut s = Sampler::new(seed);
        let (u, v, w) = (s.element(&env, 2, 2), s.element(&env, 2, 2), s.element(&env, 1, 2));
        prop_assert_eq!(env.mul(&env.mul(&u, &v), &w), env.mul(&u, &env.mul(&v, &w)));
        prop_assert!(env.mul(&u, &v).degree() <= u.degree() + v.degree());
    }

    #[test]
    fn convolution_is_commutative_and_associative(f in fixture_strategy(), seed in any::<u64>()) {
        let env = Envelope::new(f.presentation());
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.functional(&env, 3), s.functional(&env, 3), s.functional(&env, 3));
        prop_assert_eq!(convolve(&env, &a, &b), convolve(&env, &b, &a));
        prop_assert_eq!(convolve(&env, &convolve(&env, &a, &b), &c), convolve(&env, &a, &convolve(&env, &b, &c)));
        // truncation commutes with the product
        prop_assert_eq!(convolve(&env, &a, &b).restrict(2), convolve(&env, &a.restrict(2), &b.restrict(2)));
    }

    #[test]
    fn vartheta_is_an_algebra_map(f in fixture_strategy(), seed in any::<u64>()) {
        let env = Envelope::new(f.presentation());
        let k = env.nvars();
        let mut s = Sampler::new(seed);
        let (a1, a2, b1, b2) = (s.poly(k, 2, 2), s.poly(k, 2, 2), s.poly(k, 2, 2), s.poly(k, 2, 2));
        let product = vartheta(&a1 * &b1, &a2 * &b2).truncate(&env, 3);
        let separate = convolve(&env, &vartheta(a1, a2).truncate(&env, 3), &vartheta(b1, b2).truncate(&env, 3));
        prop_assert_eq!(product, separate);
    }
}
