use geis_core::bun::{aut_order, enumerate_split, gaussian_binomial, hecke_modifications_at, hom_dim_bundles, BundleCounter, RationalPoint, SplitBundle};
use num_bigint::BigInt;
use proptest::prelude::*;

fn bundle(n: usize) -> impl Strategy<Value = SplitBundle> {
    prop::collection::vec(-3i64..=3, n).prop_map(SplitBundle::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn injective_endomorphisms(m in bundle(3), q in prop::sample::select(vec![2u64, 3])) {
        let mut c = BundleCounter::new(q);
        prop_assert_eq!(c.inj_count(&m, &m).unwrap(), aut_order(&m, q));
    }

    #[test]
    fn counts_are_twist_invariant(m in bundle(3), n in bundle(2), t in -2i64..=2) {
        let mut c = BundleCounter::new(2);
        prop_assert_eq!(c.subsheaf_type_count(&m, &n).unwrap(), c.subsheaf_type_count(&m.twist(t), &n.twist(t)).unwrap());
        prop_assert_eq!(
            c.saturated_subbundle_count(&m, &n).unwrap(),
            c.saturated_subbundle_count(&m.twist(t), &n.twist(t)).unwrap()
        );
    }

    #[test]
    fn hom_duality(m in bundle(3), n in bundle(2)) {
        prop_assert_eq!(hom_dim_bundles(&n, &m), hom_dim_bundles(&m.dual(), &n.dual()));
    }

    #[test]
    fn hecke_totals(m in bundle(3), k in 1usize..=3, x in 0u16..3) {
        let point = if x == 2 { RationalPoint::Infinity } else { RationalPoint::Affine(x) };
        let r = hecke_modifications_at(&m, k, 3, point).unwrap();
        prop_assert_eq!(BigInt::from(r.total()), gaussian_binomial(3, k, 3));
        for mm in r.entries.keys() {
            prop_assert_eq!(mm.degree(), m.degree() - k as i64);
            // M(-x) ⊂ M' ⊂ M
            for (a, b) in mm.degrees().iter().zip(m.degrees()) {
                prop_assert!(a <= b && *a >= b - 1);
            }
        }
    }

    #[test]
    fn line_subbundles_two_ways(m in bundle(3), d in -4i64..=3) {
        let mut c = BundleCounter::new(2);
        let line = SplitBundle::new(vec![d]);
        prop_assert_eq!(c.line_subbundle_count(&m, d), c.saturated_subbundle_count(&m, &line).unwrap());
    }

    #[test]
    fn enumeration_is_complete(n in 1usize..=3, degree in -4i64..=4, spread in 0i64..=5) {
        let list = enumerate_split(n, degree, spread);
        for m in &list {
            prop_assert_eq!(m.degree(), degree);
            prop_assert!(m.spread() <= spread);
        }
        // brute force over a box
        let mut brute = 0;
        let lo = degree.div_euclid(n as i64) - spread;
        let hi = degree.div_euclid(n as i64) + spread + 1;
        let mut v = vec![lo; n];
        loop {
            if v.windows(2).all(|w| w[0] >= w[1]) && v.iter().sum::<i64>() == degree && v[0] - v[n - 1] <= spread {
                brute += 1;
            }
            let mut i = 0;
            while i < n && v[i] == hi { v[i] = lo; i += 1; }
            if i == n { break; }
            v[i] += 1;
        }
        prop_assert_eq!(list.len(), brute);
    }
}
