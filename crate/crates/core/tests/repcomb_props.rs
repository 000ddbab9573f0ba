mod common;

use geis_core::repcomb::{character_of, q_kostant, tensor_multiplicity, weight_multiplicity, weyl_dimension, RepEngine};
use geis_core::rootdata::{BasedRootDatum, Coweight};
use proptest::prelude::*;

use common::{dominant_below, Freudenthal};

fn dominant(n: usize, top: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=top, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn kostant_matches_freudenthal_gl4(lambda in dominant(4, 4)) {
        let d = BasedRootDatum::gl(4).unwrap();
        let mut oracle = Freudenthal::new(&lambda);
        let mut rep = RepEngine::new(&d).unwrap();
        for mu in dominant_below(&lambda) {
            let ours = rep.weight_multiplicity(&Coweight(lambda.clone()), &Coweight(mu.clone())).unwrap();
            prop_assert_eq!(ours as i64, oracle.multiplicity(&mu));
        }
    }

    #[test]
    fn character_mass_is_weyl_dimension(lambda in dominant(3, 6)) {
        let d = BasedRootDatum::gl(3).unwrap();
        let lw = Coweight(lambda);
        let ch = character_of(&d, &lw).unwrap();
        prop_assert_eq!(ch.mass(), weyl_dimension(&d, &lw).unwrap());
    }

    #[test]
    fn multiplicities_are_weyl_invariant(lambda in dominant(3, 5), mu in prop::collection::vec(-1i64..=5, 3)) {
        let d = BasedRootDatum::gl(3).unwrap();
        let g = d.weyl_group().unwrap();
        let lw = Coweight(lambda);
        let m = weight_multiplicity(&d, &lw, &Coweight(mu.clone())).unwrap();
        for w in g.elements() {
            prop_assert_eq!(weight_multiplicity(&d, &lw, &w.apply(&Coweight(mu.clone()))).unwrap(), m);
        }
    }

    #[test]
    fn tensor_dimensions_multiply(a in dominant(3, 3), b in dominant(3, 3)) {
        let d = BasedRootDatum::gl(3).unwrap();
        let mut rep = RepEngine::new(&d).unwrap();
        let (la, lb) = (Coweight(a), Coweight(b));
        let dec = rep.tensor_decomposition(&la, &lb).unwrap();
        let total: u64 = dec.iter().map(|(nu, m)| m * weyl_dimension(&d, nu).unwrap()).sum();
        prop_assert_eq!(total, weyl_dimension(&d, &la).unwrap() * weyl_dimension(&d, &lb).unwrap());
        for (nu, m) in &dec {
            prop_assert_eq!(tensor_multiplicity(&d, nu, &lb, &la).unwrap(), *m);
        }
    }

    #[test]
    fn graded_kostant_gl3(c1 in 0i64..12, c2 in 0i64..12) {
        // c1 α1 + c2 α2 with k copies of α1 + α2 uses c1 + c2 - k parts
        let d = BasedRootDatum::gl(3).unwrap();
        let v = q_kostant(&d, &Coweight(vec![c1, c2 - c1, -c2])).unwrap();
        let expected: std::collections::BTreeMap<u32, u128> =
            (0..=c1.min(c2)).map(|k| ((c1 + c2 - k) as u32, 1u128)).collect();
        prop_assert_eq!(v.coeffs, expected);
    }
}
