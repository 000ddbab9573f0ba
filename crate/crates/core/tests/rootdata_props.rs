use geis_core::rootdata::{BasedRootDatum, Coweight};
use proptest::prelude::*;

fn coweight(n: usize) -> impl Strategy<Value = Coweight> {
    prop::collection::vec(-6i64..=6, n).prop_map(Coweight)
}

proptest! {
    #[test]
    fn reflections_are_involutions(v in coweight(3), i in 0usize..2) {
        let d = BasedRootDatum::gl(3).unwrap();
        prop_assert_eq!(d.reflect(i, &d.reflect(i, &v)), v);
    }

    #[test]
    fn weyl_action_permutes_coordinates(v in coweight(3)) {
        let d = BasedRootDatum::gl(3).unwrap();
        let g = d.weyl_group().unwrap();
        let mut sorted = v.coords().to_vec();
        sorted.sort_unstable();
        for w in g.elements() {
            let mut image = w.apply(&v).coords().to_vec();
            image.sort_unstable();
            prop_assert_eq!(&image, &sorted);
            prop_assert_eq!(g.compose(w, g.inverse(w)), g.identity());
        }
    }

    #[test]
    fn dominant_representative_is_sorted(v in coweight(4)) {
        let d = BasedRootDatum::gl(4).unwrap();
        let (dom, _) = d.dominant_representative(&v);
        prop_assert!(d.is_dominant(&dom));
        let mut sorted = v.coords().to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(dom.coords(), &sorted[..]);
    }

    #[test]
    fn length_counts_inverted_coroots(seed in 0usize..24) {
        let d = BasedRootDatum::gl(4).unwrap();
        let g = d.weyl_group().unwrap();
        let w = &g.elements()[seed % g.len()];
        let inverted = d.positive_coroots().iter().filter(|a| !d.in_positive_cone(&w.apply(a))).count();
        prop_assert_eq!(w.length(), inverted);
        prop_assert_eq!(w.sign(), if inverted % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn height_is_additive_on_the_cone(a in prop::collection::vec(0i64..5, 2), b in prop::collection::vec(0i64..5, 2)) {
        let d = BasedRootDatum::gl(3).unwrap();
        let lift = |c: &[i64]| Coweight(vec![c[0], c[1] - c[0], -c[1]]);
        let (x, y) = (lift(&a), lift(&b));
        prop_assert_eq!(d.height(&(&x + &y)).unwrap(), d.height(&x).unwrap() + d.height(&y).unwrap());
        prop_assert!(d.dominance_leq(&Coweight::zero(3), &x));
        prop_assert_eq!(d.height(&x).unwrap(), a[0] + a[1]);
    }

    #[test]
    fn dominance_is_antisymmetric(x in coweight(3), y in coweight(3)) {
        let d = BasedRootDatum::gl(3).unwrap();
        if d.dominance_leq(&x, &y) && d.dominance_leq(&y, &x) {
            prop_assert_eq!(x, y);
        }
    }
}
