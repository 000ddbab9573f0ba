use geis_core::ringtools::{series_equal, ConeSeries, LaurentPoly, Scalar};
use geis_core::rootdata::{BasedRootDatum, Coweight};
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn scalar(q: u64) -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(move |(a, b)| Scalar::new(q, a, b))
}

fn gl2_series(q: u64, height: u32) -> impl Strategy<Value = ConeSeries> {
    prop::collection::vec(rational(), 0..=(height as usize + 1)).prop_map(move |cs| {
        let d = BasedRootDatum::gl(2).unwrap();
        let mut s = ConeSeries::zero(&d, q, Coweight::zero(2), height);
        for (k, c) in cs.into_iter().enumerate() {
            s.add_term(Coweight(vec![k as i64, -(k as i64)]), &Scalar::from_rational(q, c)).unwrap();
        }
        s
    })
}

proptest! {
    #[test]
    fn scalar_ring_axioms(x in scalar(3), y in scalar(3), z in scalar(3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
    }

    #[test]
    fn scalar_inverse(x in scalar(7)) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        prop_assert!((&x * &x.conj()).is_rational());
    }

    #[test]
    fn square_q_stays_rational(x in scalar(9), y in scalar(9)) {
        prop_assert!((&x * &y).is_rational());
    }

    #[test]
    fn display_parses_back(x in scalar(5)) {
        prop_assert_eq!(Scalar::parse(5, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn half_powers_add(a in -8i64..8, b in -8i64..8) {
        let q = 2;
        prop_assert_eq!(&Scalar::q_half_power(q, a) * &Scalar::q_half_power(q, b), Scalar::q_half_power(q, a + b));
    }

    #[test]
    fn series_product_commutes_and_associates(f in gl2_series(2, 6), g in gl2_series(2, 6), h in gl2_series(2, 6)) {
        let fg = f.mul(&g).unwrap();
        prop_assert!(series_equal(&fg, &g.mul(&f).unwrap(), 6).unwrap().equal);
        let left = fg.mul(&h).unwrap();
        let right = f.mul(&g.mul(&h).unwrap()).unwrap();
        prop_assert!(series_equal(&left, &right, 6).unwrap().equal);
    }

    #[test]
    fn series_product_matches_polynomial_product(f in gl2_series(3, 5), g in gl2_series(3, 5)) {
        let via_series = LaurentPoly::from_series(&f.mul(&g).unwrap());
        let full = LaurentPoly::from_series(&f).mul(&LaurentPoly::from_series(&g));
        for (k, v) in full.terms() {
            if k.coords()[0] <= 5 {
                prop_assert_eq!(via_series.coeff(k), v.clone());
            }
        }
    }

    #[test]
    fn geometric_inverse(c in rational()) {
        let d = BasedRootDatum::gl(2).unwrap();
        let q = 2;
        let alpha = Coweight(vec![1, -1]);
        let mut one_minus = ConeSeries::one(&d, q, 8);
        one_minus.add_term(alpha.clone(), &-Scalar::from_rational(q, c.clone())).unwrap();
        let mut geom = ConeSeries::zero(&d, q, Coweight::zero(2), 8);
        let mut p = Scalar::one(q);
        for k in 0..=8 {
            geom.add_term(alpha.scale(k), &p).unwrap();
            p = &p * &Scalar::from_rational(q, c.clone());
        }
        prop_assert!(series_equal(&one_minus.mul(&geom).unwrap(), &ConeSeries::one(&d, q, 8), 8).unwrap().equal);
    }
}
