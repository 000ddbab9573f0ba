use geis_core::curve::{effective_divisor_count, euler_product_coefficients, is_prime_power, point_counts, prime_power_decomposition, sym_power_trace};
use geis_core::ringtools::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const PRIME_POWERS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 16];

proptest! {
    #[test]
    fn points_over_extensions(qi in 0usize..8, n in 1usize..7) {
        let q = PRIME_POWERS[qi];
        let ctx = point_counts(q, n).unwrap();
        // Σ_{d | n} d·a_d = #P¹(F_{q^n})
        let total: BigInt = (1..=n).filter(|d| n % d == 0).map(|d| ctx.closed_points(d) * BigInt::from(d)).sum();
        prop_assert_eq!(total, num_traits::pow(BigInt::from(q), n) + 1);
    }

    #[test]
    fn euler_product_counts_divisors(qi in 0usize..8, n in 0usize..7) {
        let q = PRIME_POWERS[qi];
        let ctx = point_counts(q, n.max(1)).unwrap();
        let coeffs = euler_product_coefficients(&ctx, &Scalar::one(q), n).unwrap();
        for (k, c) in coeffs.iter().enumerate() {
            prop_assert_eq!(c.clone(), Scalar::from_bigint(q, effective_divisor_count(&ctx, k as u32)));
        }
    }

    #[test]
    fn traces_match_euler_product(num in -5i64..=5, den in 1i64..=4, n in 0usize..6) {
        prop_assume!(num != 0);
        let q = 3;
        let ctx = point_counts(q, n.max(1)).unwrap();
        let s = Scalar::from_rational(q, BigRational::new(num.into(), den.into()));
        let coeffs = euler_product_coefficients(&ctx, &s, n).unwrap();
        for (k, c) in coeffs.iter().enumerate() {
            prop_assert_eq!(c.clone(), sym_power_trace(&ctx, &s, k as u32).unwrap());
        }
    }

    #[test]
    fn prime_power_detection(q in 2u64..2000) {
        let brute = (2..=q).find(|p| q % p == 0).map(|p| {
            let mut r = q;
            while r % p == 0 { r /= p; }
            r == 1
        }).unwrap();
        prop_assert_eq!(is_prime_power(q), brute);
        if let Some((p, k)) = prime_power_decomposition(q) {
            prop_assert_eq!(p.pow(k), q);
        }
    }
}
