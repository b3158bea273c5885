use hfold_golden::{GoldenInt, GoldenRat};
use num_bigint::BigInt;
use proptest::prelude::*;

const TAU: f64 = 1.618_033_988_749_895;

fn small() -> impl Strategy<Value = GoldenInt> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| GoldenInt::new(a, b))
}

proptest! {
    #[test]
    fn ring_axioms(x in small(), y in small(), z in small()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
    }

    #[test]
    fn norm_is_multiplicative(x in small(), y in small()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(&x * &x.conj(), GoldenInt::from_int(x.norm()));
    }

    // The sign certificate agrees with a double-precision evaluation whenever
    // the float is far enough from zero to be trusted.
    #[test]
    fn sign_matches_float(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000) {
        let x = GoldenInt::new(a, b);
        let f = a as f64 + b as f64 * TAU;
        if f.abs() > 1e-6 {
            prop_assert_eq!(x.sign(), if f > 0.0 { 1 } else { -1 });
        } else if a == 0 && b == 0 {
            prop_assert_eq!(x.sign(), 0);
        }
    }

    #[test]
    fn order_is_total_and_strict(x in small(), y in small()) {
        let xy = (&x - &y).sign();
        let yx = (&y - &x).sign();
        prop_assert_eq!(xy, -yx);
        prop_assert_eq!(xy == 0, x == y);
    }

    #[test]
    fn rat_field_inverse(a in -50i64..50, b in -50i64..50, d in 1i64..20) {
        let x = GoldenRat::from_ints(a, b, d);
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
            prop_assert_eq!(&(&x / &x), &GoldenRat::one());
        }
    }

    #[test]
    fn rat_canonical_equality(a in -50i64..50, b in -50i64..50, d in 1i64..20, k in 1i64..9) {
        let x = GoldenRat::from_ints(a, b, d);
        let y = GoldenRat::from_ints(a * k, b * k, d * k);
        prop_assert_eq!(x, y);
    }
}

#[test]
fn norm_of_product_example() {
    let x = GoldenInt::new(1, 1);
    let y = GoldenInt::new(2, -1);
    // computed with plain integers: N(a+bt) = a^2 + ab - b^2
    let n = |a: i64, b: i64| BigInt::from(a * a + a * b - b * b);
    assert_eq!((&x * &y).norm(), n(1, 1) * n(2, -1));
}
