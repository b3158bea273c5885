use hfold_rings::{Integers, Pair, PairRing, PolyRing, Ring, SignPair, ZMod};
use num_bigint::BigInt;
use proptest::prelude::*;

fn check_axioms<R: Ring>(r: &R, x: &R::Elem, y: &R::Elem, z: &R::Elem) -> Result<(), TestCaseError> {
    prop_assert_eq!(r.mul(&r.mul(x, y), z), r.mul(x, &r.mul(y, z)));
    prop_assert_eq!(r.add(&r.add(x, y), z), r.add(x, &r.add(y, z)));
    prop_assert_eq!(r.mul(x, y), r.mul(y, x));
    prop_assert_eq!(r.add(x, y), r.add(y, x));
    prop_assert_eq!(r.mul(x, &r.add(y, z)), r.add(&r.mul(x, y), &r.mul(x, z)));
    prop_assert_eq!(r.add(x, &r.neg(x)), r.zero());
    prop_assert_eq!(r.mul(x, &r.one()), x.clone());
    Ok(())
}

fn small_poly() -> impl Strategy<Value = Vec<(i64, u8, u8, u8)>> {
    prop::collection::vec((-5i64..5, 0u8..3, 0u8..3, 0u8..3), 0..5)
}

fn build(r: &PolyRing<Integers>, terms: &[(i64, u8, u8, u8)]) -> <PolyRing<Integers> as Ring>::Elem {
    let mut acc = r.zero();
    for &(c, e0, e1, e2) in terms {
        let mut t = r.from_int(c);
        t = r.mul(&t, &r.pow(&r.var(0), e0 as u32));
        t = r.mul(&t, &r.pow(&r.var(1), e1 as u32));
        t = r.mul(&t, &r.pow(&r.var(2), e2 as u32));
        acc = r.add(&acc, &t);
    }
    acc
}

proptest! {
    #[test]
    fn integers(x in -10_000i64..10_000, y in -10_000i64..10_000, z in -10_000i64..10_000) {
        check_axioms(&Integers, &BigInt::from(x), &BigInt::from(y), &BigInt::from(z))?;
    }

    #[test]
    fn integers_mod_n(n in 2u64..40, x in 0u64..1000, y in 0u64..1000, z in 0u64..1000) {
        let r = ZMod::new(n);
        check_axioms(&r, &(x % n), &(y % n), &(z % n))?;
        if let Some(i) = r.inverse(&(x % n)) {
            prop_assert_eq!(r.mul(&i, &(x % n)), 1);
        }
    }

    #[test]
    fn polynomials(a in small_poly(), b in small_poly(), c in small_poly()) {
        let r = PolyRing::integer(&["x", "y", "z"]);
        check_axioms(&r, &build(&r, &a), &build(&r, &b), &build(&r, &c))?;
    }

    // Evaluation is a ring homomorphism into Z/7.
    #[test]
    fn evaluation_is_homomorphism(a in small_poly(), b in small_poly(), v in prop::array::uniform3(0u64..7)) {
        let r = PolyRing::integer(&["x", "y", "z"]);
        let z7 = ZMod::new(7);
        let (p, q) = (build(&r, &a), build(&r, &b));
        let ev = |f: &_| r.eval(f, &z7, &v, |c| z7.from_bigint(c));
        prop_assert_eq!(ev(&r.mul(&p, &q)), z7.mul(&ev(&p), &ev(&q)));
        prop_assert_eq!(ev(&r.add(&p, &q)), z7.add(&ev(&p), &ev(&q)));
    }

    #[test]
    fn pairs(x in any::<(i16, i16)>(), y in any::<(i16, i16)>(), z in any::<(i16, i16)>()) {
        let s = PairRing::new(Integers);
        let p = |(a, b): (i16, i16)| Pair::new(BigInt::from(a), BigInt::from(b));
        let (x, y, z) = (p(x), p(y), p(z));
        check_axioms(&s, &x, &y, &z)?;
        // x * y^* = (x y)^*
        prop_assert_eq!(s.mul(&x, &s.star(&y)), s.star(&s.mul(&x, &y)));
        prop_assert_eq!(s.star(&s.add(&x, &y)), s.add(&s.star(&x), &s.star(&y)));
        for g in SignPair::ALL {
            for h in SignPair::ALL {
                prop_assert_eq!(s.act(g, &s.act(h, &x)), s.act(g * h, &x));
            }
        }
    }
}
