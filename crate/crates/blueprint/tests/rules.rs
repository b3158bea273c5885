use hfold_blueprint::{apply_rule, rule_values, validate_rule_in_model, BlueprintState, RuleId, StandardMaps};
use hfold_chevalley::standard_model;
use hfold_rings::{Integers, Pair, PairRing, PolyRing, Ring};
use hfold_roots::Kind;

fn s3() -> (PairRing<PolyRing<Integers>>, Vec<Pair<hfold_rings::Poly<num_bigint::BigInt>>>) {
    let r = PolyRing::integer(&["a1", "b1", "a2", "b2", "a3", "b3"]);
    let v = (0..3).map(|i| Pair::new(r.var(2 * i), r.var(2 * i + 1))).collect();
    (PairRing::new(r), v)
}

#[test]
fn rules_preserve_the_invariant_in_d6() {
    let m = standard_model(Kind::D6).unwrap();
    let maps = StandardMaps::reference();
    for rule in RuleId::ALL {
        let v = validate_rule_in_model(rule, m, &maps);
        assert!(v.ok(), "{rule}: {:?}", v.witness);
    }
}

#[test]
fn r12_example() {
    let (s, x) = s3();
    let y = rule_values(RuleId::R12, &s, &StandardMaps::reference(), &x);
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    assert_eq!(y, vec![c.clone(), s.sub(&s.neg(b), &s.mul(c, a)), a.clone()]);
}

#[test]
fn r13_swaps() {
    let (s, x) = s3();
    let st = BlueprintState::new(vec![2, 1, 3], x.clone());
    let out = apply_rule(RuleId::R13, &st, 1, &s, &StandardMaps::reference()).unwrap();
    assert_eq!(out.word, vec![2, 3, 1]);
    assert_eq!(out.values, vec![x[0].clone(), x[2].clone(), x[1].clone()]);
    assert!(apply_rule(RuleId::R13, &st, 0, &s, &StandardMaps::reference()).is_err());
}

mod props {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn pair(v: (i64, i64)) -> Pair<BigInt> {
        Pair::new(BigInt::from(v.0), BigInt::from(v.1))
    }

    proptest! {
        #[test]
        fn reverse_rules_invert(rule in prop::sample::select(RuleId::ALL.to_vec()), xs in prop::collection::vec((-30i64..30, -30i64..30), 5)) {
            let s = PairRing::new(Integers);
            let maps = StandardMaps::reference();
            let x: Vec<Pair<BigInt>> = xs.into_iter().take(rule.source().len()).map(pair).collect();
            let y = rule_values(rule, &s, &maps, &x);
            prop_assert_eq!(rule_values(rule.inverse(), &s, &maps, &y), x);
        }
    }
}
