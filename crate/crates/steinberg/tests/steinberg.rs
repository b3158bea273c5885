use hfold_chevalley::{abcd_args, abcd_ring, extract_commutation_map, resolve_name, standard_model, ChevalleyModel, Coverage};
use hfold_rings::{Integers, Pair, Ring, SignPair, ZMod};
use hfold_roots::Kind;
use hfold_steinberg::{
    steinberg_relations, verify_in_model, weyl_param_checks, weyl_param_injectivity, Formula, Relation, SteinbergPresentation, Transporter,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;

fn d6() -> &'static ChevalleyModel {
    standard_model(Kind::D6).unwrap()
}

fn e8() -> &'static ChevalleyModel {
    standard_model(Kind::E8).unwrap()
}

fn transporter(kind: Kind) -> &'static Transporter {
    static H3: OnceLock<Transporter> = OnceLock::new();
    static H4: OnceLock<Transporter> = OnceLock::new();
    let (cell, model) = if kind == Kind::H3 { (&H3, d6()) } else { (&H4, e8()) };
    cell.get_or_init(|| Transporter::new(model.h()).unwrap())
}

fn presentation(kind: Kind) -> &'static SteinbergPresentation {
    static H3: OnceLock<SteinbergPresentation> = OnceLock::new();
    static H4: OnceLock<SteinbergPresentation> = OnceLock::new();
    let cell = if kind == Kind::H3 { &H3 } else { &H4 };
    cell.get_or_init(|| steinberg_relations(transporter(kind), 3, 7).unwrap())
}

#[test]
fn h3_maps_are_word_independent_and_cover_all_pairs() {
    let p = presentation(Kind::H3);
    let h = d6().h();
    for c in p.checks(h) {
        assert!(c.passed, "{c}");
    }
    assert!(p.independence.ok());
    assert!(p.independence.choices >= 120 * 22 + 3 * p.independence.pairs);
    assert_eq!(p.relations.len(), 30 + 30 * 28);
}

#[test]
fn h4_maps_are_word_independent_and_cover_all_pairs() {
    let p = presentation(Kind::H4);
    for c in p.checks(e8().h()) {
        assert!(c.passed, "{c}");
    }
    assert_eq!(p.relations.len(), 120 + 120 * 118);
}

#[test]
fn rho0_rho1_map_is_componentwise_product() {
    let tr = transporter(Kind::H4);
    let h = tr.h();
    let (r0, r1) = (resolve_name(h, "rho0").unwrap(), resolve_name(h, "rho1").unwrap());
    let rho = h.open_interval(r0, r1).unwrap();
    assert_eq!(rho.len(), 1);
    assert_eq!(tr.standard_commutation_map(r0, r1, rho[0]), Some(Formula::parse("ac", "bd")));
}

#[test]
fn negative_delta_gamma_has_three_factor_formula() {
    let tr = transporter(Kind::H3);
    let h = tr.h();
    let n = |s: &str| resolve_name(h, s).unwrap();
    let (alpha, beta, gamma, delta, eps) = (n("alpha"), n("beta"), n("gamma"), n("delta"), n("epsilon"));
    let md = h.neg(delta);
    assert_eq!(h.open_interval(md, gamma).unwrap(), vec![h.neg(eps), alpha, beta]);

    let ring = abcd_ring();
    let (x, y) = abcd_args(&ring);
    let h1 = Formula::parse("bc", "abd");
    let h2 = Formula::parse("-bd", "abcd");
    let star = |p: &Pair<_>| Pair::new(ring.neg(&p.left), p.right.clone());
    let neg = |p: &Pair<_>| Pair::new(ring.neg(&p.left), ring.neg(&p.right));
    let xs = star(&x);
    let ny = neg(&y);
    let outer = [
        (h.neg(eps), star(&h1.eval(&ring, &xs, &ny))),
        (beta, neg(&h1.eval(&ring, &y, &xs))),
    ];
    for (rho, want) in outer {
        assert_eq!(tr.standard_commutation_map(md, gamma, rho).unwrap().to_poly(), want, "rho = {}", h.label(rho));
    }
    // The alpha factor is -h2(x*, -y): conjugating gamma to alpha by
    // w_alpha w_epsilon negates both components. The variant with
    // an extra involution on this factor does not hold.
    let middle = tr.standard_commutation_map(md, gamma, alpha).unwrap().to_poly();
    assert_eq!(middle, neg(&h2.eval(&ring, &xs, &ny)));
    assert_ne!(middle, neg(&star(&h2.eval(&ring, &xs, &ny))));
    let pos = |r: &str| h.base_pos(r[3..].parse().unwrap()).unwrap();
    assert_eq!(tr.conjugate_root(gamma, &[pos("rho2"), pos("rho3")]), (alpha, SignPair(-1, -1)));
    let rows = extract_commutation_map(d6(), md, gamma).unwrap();
    let table = presentation(Kind::H3);
    let factors = table.commutators().find(|(z, x, _)| (*z, *x) == (md, gamma)).unwrap().2;
    for (row, (rho, f)) in rows.iter().zip(factors) {
        assert_eq!(row.rho, *rho);
        assert_eq!(row.value, f.to_poly());
    }
}

#[test]
fn relations_hold_in_d6_over_polynomials() {
    let ring = abcd_ring();
    let samples = vec![abcd_args(&ring)];
    for c in verify_in_model(presentation(Kind::H3), d6(), &ring, "poly", &samples, Coverage::Full) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn relations_hold_in_d6_over_integers_and_z5() {
    let z = Integers;
    let p = |a: i64, b: i64| Pair::new(BigInt::from(a), BigInt::from(b));
    let samples = vec![(p(2, -3), p(5, 7)), (p(-1, 4), p(3, -2))];
    for c in verify_in_model(presentation(Kind::H3), d6(), &z, "z", &samples, Coverage::Full) {
        assert!(c.passed, "{c}");
    }
    let z5 = ZMod::new(5);
    let samples = vec![(Pair::new(2, 3), Pair::new(4, 1)), (Pair::new(0, 4), Pair::new(3, 3))];
    for c in verify_in_model(presentation(Kind::H3), d6(), &z5, "z5", &samples, Coverage::Full) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn relations_hold_in_e8_sampled() {
    let ring = abcd_ring();
    let samples = vec![abcd_args(&ring)];
    for c in verify_in_model(presentation(Kind::H4), e8(), &ring, "poly", &samples, Coverage::Sample(150)) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn corrupted_relation_is_detected() {
    let mut p = presentation(Kind::H3).clone();
    let slot = p.relations.iter_mut().find_map(|r| match r {
        Relation::Commutator { factors, .. } if !factors.is_empty() => Some(factors),
        _ => None,
    });
    let f = &mut slot.unwrap()[0].1;
    let m = f.left.or(f.right).unwrap();
    if let Some(l) = f.left.as_mut() {
        l.coeff = -l.coeff;
    } else {
        f.right = Some(hfold_steinberg::Monomial { coeff: -m.coeff, ..m });
    }
    let ring = abcd_ring();
    let checks = verify_in_model(&p, d6(), &ring, "poly", &[abcd_args(&ring)], Coverage::Full);
    let comm = checks.iter().find(|c| c.id.ends_with("commutator-relations")).unwrap();
    assert!(!comm.passed);
    assert!(comm.witness.as_ref().unwrap().starts_with("1 of"));
}

#[test]
fn mismatched_model_is_refused() {
    let ring = abcd_ring();
    let checks = verify_in_model(presentation(Kind::H4), d6(), &ring, "poly", &[abcd_args(&ring)], Coverage::Full);
    assert_eq!(checks.len(), 1);
    assert!(!checks[0].passed);
}

#[test]
fn weyl_parameters_over_z5_in_d6() {
    let m = d6();
    let h = m.h();
    let r = weyl_param_injectivity(m, h.base()[0], true);
    assert_eq!(r.images, 16);
    assert_eq!(r.distinct, 16);
    let s = r.surjectivity.as_ref().unwrap();
    assert_eq!(s.candidates, 15625);
    assert_eq!(s.weyl, 16);
    assert!(r.ok(), "{r:?}");
    for c in weyl_param_checks(m, Coverage::Full, Coverage::Sample(3)) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn weyl_parameters_over_z5_in_e8_sampled() {
    for c in weyl_param_checks(e8(), Coverage::Sample(2), Coverage::Sample(0)) {
        assert!(c.passed, "{c}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_reduced_words_transport_identically(e in 0usize..120, k in 0usize..22, seed in any::<u64>()) {
        use rand::SeedableRng;
        let tr = transporter(Kind::H3);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let w1 = tr.random_reduced_word(e, &mut rng);
        let w2 = tr.random_reduced_word(e, &mut rng);
        prop_assert_eq!(w1.len(), tr.weyl().length(e));
        let src = &tr.sources()[k];
        prop_assert_eq!(tr.transport(src, &w1), tr.transport(src, &w2));
    }

    #[test]
    fn formula_eval_matches_polynomial(k in 0usize..22, v in prop::array::uniform4(-9i64..9)) {
        let tr = transporter(Kind::H3);
        let f = tr.sources()[k].formula;
        let ring = abcd_ring();
        let z = Integers;
        let vals: Vec<BigInt> = v.iter().map(|&n| BigInt::from(n)).collect();
        let x = Pair::new(vals[0].clone(), vals[1].clone());
        let y = Pair::new(vals[2].clone(), vals[3].clone());
        let direct = f.eval(&z, &x, &y);
        let p = f.to_poly();
        let via = Pair::new(ring.eval(&p.left, &z, &vals, |c| c.clone()), ring.eval(&p.right, &z, &vals, |c| c.clone()));
        prop_assert_eq!(direct, via);
    }
}
