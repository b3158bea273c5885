use hfold_blueprint::{
    check_identities_1_35, dag_size, eval_term, leading_difference, poly_initial, render, run_polynomial, run_terms, validate_cycle,
    validate_rule_in_model, verify_ring_structure, H3Context, HomotopyCycle, RuleId, SAlgebra, StandardMaps, HOMOTOPY_CYCLE, H1,
};
use hfold_chevalley::standard_model;
use hfold_roots::Kind;

#[test]
fn embedded_cycle_is_valid() {
    let cycle = HomotopyCycle::embedded();
    assert_eq!(cycle.len(), 63);
    let ctx = H3Context::new().unwrap();
    let rep = validate_cycle(&cycle, &ctx);
    assert!(rep.ok(), "{:?}", rep.failures);
    assert_eq!(rep.moves.len(), 62);
    assert_eq!(render(cycle.word(0)), "323231232312321");
    assert_eq!(cycle.word(0), cycle.word(62));
}

#[test]
fn longest_element_has_length_15() {
    let ctx = H3Context::new().unwrap();
    let w0 = ctx.longest();
    assert_eq!(ctx.weyl.length(w0), 15);
    assert_eq!(ctx.element(HomotopyCycle::embedded().word(0)), w0);
}

#[test]
fn transposed_letter_is_caught_at_its_index() {
    let mut lines: Vec<String> = HOMOTOPY_CYCLE.iter().map(|s| s.to_string()).collect();
    let plain: Vec<char> = lines[9].chars().collect();
    let k = plain.iter().rposition(|c| c.is_ascii_digit()).unwrap();
    let mut w = plain.clone();
    w.swap(k - 1, k);
    lines[9] = w.into_iter().collect();
    let cycle = HomotopyCycle::from_marked(&lines).unwrap();
    let rep = validate_cycle(&cycle, &H3Context::new().unwrap());
    assert!(!rep.ok());
    let steps: Vec<usize> = rep.failures.iter().map(|f| f.0).collect();
    assert!(steps.contains(&10), "{:?}", rep.failures);
    assert!(steps.iter().all(|&s| s == 9 || s == 10), "{:?}", rep.failures);
}

#[test]
fn blueprint_identities_vanish() {
    let (s, ids) = run_polynomial(&HomotopyCycle::embedded(), &StandardMaps::reference()).unwrap();
    assert_eq!(ids.len(), 15);
    for r in &ids {
        let d = SAlgebra::sub(&s, &r.left, &r.right);
        assert!(r.verified, "{}: {:?}", r.label, leading_difference(&s, &d));
    }
}

#[test]
fn sabotaged_sign_breaks_the_run() {
    let maps = StandardMaps::reference().sabotaged(H1);
    let (_, ids) = run_polynomial(&HomotopyCycle::embedded(), &maps).unwrap();
    assert!(ids.iter().any(|r| !r.verified));
    let m = standard_model(Kind::D6).unwrap();
    assert!(!validate_rule_in_model(RuleId::R32, m, &maps).preserved);
}

#[test]
fn model_extracted_maps_equal_reference() {
    let m = standard_model(Kind::D6).unwrap();
    let a = StandardMaps::from_model(m).unwrap();
    let b = StandardMaps::reference();
    assert_eq!(a.names(), b.names());
    for p in a.names() {
        assert_eq!(a.formula(p), b.formula(p), "{p}");
    }
}

#[test]
fn term_emission_evaluates_to_zero() {
    let cycle = HomotopyCycle::embedded();
    let terms = run_terms(&cycle).unwrap();
    assert_eq!(terms.len(), 15);
    let (s, init) = poly_initial(15);
    let mut vals = vec![SAlgebra::zero(&s)];
    vals.extend(init);
    let maps = StandardMaps::reference();
    for r in &terms {
        assert!(dag_size(&r.left) > 0);
        let l = eval_term(&r.left, &s, &maps, &vals);
        let rr = eval_term(&r.right, &s, &maps, &vals);
        assert_eq!(l, rr, "{}", r.label);
    }
}

#[test]
fn identities_1_to_35_hold() {
    let (_, recs) = check_identities_1_35(&StandardMaps::reference());
    assert_eq!(recs.len(), 35);
    for r in &recs {
        assert!(r.verified, "{}", r.label);
    }
}

#[test]
fn ring_structure() {
    let checks = verify_ring_structure(&StandardMaps::reference(), None);
    assert_eq!(checks.len(), 9);
    for c in &checks {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn sabotaged_g_breaks_identities() {
    let (_, recs) = check_identities_1_35(&StandardMaps::reference().sabotaged(hfold_blueprint::G));
    assert!(recs.iter().any(|r| !r.verified));
}

#[test]
fn ring_structure_with_rank_four_relation() {
    let e8 = standard_model(Kind::E8).unwrap();
    let checks = verify_ring_structure(&StandardMaps::reference(), Some(e8));
    assert_eq!(checks.len(), 10);
    for c in &checks {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn emitted_terms_have_bounded_size() {
    let terms = run_terms(&HomotopyCycle::embedded()).unwrap();
    let alg = hfold_blueprint::TermAlgebra;
    let total: usize = terms.iter().map(|r| alg.render(&r.left).len() + alg.render(&r.right).len()).sum();
    eprintln!("rendered size {total}");
    assert!(total > 0);
}
