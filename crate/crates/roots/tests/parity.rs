use hfold_rings::SignPair;
use hfold_roots::{check_parity_properties, Kind, ParityTable, ParityViolation, RootSystem};

#[test]
fn embedded_tables_satisfy_all_properties() {
    for k in [Kind::H3, Kind::H4] {
        let s = RootSystem::new(k);
        let t = ParityTable::standard(&s).unwrap();
        let r = check_parity_properties(&s, &t);
        assert!(r.all_ok(), "{k}: {:?}", &r.violations[..r.violations.len().min(5)]);
        assert!(r.braid_checked > 0 && r.adjacency_checked > 0);
    }
}

#[test]
fn completeness_witnesses_generate_the_group() {
    let s = RootSystem::new(Kind::H3);
    let t = ParityTable::standard(&s).unwrap();
    let r = check_parity_properties(&s, &t);
    assert!(r.complete());
    let values: Vec<SignPair> = r.completeness_witnesses.iter().map(|w| w.1).collect();
    assert!(values.contains(&SignPair(-1, -1)));
    assert!(values.contains(&SignPair(-1, 1)));
    for (w, v) in &r.completeness_witnesses {
        assert_eq!(t.extend(&s, r.completeness_root, w), *v);
        let end = w.0.iter().fold(r.completeness_root, |a, &(p, _)| s.reflect(a, s.base()[p]));
        assert_eq!(end, r.completeness_root, "witness words stabilise the root");
    }
}

#[test]
fn flipped_entry_breaks_braid_invariance() {
    let s = RootSystem::new(Kind::H3);
    let clean = ParityTable::standard(&s).unwrap();
    assert!(check_parity_properties(&s, &clean).braid_ok());
    for root in 0..s.npos() {
        for pos in 0..3 {
            let mut t = clean.clone();
            let v = t.get(root, pos);
            t.set(root, pos, SignPair(-v.0, v.1));
            t.set(s.neg(root), pos, SignPair(-v.0, v.1));
            let r = check_parity_properties(&s, &t);
            assert!(
                r.violations.iter().any(|v| matches!(v, ParityViolation::Braid { .. })),
                "flip at {} / {pos} went unnoticed",
                s.label(root)
            );
        }
    }
}

#[test]
fn negation_rule_detected() {
    let s = RootSystem::new(Kind::H3);
    let mut t = ParityTable::standard(&s).unwrap();
    let v = t.get(0, 0);
    t.set(0, 0, SignPair(v.0, -v.1));
    assert!(!check_parity_properties(&s, &t).negation_ok());
}
