use hfold_chevalley::{abcd_ring, check_reference_formulas, extract_commutation_map, nonproportional_pairs, resolve_name, standard_model, REFERENCE_FORMULAS};
use hfold_rings::{Pair, Ring};
use hfold_roots::Kind;

#[test]
fn d6_reproduces_every_h3_formula() {
    let m = standard_model(Kind::D6).unwrap();
    let checks = check_reference_formulas(m);
    assert_eq!(checks.len(), 22);
    for c in &checks {
        assert!(c.holds(), "{}", c.render());
    }
}

#[test]
fn e8_reproduces_every_formula() {
    let m = standard_model(Kind::E8).unwrap();
    let checks = check_reference_formulas(m);
    assert_eq!(checks.len(), REFERENCE_FORMULAS.len());
    for c in &checks {
        assert!(c.holds(), "{}", c.render());
    }
}

#[test]
fn named_examples() {
    let m = standard_model(Kind::D6).unwrap();
    let h = m.h();
    let ring = abcd_ring();
    let v = |s: &str| ring.var_named(s);
    let get = |z: &str, x: &str, rho: &str| {
        let (z, x, rho) = (resolve_name(h, z).unwrap(), resolve_name(h, x).unwrap(), resolve_name(h, rho).unwrap());
        extract_commutation_map(m, z, x).unwrap().into_iter().find(|r| r.rho == rho).unwrap().value
    };
    let abd = ring.mul(&ring.mul(&v("a"), &v("b")), &v("d"));
    assert_eq!(get("alpha", "epsilon", "beta"), Pair::new(ring.mul(&v("b"), &v("c")), abd));
    let rows = extract_commutation_map(m, resolve_name(h, "rho1").unwrap(), resolve_name(h, "rho2").unwrap()).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].value, Pair::new(ring.mul(&v("a"), &v("c")), ring.mul(&v("b"), &v("d"))));
    assert_eq!(get("alpha", "gamma", "beta"), Pair::new(ring.zero(), ring.mul(&v("a"), &v("c"))));
}

#[test]
fn commutation_maps_are_antisymmetric() {
    let m = standard_model(Kind::D6).unwrap();
    let ring = abcd_ring();
    let (x, y) = (Pair::new(ring.var(0), ring.var(1)), Pair::new(ring.var(2), ring.var(3)));
    for (z, xi) in nonproportional_pairs(m.h()) {
        let fwd = m.commutation_components(&ring, z, xi, &x, &y).unwrap();
        let back = m.commutation_components(&ring, xi, z, &y, &x).unwrap();
        assert_eq!(fwd.len(), back.len());
        for (rho, p) in fwd {
            let q = &back.iter().find(|(r, _)| *r == rho).unwrap().1;
            assert_eq!(p, Pair::new(ring.neg(&q.left), ring.neg(&q.right)));
        }
    }
}
