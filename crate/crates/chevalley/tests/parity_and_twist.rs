use hfold_chevalley::{
    check_reference_formulas, d6_twist_candidates, h3_restriction_mismatches, parity_mismatches, search_e8_twist, standard_model, ChevalleyModel,
    Gf2System,
};
use hfold_rings::SignPair;
use hfold_roots::{check_parity_properties, Kind, ParityTable};

fn d6_label(m: &ChevalleyModel, a: usize) -> String {
    m.source().ambient_label(a).unwrap()
}

#[test]
fn d6_twist_is_unique_simple_root() {
    let naive = ChevalleyModel::new(Kind::D6).unwrap();
    let c = d6_twist_candidates(&naive).unwrap();
    assert_eq!(c.len(), 1, "exactly one subset of the simple roots works");
    let delta6 = naive.source().base()[naive.source().base_pos(6).unwrap()];
    assert_eq!(c[0], vec![delta6]);
    assert_eq!(d6_label(&naive, delta6), "e_5+e_6");
    let failing: Vec<String> = check_reference_formulas(&naive).iter().filter(|f| !f.holds()).map(|f| f.spec.name()).collect();
    assert_eq!(failing, vec!["psi_{rho1,rho2}", "psi_{rho2,rho1}"], "the untwisted model differs only on the (rho1, rho2) pair");
}

#[test]
fn h3_parity_table_matches_reference() {
    let m = standard_model(Kind::D6).unwrap();
    let rows = m.parity_rows().unwrap();
    assert_eq!(rows.len() * rows[0].len(), 45);
    assert!(parity_mismatches(m, &rows).is_empty());
    let h = m.h();
    let at = |label: &str, rho: usize| rows[h.parse_label(label).unwrap()][h.base_pos(rho).unwrap()];
    assert_eq!(at("0,0,1", 2), SignPair(-1, -1));
    assert_eq!(at("1,1,0", 3), SignPair(1, 1));
    assert_eq!(at("tau,2tau,tau^2", 2), SignPair(-1, 1));
    assert_eq!(at("1,0,0", 1), SignPair(-1, -1));
    let table = m.parity_table().unwrap();
    assert_eq!(table, ParityTable::standard(h).unwrap());
    assert!(check_parity_properties(h, &table).all_ok());
}

#[test]
fn parity_of_negative_roots_equals_positive() {
    let m = standard_model(Kind::D6).unwrap();
    let h = m.h();
    for b in 0..h.npos() {
        for &rho in h.base() {
            assert_eq!(m.compute_parity(b, rho).unwrap(), m.compute_parity(h.neg(b), rho).unwrap());
        }
    }
}

#[test]
fn e8_chevalley_basis_satisfies_jacobi() {
    let m = ChevalleyModel::new(Kind::E8).unwrap();
    let sc = m.structure_constants().unwrap();
    assert_eq!(sc.dim(), 248);
    assert!(sc.jacobi_failures().is_empty());
    let src = m.source();
    for a in 0..src.len() {
        for b in 0..src.len() {
            if let Some(n) = sc.n(a, b) {
                assert_eq!(n.abs(), 1);
                assert_eq!(sc.n(b, a), Some(-n));
            }
        }
    }
}

#[test]
fn e8_twist_search_aligns_h4_parity() {
    let naive = ChevalleyModel::new(Kind::E8).unwrap();
    let s = search_e8_twist(&naive).unwrap();
    assert_eq!(s.free_variables, 8, "the free variables are the characters of the root lattice");
    let twisted = naive.with_twist(&s.twist.expect("consistent system"));
    let rows = twisted.parity_rows().unwrap();
    assert_eq!(rows.len() * rows[0].len(), 240);
    assert!(parity_mismatches(&twisted, &rows).is_empty());
    let h = twisted.h();
    let at = |label: &str, rho: usize| rows[h.parse_label(label).unwrap()][h.base_pos(rho).unwrap()];
    assert_eq!(at("0,0,0,1", 0), SignPair(1, 1));
    assert_eq!(at("1,0,0,0", 0), SignPair(-1, -1));
    assert_eq!(at("0,0,1,0", 3), SignPair(1, -1));
    assert_eq!(at("tau,tau^2,tau^2,tau^2", 3), SignPair(-1, 1));
}

#[test]
fn d6_table_is_restriction_of_e8_table() {
    let d6 = standard_model(Kind::D6).unwrap();
    let e8 = standard_model(Kind::E8).unwrap();
    let (r3, r4) = (d6.parity_rows().unwrap(), e8.parity_rows().unwrap());
    assert!(h3_restriction_mismatches(d6, &r3, e8, &r4).is_empty());
}

#[test]
fn gf2_solver() {
    let mut s = Gf2System::default();
    s.push(&[0, 1], true);
    s.push(&[1, 2], false);
    let (x, free) = s.solve(3).unwrap();
    assert_eq!(free, 1);
    assert!(x[0] ^ x[1]);
    assert!(!(x[1] ^ x[2]));
    s.push(&[0, 2], false);
    assert!(s.solve(3).is_none());
}
