use hfold_chevalley::{is_weyl, standard_model, ChevalleyModel, ModelError, SparseMatrix};
use hfold_rings::{Integers, PolyRing, Ring, ZMod};
use hfold_roots::Kind;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;

fn d6() -> &'static ChevalleyModel {
    standard_model(Kind::D6).unwrap()
}

fn naive(kind: Kind) -> &'static ChevalleyModel {
    static A4: OnceLock<ChevalleyModel> = OnceLock::new();
    static D6: OnceLock<ChevalleyModel> = OnceLock::new();
    let cell = if kind == Kind::A4 { &A4 } else { &D6 };
    cell.get_or_init(|| ChevalleyModel::new(kind).unwrap())
}

fn by_ambient(model: &ChevalleyModel, label: &str) -> usize {
    let src = model.source();
    (0..src.len()).find(|&i| src.ambient_label(i).as_deref() == Some(label)).unwrap()
}

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn a4_root_element_is_elementary_matrix() {
    let m = naive(Kind::A4);
    let ring = PolyRing::integer(&["a"]);
    let a = ring.var(0);
    let x = m.root_elem(&ring, by_ambient(m, "e_1-e_2"), &a);
    let mut expected = SparseMatrix::identity(&ring, 5);
    expected.add_entry(&ring, 0, 1, &a);
    assert_eq!(x, expected);
}

#[test]
fn d6_root_elements_follow_block_formulas() {
    let m = naive(Kind::D6);
    let ring = PolyRing::integer(&["l"]);
    let l = ring.var(0);
    let id = || SparseMatrix::identity(&ring, 12);
    let mut plus = id();
    plus.add_entry(&ring, 0, 7, &l);
    plus.add_entry(&ring, 1, 6, &ring.neg(&l));
    assert_eq!(m.root_elem(&ring, by_ambient(m, "e_1+e_2"), &l), plus);
    let mut minus = id();
    minus.add_entry(&ring, 7, 0, &l);
    minus.add_entry(&ring, 6, 1, &ring.neg(&l));
    assert_eq!(m.root_elem(&ring, by_ambient(m, "-e_1-e_2"), &l), minus);
    let mut diff = id();
    diff.add_entry(&ring, 2, 4, &l);
    diff.add_entry(&ring, 10, 8, &ring.neg(&l));
    assert_eq!(m.root_elem(&ring, by_ambient(m, "e_3-e_5"), &l), diff);
}

#[test]
fn twist_negates_the_argument() {
    let m = d6();
    let t = m.twist_set();
    assert_eq!(t.len(), 1);
    let a = t[0];
    let plain = naive(Kind::D6);
    for b in [a, m.source().neg(a)] {
        assert_eq!(m.root_elem(&Integers, b, &z(3)), plain.root_elem(&Integers, b, &z(-3)));
    }
}

#[test]
fn weyl_inverse_is_weyl_of_negated_argument() {
    let z5 = ZMod::new(5);
    for kind in [Kind::A4, Kind::D6] {
        let m = standard_model(kind).unwrap();
        for a in 0..m.source().len() {
            for r in z5.units() {
                let w = m.weyl_elem(&z5, a, &r).unwrap();
                let wi = m.weyl_elem(&z5, a, &z5.neg(&r)).unwrap();
                assert!(w.mul(&z5, &wi).is_identity(&z5), "{kind} root {a} r = {r}");
            }
        }
    }
}

#[test]
fn non_unit_weyl_argument_rejected() {
    let m = d6();
    assert!(matches!(m.weyl_elem(&Integers, 0, &z(2)), Err(ModelError::NonUnit(_))));
    assert!(matches!(m.folded_weyl(&ZMod::new(6), 0, &1, &3), Err(ModelError::NonUnit(_))));
}

#[test]
fn source_weyl_elements_permute_root_groups() {
    let m = d6();
    for a in 0..m.source().len() {
        let w = m.weyl_word(&Integers, a, &z(1)).unwrap();
        assert!(is_weyl(m, a, &w), "root {a}");
    }
    let x = vec![(0, z(1))];
    assert!(!is_weyl(m, 0, &x), "a root element is not a Weyl element");
}

#[test]
fn folded_braid_relation_h3() {
    let m = d6();
    let h = m.h();
    let (r1, r2) = (h.base()[0], h.base()[1]);
    let w = |b: usize| m.standard_weyl_word(&Integers, b);
    let lhs: Vec<_> = [w(r1), w(r2), w(r1)].concat();
    let rhs: Vec<_> = [w(r2), w(r1), w(r2)].concat();
    assert_eq!(m.eval(&Integers, &lhs), m.eval(&Integers, &rhs));
    let (r2, r3) = (h.base()[1], h.base()[2]);
    let lhs: Vec<_> = [w(r2), w(r3), w(r2), w(r3), w(r2)].concat();
    let rhs: Vec<_> = [w(r3), w(r2), w(r3), w(r2), w(r3)].concat();
    assert_eq!(m.eval(&Integers, &lhs), m.eval(&Integers, &rhs));
}

#[test]
fn folded_weyl_factors_commute() {
    let m = d6();
    let z5 = ZMod::new(5);
    for beta in 0..m.h().len() {
        let f = m.fiber(beta);
        let a = m.weyl_elem(&z5, f.short, &2).unwrap();
        let b = m.weyl_elem(&z5, f.long, &3).unwrap();
        assert_eq!(a.mul(&z5, &b), b.mul(&z5, &a));
        assert_eq!(m.folded_weyl(&z5, beta, &2, &3).unwrap(), a.mul(&z5, &b));
    }
}

proptest! {
    #[test]
    fn root_elements_are_additive(kind in prop::sample::select(vec![Kind::A4, Kind::D6]), a in 0usize..60, r in -50i64..50, s in -50i64..50) {
        let m = standard_model(kind).unwrap();
        let a = a % m.source().len();
        let x = m.root_elem(&Integers, a, &z(r)).mul(&Integers, &m.root_elem(&Integers, a, &z(s)));
        prop_assert_eq!(x, m.root_elem(&Integers, a, &z(r + s)));
    }

    #[test]
    fn folded_elements_split(beta in 0usize..30, r in -20i64..20, s in -20i64..20) {
        let m = d6();
        let x = m.folded_elem(&Integers, beta, &z(r), &z(0)).mul(&Integers, &m.folded_elem(&Integers, beta, &z(0), &z(s)));
        prop_assert_eq!(x, m.folded_elem(&Integers, beta, &z(r), &z(s)));
    }

    #[test]
    fn folded_elements_injective(beta in 0usize..30, p in (-20i64..20, -20i64..20), q in (-20i64..20, -20i64..20)) {
        let m = d6();
        let x = m.folded_elem(&Integers, beta, &z(p.0), &z(p.1));
        let y = m.folded_elem(&Integers, beta, &z(q.0), &z(q.1));
        prop_assert_eq!(x == y, p == q);
        let back = m.as_folded_elem(&Integers, &x, beta).unwrap();
        prop_assert_eq!((back.left, back.right), (z(p.0), z(p.1)));
    }

    #[test]
    fn e8_root_elements_are_additive(a in 0usize..240, r in -9i64..9, s in -9i64..9) {
        let m = standard_model(Kind::E8).unwrap();
        let x = m.root_elem(&Integers, a, &z(r)).mul(&Integers, &m.root_elem(&Integers, a, &z(s)));
        prop_assert_eq!(x, m.root_elem(&Integers, a, &z(r + s)));
    }
}
