use std::sync::OnceLock;

use hfold_roots::{FoldingMap, Kind, RootSystem};
use proptest::prelude::*;

fn h4() -> &'static RootSystem {
    static S: OnceLock<RootSystem> = OnceLock::new();
    S.get_or_init(|| RootSystem::new(Kind::H4))
}

fn e8() -> &'static FoldingMap {
    static F: OnceLock<FoldingMap> = OnceLock::new();
    F.get_or_init(|| FoldingMap::new(Kind::E8).unwrap())
}

proptest! {
    #[test]
    fn reflections_are_isometric_involutions(a in 0usize..120, v in 0usize..120, w in 0usize..120) {
        let s = h4();
        prop_assert_eq!(s.reflect(s.reflect(v, a), a), v);
        prop_assert_eq!(s.ip(s.reflect(v, a), s.reflect(w, a)), s.ip(v, w));
        prop_assert_eq!(s.reflect(a, a), s.neg(a));
    }

    #[test]
    fn words_preserve_positions(word in prop::collection::vec(0usize..4, 0..12), x in 0usize..120, z in 0usize..120) {
        let s = h4();
        let (xw, zw) = (s.apply_word(x, &word), s.apply_word(z, &word));
        prop_assert_eq!(s.position_of(x, z), s.position_of(xw, zw));
    }

    #[test]
    fn goldfold_is_equivariant_along_words(word in prop::collection::vec(0usize..4, 0..10), a in 0usize..240) {
        let f = e8();
        let u = f.embed_weyl(&word);
        let lhs = f.goldfold(f.source().apply_word(a, &u));
        let rhs = f.gh().apply_word(f.goldfold(a), &word);
        prop_assert_eq!(lhs, rhs);
        // fiber order is preserved
        let b = f.fold(a);
        let fb = f.fiber(b);
        let fw = f.fiber(f.h().apply_word(b, &word));
        prop_assert_eq!(f.source().apply_word(fb.short, &u), fw.short);
        prop_assert_eq!(f.source().apply_word(fb.long, &u), fw.long);
    }
}

#[test]
fn interval_compatibility_e8() {
    let r = e8().check_interval_compatibility();
    assert_eq!(r.pairs_checked, 240 * 238);
    assert!(r.as_expected(), "{:?}", (r.pi_violations.len(), r.goldfold_cry_violations.len(), r.pi_cry_violations.len()));
}
