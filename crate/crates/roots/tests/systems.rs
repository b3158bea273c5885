use hfold_golden::GoldenRat;
use hfold_roots::{
    reflect, FoldingMap, Kind, ParityTable, Position, RootSystem, SignedWord, SubsystemType, WeylGroup,
};

fn g(a: i64, b: i64) -> GoldenRat {
    GoldenRat::from_ints(a, b, 1)
}

#[test]
fn cardinalities() {
    for k in Kind::ALL {
        let s = RootSystem::new(k);
        assert_eq!(s.len(), k.size(), "{k}");
        assert_eq!(s.npos() * 2, s.len());
    }
    assert_eq!(RootSystem::new(Kind::H3).len(), 30);
    assert_eq!(RootSystem::new(Kind::E8).len(), 240);
    assert_eq!(RootSystem::new(Kind::GH2).len(), 20);
}

#[test]
fn h_roots_have_unit_length() {
    for k in [Kind::H2, Kind::H3, Kind::H4] {
        let s = RootSystem::new(k);
        assert!((0..s.len()).all(|i| s.norm2(i).is_one()), "{k}");
    }
    let gh = RootSystem::new(Kind::GH3);
    let t2 = &GoldenRat::tau() * &GoldenRat::tau();
    assert!((0..gh.len()).all(|i| gh.norm2(i).is_one() || *gh.norm2(i) == t2));
}

#[test]
fn closed_under_reflections() {
    for k in Kind::ALL {
        let s = RootSystem::new(k);
        for a in 0..s.len() {
            for v in 0..s.len() {
                let img = s.reflect_coords(s.coords(v), a);
                assert_eq!(s.find(&img), Some(s.reflect(v, a)));
            }
        }
    }
}

#[test]
fn reflect_examples() {
    let h3 = RootSystem::new(Kind::H3);
    let (r2, r3) = (h3.base()[1], h3.base()[2]);
    let v = reflect(&h3.root(r2), &h3.root(r3), Some(h3.gram())).unwrap();
    // s_{rho3}(rho2) = rho2 - 2(rho2.rho3) rho3 with rho2.rho3 = -tau/2
    assert_eq!(v.coords, vec![g(0, 0), g(1, 0), g(0, 1)]);
    let a = h3.root(r2);
    let minus = reflect(&a, &a, Some(h3.gram())).unwrap();
    assert_eq!(h3.find_vec(&minus), Some(h3.neg(r2)));
    let zero = hfold_roots::RootVec { coords: vec![g(0, 0); 3], basis: a.basis };
    assert!(reflect(&a, &zero, Some(h3.gram())).is_err());
    let d6 = RootSystem::new(Kind::D6);
    let x = d6.root(3);
    let y = d6.root(10);
    let twice = reflect(&reflect(&x, &y, None).unwrap(), &y, None).unwrap();
    assert_eq!(twice, x);
}

#[test]
fn weyl_orders() {
    let expect = [(Kind::H2, 10), (Kind::H3, 120), (Kind::H4, 14400), (Kind::A4, 120), (Kind::D6, 23040)];
    for (k, n) in expect {
        let s = RootSystem::new(k);
        assert_eq!(WeylGroup::new(&s).unwrap().order(), n, "{k}");
    }
    assert!(WeylGroup::new(&RootSystem::new(Kind::E8)).is_err());
}

#[test]
fn weyl_transitive_on_h3() {
    let s = RootSystem::new(Kind::H3);
    let w = WeylGroup::new(&s).unwrap();
    assert_eq!(w.orbit(0).len(), 30);
}

#[test]
fn reflection_conjugation() {
    // s_{v^w} = (s_v)^w as root permutations.
    let s = RootSystem::new(Kind::H3);
    let w = WeylGroup::new(&s).unwrap();
    for e in 0..w.order() {
        let p = w.perm(e);
        let mut inv = vec![0usize; s.len()];
        for (j, &k) in p.iter().enumerate() {
            inv[k as usize] = j;
        }
        for v in 0..s.len() {
            let vw = p[v] as usize;
            for x in 0..s.len() {
                // x^{w^{-1} s_v w}
                let lhs = p[s.reflect(inv[x], v)] as usize;
                assert_eq!(s.reflect(x, vw), lhs);
            }
        }
    }
}

#[test]
fn longest_element_length() {
    let s = RootSystem::new(Kind::H3);
    let w = WeylGroup::new(&s).unwrap();
    assert_eq!(w.length(w.longest(&s)), 15);
}

#[test]
fn subsystem_counts_h3() {
    let s = RootSystem::new(Kind::H3);
    for a in 0..s.len() {
        for t in [SubsystemType::H2, SubsystemType::A2, SubsystemType::A1xA1] {
            assert_eq!(s.count_subsystems(a, t), 2, "root {} type {t}", s.label(a));
        }
        let all = s.subsystems_through(a);
        assert_eq!(all.len(), 6);
    }
    let (r2, r3) = (s.base()[1], s.base()[2]);
    assert_eq!(s.classify_span(r2, r3).unwrap(), SubsystemType::H2);
}

#[test]
fn interval_examples() {
    let s = RootSystem::new(Kind::H3);
    let (r1, r2, r3) = (s.base()[0], s.base()[1], s.base()[2]);
    let q = s.quintuple(r2, r3).unwrap();
    let c = |i: usize| s.coords(i).to_vec();
    assert_eq!(c(q[1]), vec![g(0, 0), g(0, 1), g(1, 0)]);
    assert_eq!(c(q[2]), vec![g(0, 0), g(0, 1), g(0, 1)]);
    assert_eq!(c(q[3]), vec![g(0, 0), g(1, 0), g(0, 1)]);
    let a2 = s.open_interval(r1, r2).unwrap();
    assert_eq!(a2.len(), 1);
    assert_eq!(c(a2[0]), vec![g(1, 0), g(1, 0), g(0, 0)]);
    assert!(s.open_interval(r1, r3).unwrap().is_empty());
    assert!(s.open_interval(r1, s.neg(r1)).is_err());
}

#[test]
fn interval_ordering_is_unique_labelling() {
    let s = RootSystem::new(Kind::H3);
    for a in 0..s.len() {
        for b in 0..s.len() {
            if s.proportional(a, b) {
                continue;
            }
            assert!(s.interval_nesting_holds(a, b).unwrap());
            let ord = s.open_interval(a, b).unwrap();
            // every other labelling breaks the nesting property
            for perm in permutations(&ord) {
                if perm == ord {
                    continue;
                }
                let mut chain = vec![a];
                chain.extend(&perm);
                chain.push(b);
                let ok = (0..chain.len()).all(|i| {
                    (i + 1..chain.len()).all(|j| {
                        let mut got = s.open_interval(chain[i], chain[j]).unwrap();
                        let mut want = chain[i + 1..j].to_vec();
                        got.sort();
                        want.sort();
                        got == want
                    })
                });
                assert!(!ok);
            }
        }
    }
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[test]
fn rank_two_subsystems_of_h3() {
    let s = RootSystem::new(Kind::H3);
    for a in 0..s.len() {
        for b in 0..s.len() {
            if !s.proportional(a, b) {
                assert!(matches!(s.plane_roots(a, b).unwrap().len(), 4 | 6 | 10));
            }
        }
    }
}

#[test]
fn positions() {
    let s = RootSystem::new(Kind::H3);
    let (r2, r3) = (s.base()[1], s.base()[2]);
    let q = s.quintuple(r2, r3).unwrap();
    assert_eq!(s.position_of(q[1], q[0]), Position::Involution);
    assert_eq!(s.position_of(q[4], q[0]), Position::Involution);
    assert_eq!(s.position_of(q[2], q[0]), Position::InvertedInvolution);
    assert_eq!(s.position_of(q[3], q[0]), Position::InvertedInvolution);
    assert_eq!(s.position_of(s.base()[0], r3), Position::NotH2);
    let w = WeylGroup::new(&s).unwrap();
    for e in 0..w.order() {
        for x in 0..s.len() {
            for z in 0..s.len() {
                assert_eq!(s.position_of(x, z), s.position_of(z, x));
                assert_eq!(s.position_of(x, z), s.position_of(w.act(e, x), w.act(e, z)));
            }
        }
    }
}

#[test]
fn e2_plus_membership() {
    let h2 = RootSystem::new(Kind::H2);
    assert_eq!(h2.e2_plus().len(), 5);
    let s = RootSystem::new(Kind::H3);
    let e2 = s.e2_plus();
    let r12 = s.find(&[g(1, 0), g(1, 0), g(0, 0)]).unwrap();
    assert!(e2.contains(&r12));
    // membership agrees with lying in the plane of some pair of base roots
    for i in 0..s.npos() {
        let mut in_plane = false;
        for p in 0..3 {
            for q in p + 1..3 {
                if s.plane_roots(s.base()[p], s.base()[q]).unwrap().contains(&i) {
                    in_plane = true;
                }
            }
        }
        assert_eq!(e2.contains(&i), in_plane, "{}", s.label(i));
    }
}

#[test]
fn parity_extend_examples() {
    let s = RootSystem::new(Kind::H3);
    let t = ParityTable::standard(&s).unwrap();
    let r2 = s.base()[1];
    use hfold_rings::SignPair;
    assert_eq!(t.extend(&s, r2, &SignedWord::default()), SignPair::ONE);
    assert_eq!(t.extend(&s, r2, &SignedWord::positive(&[0, 0])), SignPair(-1, -1));
    assert_eq!(t.extend(&s, r2, &SignedWord::positive(&[2, 2])), SignPair(-1, 1));
}

#[test]
fn fiber_tables_match_reference() {
    for k in [Kind::D6, Kind::E8] {
        let f = FoldingMap::new(k).unwrap();
        assert_eq!(f.diff_reference(), Vec::<String>::new(), "{k}");
    }
}

#[test]
fn fiber_invariants() {
    for k in [Kind::A4, Kind::D6, Kind::E8] {
        let f = FoldingMap::new(k).unwrap();
        let (src, h, gh) = (f.source(), f.h(), f.gh());
        let mut seen = vec![false; src.len()];
        for b in 0..h.len() {
            let e = f.fiber(b);
            assert!(src.ip(e.short, e.long).is_zero());
            assert_eq!(f.fold(e.short), b);
            assert_eq!(f.fold(e.long), b);
            let tau = GoldenRat::tau();
            let scaled: Vec<_> = gh.coords(f.goldfold(e.short)).iter().map(|x| x * &tau).collect();
            assert_eq!(gh.coords(f.goldfold(e.long)), scaled.as_slice());
            seen[e.short] = true;
            seen[e.long] = true;
        }
        assert!(seen.iter().all(|&x| x), "fibers partition {k}");
        let mut imgs: Vec<_> = (0..src.len()).map(|a| f.goldfold(a)).collect();
        imgs.sort();
        imgs.dedup();
        assert_eq!(imgs.len(), gh.len());
        assert!(f.equivariance_failures().is_empty(), "{k}");
    }
}

#[test]
fn fold_examples() {
    let f = FoldingMap::new(Kind::D6).unwrap();
    let h = f.h();
    let e12 = (0..f.source().len()).find(|&a| f.source_label(a) == "e_1-e_2").unwrap();
    assert_eq!(h.label(f.fold(e12)), "1,0,0");
    let d3 = f.source().base()[2];
    assert_eq!(f.gh().label(f.goldfold(d3)), "0,0,tau");
    let r1 = h.parse_label("1,0,0").unwrap();
    let e = f.fiber(r1);
    assert_eq!((f.source_label(e.short), f.source_label(e.long)), ("e_1-e_2".into(), "e_5+e_6".into()));
    let r3 = h.parse_label("0,0,1").unwrap();
    let e = f.fiber(r3);
    assert_eq!((f.source_label(e.short), f.source_label(e.long)), ("e_5-e_6".into(), "e_3-e_4".into()));
    assert_eq!(f.embed_weyl(&[0]), vec![0, 5]);
}

#[test]
fn weyl_embedding_on_reflections() {
    let f = FoldingMap::new(Kind::D6).unwrap();
    let (src, h) = (f.source(), f.h());
    let w = WeylGroup::new(h).unwrap();
    for e in 0..w.order() {
        let word = w.word(e);
        let u = f.embed_weyl_perm(&word);
        for b in 0..h.len() {
            // fiber(beta^w) = fiber(beta)^{u(w)}, short to short
            let fb = f.fiber(b);
            let fw = f.fiber(w.act(e, b));
            assert_eq!(u[fb.short] as usize, fw.short);
            assert_eq!(u[fb.long] as usize, fw.long);
        }
    }
    // u(s_beta) = s_{a1} s_{a2} with commuting factors
    for b in 0..h.len() {
        let fb = f.fiber(b);
        let hw = WeylGroup::new(h).unwrap();
        let target: Vec<u16> = (0..h.len()).map(|x| h.reflect(x, b) as u16).collect();
        let e = hw.find(&target).unwrap();
        let u = f.embed_weyl_perm(&hw.word(e));
        for a in 0..src.len() {
            let one = src.reflect(src.reflect(a, fb.short), fb.long);
            let two = src.reflect(src.reflect(a, fb.long), fb.short);
            assert_eq!(one, two);
            assert_eq!(u[a] as usize, one);
        }
    }
}

#[test]
fn interval_compatibility_d6() {
    let f = FoldingMap::new(Kind::D6).unwrap();
    let r = f.check_interval_compatibility();
    assert_eq!(r.pairs_checked, 60 * 58);
    assert!(r.pi_violations.is_empty());
    assert!(r.goldfold_violations.is_empty());
    assert!(r.goldfold_cry_violations.is_empty());
    assert!(!r.pi_cry_violations.is_empty());
    assert!(r.h_possys_failures.is_empty());
    assert!(r.gh_possys_failures.is_empty());
}
