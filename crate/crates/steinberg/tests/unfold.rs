use hfold_chevalley::{standard_model, ChevalleyModel, Coverage};
use hfold_rings::PolyRing;
use hfold_roots::Kind;
use hfold_steinberg::{unfold_and_verify, UnfoldOptions, UnfoldedGrading};

fn d6() -> &'static ChevalleyModel {
    standard_model(Kind::D6).unwrap()
}

#[test]
fn d6_unfolding_suite_passes() {
    let checks = unfold_and_verify(d6(), UnfoldOptions::full());
    assert_eq!(checks.len(), 6);
    for c in &checks {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn e8_unfolding_suite_sampled() {
    let opts = UnfoldOptions { pairs: Coverage::Sample(400), weyl_roots: Coverage::Sample(6) };
    for c in unfold_and_verify(standard_model(Kind::E8).unwrap(), opts) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn unfolded_generators_are_source_root_elements() {
    let m = d6();
    let g = UnfoldedGrading::new(m);
    let ring = PolyRing::integer(&["r"]);
    let r = ring.var(0);
    let mut short = 0;
    for xi in 0..m.source().len() {
        let x = g.elem(&ring, xi, &r);
        assert_eq!(x, m.root_elem(&ring, xi, &r));
        assert_eq!(g.param(&ring, &x, xi), Some(r.clone()));
        short += usize::from(g.is_short(xi));
    }
    assert_eq!(short, 30);
}
