use hfold_chevalley::{
    expected_square_action, extremal_order, gh_relations, refinement, square_action_classify, square_actions, standard_model, verify_grading, weyl_pair_checks,
    ChevalleyModel, Coverage, GradingOptions, SquareAction,
};
use hfold_roots::{Kind, SubsystemType};

fn d6() -> &'static ChevalleyModel {
    standard_model(Kind::D6).unwrap()
}

#[test]
fn d6_grading_suite_passes() {
    let checks = verify_grading(d6(), GradingOptions::full());
    assert_eq!(checks.len(), 8);
    for c in &checks {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn a4_grading_suite_passes() {
    for c in verify_grading(standard_model(Kind::A4).unwrap(), GradingOptions::full()) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn e8_grading_suite_sampled() {
    let opts = GradingOptions {
        pairs: Coverage::Sample(60),
        weyl: Coverage::Sample(3),
        source_pairs: Coverage::Sample(300),
        gh_pairs: Coverage::Sample(300),
        product_samples: 2,
    };
    for c in verify_grading(standard_model(Kind::E8).unwrap(), opts) {
        assert!(c.passed, "{c}");
    }
}

#[test]
fn gh_relations_and_refinement_d6() {
    let m = d6();
    let gh = gh_relations(m, Coverage::Full);
    assert!(gh.passed, "{gh}");
    let r = refinement(m);
    assert!(r.passed, "{r}");
    let (conj, bij) = weyl_pair_checks(m);
    assert!(conj.passed, "{conj}");
    assert!(bij.passed, "{bij}");
}

#[test]
fn square_action_labels_by_span() {
    let m = d6();
    let h = m.h();
    let q = h.quintuple(h.base()[1], h.base()[2]).unwrap();
    let (alpha, beta, gamma) = (q[0], q[1], q[2]);
    assert_eq!(expected_square_action(h, alpha, beta), SquareAction::Star);
    assert_eq!(expected_square_action(h, alpha, gamma), SquareAction::StarInverse);
    assert_eq!(expected_square_action(h, h.base()[0], h.base()[1]), SquareAction::Inversion);
    assert_eq!(expected_square_action(h, alpha, alpha), SquareAction::Identity);
    let ortho = (0..h.len()).find(|&x| !h.proportional(x, alpha) && h.classify_span(x, alpha).unwrap() == SubsystemType::A1xA1).unwrap();
    assert_eq!(expected_square_action(h, ortho, alpha), SquareAction::Identity);
    for (xi, zeta) in [(alpha, beta), (alpha, gamma), (h.base()[0], h.base()[1]), (ortho, alpha), (alpha, h.neg(alpha))] {
        let r = square_action_classify(m, xi, zeta);
        assert_eq!(r.observed.len(), 16);
        assert!(r.ok(), "{r:?}");
    }
}

#[test]
fn square_actions_all_h3_pairs() {
    let (check, reports) = square_actions(d6());
    assert!(check.passed, "{check}");
    assert_eq!(reports.len(), 900);
    let star = reports.iter().filter(|r| r.expected == SquareAction::Star).count();
    let inv = reports.iter().filter(|r| r.expected == SquareAction::StarInverse).count();
    assert_eq!(star, inv);
    assert!(star > 0);
}

#[test]
fn extremal_order_starts_on_a_ray_of_the_cone() {
    let h = d6().h();
    let pos: Vec<usize> = (0..h.npos()).collect();
    let order = extremal_order(h, &pos);
    assert_eq!(order.len(), 15);
    assert!(h.base().contains(&order[0]));
    assert!(h.base().contains(&order[14]));
}
