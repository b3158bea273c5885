//! Checking rewriting rules against the blueprint invariant in a folded
//! matrix model.

use hfold_chevalley::{ChevalleyModel, SparseMatrix, Word};
use hfold_rings::{Integers, Pair, PairRing, Poly, PolyRing, Ring};
use num_bigint::BigInt;

use crate::maps::CommutationMaps;
use crate::rules::{rule_values, RuleId};

type P = Poly<BigInt>;

/// The root of H with base label `letter`.
pub fn letter_root(model: &ChevalleyModel, letter: u8) -> usize {
    let h = model.h();
    h.base()[h.base_pos(letter as usize).expect("base label")]
}

/// `gamma_f(g_1, ..., g_m) = w_{d_1} g_1 ... w_{d_m} g_m` with the standard
/// Weyl elements `w(1, 1)` and `g_i = theta_{d_i}(x_i)`.
pub fn blueprint_invariant<R: Ring>(model: &ChevalleyModel, ring: &R, word: &[u8], values: &[Pair<R::Elem>]) -> SparseMatrix<R::Elem> {
    let mut w: Word<R::Elem> = Vec::new();
    for (&l, x) in word.iter().zip(values) {
        let d = letter_root(model, l);
        w.extend(model.standard_weyl_word(ring, d));
        w.extend(model.folded_word::<R>(d, &x.left, &x.right));
    }
    model.eval(ring, &w)
}

/// Outcome of validating one rule.
#[derive(Clone, Debug)]
pub struct RuleValidation {
    pub rule: RuleId,
    /// The invariant is preserved.
    pub preserved: bool,
    /// The reverse rule undoes the rule.
    pub inverted: bool,
    pub witness: Option<String>,
}

impl RuleValidation {
    pub fn ok(&self) -> bool {
        self.preserved && self.inverted
    }
}

/// The ring `Z[a1, b1, ..., am, bm]` and the generic block `((a_i, b_i))`.
pub fn generic_block(m: usize) -> (PolyRing<Integers>, Vec<Pair<P>>) {
    let names: Vec<String> = (1..=m).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let ring = PolyRing::integer(&names);
    let vals = (0..m).map(|i| Pair::new(ring.var(2 * i), ring.var(2 * i + 1))).collect();
    (ring, vals)
}

/// Checks `gamma_target(rule(x)) = gamma_source(x)` over a polynomial ring
/// with two variables per letter, and that the reverse rule inverts `rule`.
pub fn validate_rule_in_model<M>(rule: RuleId, model: &ChevalleyModel, maps: &M) -> RuleValidation
where
    M: CommutationMaps<PairRing<PolyRing<Integers>>>,
{
    let src = rule.source();
    let (ring, x) = generic_block(src.len());
    let s = PairRing::new(ring.clone());
    let y = rule_values(rule, &s, maps, &x);
    let lhs = blueprint_invariant(model, &ring, &src, &x);
    let rhs = blueprint_invariant(model, &ring, &rule.target(), &y);
    let back = rule_values(rule.inverse(), &s, maps, &y);
    let preserved = lhs == rhs;
    let inverted = back == x;
    let mut witness = Vec::new();
    if !preserved {
        if let Some((i, j)) = lhs.first_difference(&ring, &rhs) {
            let show = |m: &SparseMatrix<P>| m.get(i, j).map(|v| ring.render(v)).unwrap_or_else(|| "0".into());
            witness.push(format!("entry ({i},{j}): {} vs {}", show(&lhs), show(&rhs)));
        }
    }
    if !inverted {
        let bad = (0..x.len()).find(|&i| back[i] != x[i]).expect("some coordinate differs");
        witness.push(format!("{} does not invert it at coordinate {}: {}", rule.inverse(), bad + 1, Ring::render(&s, &back[bad])));
    }
    RuleValidation { rule, preserved, inverted, witness: (!witness.is_empty()).then(|| witness.join("; ")) }
}
