//! The blueprint computation around the homotopy cycle.

use hfold_rings::{Integers, Pair, PairRing, Poly, PolyRing, Ring};
use num_bigint::BigInt;

use crate::algebra::{SAlgebra, Term, TermAlgebra};
use crate::maps::{CommutationMaps, Uninterpreted};
use crate::rules::{apply_move, BlueprintState, PatternMismatch};
use crate::word::{find_move, HomotopyCycle, Move};

/// One identity `left = right` with its label.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityRecord<E> {
    pub label: String,
    pub left: E,
    pub right: E,
    pub verified: bool,
}

/// States of both passes of a blueprint run.
#[derive(Clone, Debug)]
pub struct BlueprintRun<E> {
    /// `x_1, ..., x_32`.
    pub forward: Vec<BlueprintState<E>>,
    /// `x'_63, ..., x'_32`.
    pub backward: Vec<BlueprintState<E>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("step {step}: {reason}")]
    Cycle { step: usize, reason: String },
    #[error(transparent)]
    Pattern(#[from] PatternMismatch),
    #[error("expected {expected} initial values, got {got}")]
    Arity { expected: usize, got: usize },
}

impl<E: Clone> BlueprintRun<E> {
    pub fn meeting_point(&self) -> (&BlueprintState<E>, &BlueprintState<E>) {
        (self.forward.last().expect("nonempty"), self.backward.last().expect("nonempty"))
    }

    /// `y_i^{(32)} = y_i'^{(32)}` for each coordinate.
    pub fn identities<A: SAlgebra<E = E>>(&self, alg: &A) -> Vec<IdentityRecord<E>> {
        let (x, y) = self.meeting_point();
        x.values
            .iter()
            .zip(&y.values)
            .enumerate()
            .map(|(i, (l, r))| IdentityRecord {
                label: format!("raw-{}", i + 1),
                left: l.clone(),
                right: r.clone(),
                verified: alg.is_zero(&alg.sub(l, r)),
            })
            .collect()
    }
}

/// The moves `f_i -> f_{i+1}` for `i = 1, ..., 62`.
pub fn cycle_moves(cycle: &HomotopyCycle) -> Result<Vec<Move>, RunError> {
    (0..cycle.len() - 1)
        .map(|i| find_move(cycle.word(i), cycle.word(i + 1)).map_err(|reason| RunError::Cycle { step: i + 1, reason }))
        .collect()
}

/// Runs forward from `x_1` to `x_m` and backward from `x'_n = x_1` to
/// `x'_m`, where `n` is the cycle length and `m` the midpoint.
pub fn run_blueprint<A: SAlgebra, M: CommutationMaps<A>>(
    cycle: &HomotopyCycle,
    alg: &A,
    maps: &M,
    initial: Vec<A::E>,
) -> Result<BlueprintRun<A::E>, RunError> {
    let moves = cycle_moves(cycle)?;
    let n = cycle.len();
    let mid = n.div_ceil(2);
    if initial.len() != cycle.word(0).len() {
        return Err(RunError::Arity { expected: cycle.word(0).len(), got: initial.len() });
    }
    let x1 = BlueprintState::new(cycle.word(0).to_vec(), initial);
    let mut forward = vec![x1.clone()];
    for mv in &moves[..mid - 1] {
        let next = apply_move(*mv, forward.last().expect("nonempty"), alg, maps)?;
        forward.push(next);
    }
    let mut backward = vec![BlueprintState::new(cycle.word(n - 1).to_vec(), x1.values)];
    for mv in moves[mid - 1..].iter().rev() {
        let next = apply_move(mv.reverse(), backward.last().expect("nonempty"), alg, maps)?;
        backward.push(next);
    }
    Ok(BlueprintRun { forward, backward })
}

/// `Z[a1..a15, b1..b15]` and the initial coordinates `y_i = (a_i, b_i)`.
pub fn poly_initial(len: usize) -> (PairRing<PolyRing<Integers>>, Vec<Pair<Poly<BigInt>>>) {
    let names: Vec<String> = ["a", "b"].iter().flat_map(|p| (1..=len).map(move |i| format!("{p}{i}"))).collect();
    let ring = PolyRing::integer(&names);
    let vals = (0..len).map(|i| Pair::new(ring.var(i), ring.var(len + i))).collect();
    (PairRing::new(ring), vals)
}

/// The blueprint identities over the polynomial pair ring.
pub fn run_polynomial<M: CommutationMaps<PairRing<PolyRing<Integers>>>>(
    cycle: &HomotopyCycle,
    maps: &M,
) -> Result<(PairRing<PolyRing<Integers>>, Vec<IdentityRecord<Pair<Poly<BigInt>>>>), RunError> {
    let (s, init) = poly_initial(cycle.word(0).len());
    let run = run_blueprint(cycle, &s, maps, init)?;
    let ids = run.identities(&s);
    Ok((s, ids))
}

/// The blueprint identities as syntax trees in the indeterminates
/// `y_1, ..., y_15` with uninterpreted commutation maps.
pub fn run_terms(cycle: &HomotopyCycle) -> Result<Vec<IdentityRecord<Term>>, RunError> {
    let alg = TermAlgebra;
    let init = (1..=cycle.word(0).len()).map(|i| alg.var(i)).collect();
    let run = run_blueprint(cycle, &alg, &Uninterpreted, init)?;
    Ok(run.identities(&alg))
}

/// The leading term of the nonzero component of a difference.
pub fn leading_difference(s: &PairRing<PolyRing<Integers>>, d: &Pair<Poly<BigInt>>) -> Option<String> {
    let ring = s.base();
    [&d.left, &d.right].into_iter().enumerate().find(|(_, p)| !ring.is_zero(p)).map(|(k, p)| {
        let (m, c) = ring.leading_term(p).expect("nonzero");
        let side = if k == 0 { "left" } else { "right" };
        let mono = ring.render(&Poly::from([(*m, c.clone())]));
        format!("{side} component, leading term {mono}")
    })
}
