//! The six elementary blueprint rewriting rules for H3.

use std::fmt;

use crate::algebra::SAlgebra;
use crate::maps::{CommutationMaps, Psi, Q};
use crate::word::{braid_word, coxeter_exponent, render, Letters, Move};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    R12,
    R21,
    R13,
    R31,
    R23,
    R32,
}

impl RuleId {
    pub const ALL: [RuleId; 6] = [RuleId::R12, RuleId::R21, RuleId::R13, RuleId::R31, RuleId::R23, RuleId::R32];

    /// The rule for a braid block starting with `s, t`.
    pub fn for_letters(s: u8, t: u8) -> Option<RuleId> {
        Some(match (s, t) {
            (1, 2) => RuleId::R12,
            (2, 1) => RuleId::R21,
            (1, 3) => RuleId::R13,
            (3, 1) => RuleId::R31,
            (2, 3) => RuleId::R23,
            (3, 2) => RuleId::R32,
            _ => return None,
        })
    }

    pub fn letters(self) -> (u8, u8) {
        match self {
            RuleId::R12 => (1, 2),
            RuleId::R21 => (2, 1),
            RuleId::R13 => (1, 3),
            RuleId::R31 => (3, 1),
            RuleId::R23 => (2, 3),
            RuleId::R32 => (3, 2),
        }
    }

    pub fn source(self) -> Letters {
        let (s, t) = self.letters();
        braid_word(coxeter_exponent(s, t), s, t)
    }

    pub fn target(self) -> Letters {
        let (s, t) = self.letters();
        braid_word(coxeter_exponent(s, t), t, s)
    }

    pub fn inverse(self) -> RuleId {
        let (s, t) = self.letters();
        RuleId::for_letters(t, s).expect("distinct letters")
    }

    pub fn name(self) -> String {
        let (s, t) = self.letters();
        format!("r{s}{t}")
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A word with one coordinate in `S` per letter.
#[derive(Clone, Debug, PartialEq)]
pub struct BlueprintState<E> {
    pub word: Letters,
    pub values: Vec<E>,
}

impl<E> BlueprintState<E> {
    pub fn new(word: Letters, values: Vec<E>) -> Self {
        assert_eq!(word.len(), values.len(), "one value per letter");
        BlueprintState { word, values }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{rule} needs {expected} at position {start}, found {found}")]
pub struct PatternMismatch {
    pub rule: RuleId,
    pub start: usize,
    pub expected: String,
    pub found: String,
}

/// Evaluates a rule on the coordinates of its source block.
pub fn rule_values<A: SAlgebra, M: CommutationMaps<A>>(rule: RuleId, alg: &A, maps: &M, x: &[A::E]) -> Vec<A::E> {
    assert_eq!(x.len(), rule.source().len(), "block length");
    match rule {
        RuleId::R12 => {
            let (a, b, c) = (&x[0], &x[1], &x[2]);
            vec![c.clone(), alg.sub(&alg.neg(b), &alg.mul(c, a)), a.clone()]
        }
        RuleId::R21 => {
            let (a, b, c) = (&x[0], &x[1], &x[2]);
            vec![c.clone(), alg.sub(&alg.neg(b), &alg.mul(a, c)), a.clone()]
        }
        RuleId::R13 | RuleId::R31 => vec![x[1].clone(), x[0].clone()],
        RuleId::R23 => r23(alg, maps, x),
        RuleId::R32 => r32(alg, maps, x),
    }
}

fn r23<A: SAlgebra, M: CommutationMaps<A>>(alg: &A, maps: &M, x: &[A::E]) -> Vec<A::E> {
    use Q::*;
    let psi = |z, xi, r, u: &A::E, v: &A::E| maps.psi(alg, Psi::new(z, xi, r), u, v);
    let sum = |xs: &[A::E]| xs.iter().skip(1).fold(xs[0].clone(), |acc, t| alg.add(&acc, t));
    let (a, b, c, d, e) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
    let mb = alg.neg(b);
    let p_db = psi(Delta, Alpha, Some(Beta), &mb, e);
    let inner = alg.sub(&alg.add(&psi(Epsilon, Alpha, Some(Beta), a, e), &psi(Gamma, Alpha, None, c, e)), d);
    let big_b = alg.neg(&alg.star(&alg.add(&p_db, &inner)));
    let eag = psi(Epsilon, Alpha, Some(Gamma), a, e);
    let ebg = psi(Epsilon, Beta, Some(Gamma), a, &inner);
    let big_c = alg.neg(&sum(&[
        psi(Delta, Alpha, Some(Gamma), &mb, e),
        psi(Delta, Beta, None, &mb, &p_db),
        eag.clone(),
        ebg.clone(),
        psi(Delta, Beta, None, &alg.add(&mb, &psi(Epsilon, Alpha, Some(Delta), a, e)), &inner),
        c.clone(),
    ]));
    let big_d = alg.neg(&alg.star(&sum(&[
        mb.clone(),
        psi(Epsilon, Alpha, Some(Delta), a, e),
        psi(Epsilon, Beta, Some(Delta), a, &inner),
        psi(Epsilon, Gamma, None, a, &sum(&[ebg, eag, c.clone()])),
    ])));
    vec![e.clone(), big_b, big_c, big_d, a.clone()]
}

fn r32<A: SAlgebra, M: CommutationMaps<A>>(alg: &A, maps: &M, x: &[A::E]) -> Vec<A::E> {
    use Q::*;
    let psi = |z, xi, r, u: &A::E, v: &A::E| maps.psi(alg, Psi::new(z, xi, r), u, v);
    let sum = |xs: &[A::E]| xs.iter().skip(1).fold(xs[0].clone(), |acc, t| alg.add(&acc, t));
    let (a, b, c, d, e) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
    let mbs = alg.neg(&alg.star(b));
    let p_bd = psi(Beta, Epsilon, Some(Delta), &mbs, e);
    let inner = sum(&[psi(Alpha, Epsilon, Some(Delta), a, e), psi(Gamma, Epsilon, None, &alg.neg(c), e), alg.neg(&alg.star(d))]);
    let big_b = alg.neg(&alg.add(&p_bd, &inner));
    let aeg = psi(Alpha, Epsilon, Some(Gamma), a, e);
    let adg = psi(Alpha, Delta, Some(Gamma), a, &inner);
    let big_c = sum(&[
        psi(Beta, Epsilon, Some(Gamma), &mbs, e),
        psi(Beta, Delta, None, &mbs, &p_bd),
        psi(Beta, Delta, None, &alg.add(&mbs, &psi(Alpha, Epsilon, Some(Beta), a, e)), &inner),
        adg.clone(),
        aeg.clone(),
        alg.neg(c),
    ]);
    let big_d = alg.neg(&sum(&[
        mbs.clone(),
        psi(Alpha, Epsilon, Some(Beta), a, e),
        psi(Alpha, Delta, Some(Beta), a, &inner),
        psi(Alpha, Gamma, None, a, &sum(&[adg, aeg, alg.neg(c)])),
    ]));
    vec![e.clone(), big_b, big_c, big_d, a.clone()]
}

/// Applies `rule` to the block of `state` starting at `start`.
pub fn apply_rule<A: SAlgebra, M: CommutationMaps<A>>(
    rule: RuleId,
    state: &BlueprintState<A::E>,
    start: usize,
    alg: &A,
    maps: &M,
) -> Result<BlueprintState<A::E>, PatternMismatch> {
    let src = rule.source();
    let end = start + src.len();
    if end > state.word.len() || state.word[start..end] != src[..] {
        let found = render(&state.word[start.min(state.word.len())..end.min(state.word.len())]);
        return Err(PatternMismatch { rule, start, expected: render(&src), found });
    }
    let out = rule_values(rule, alg, maps, &state.values[start..end]);
    let mut word = state.word.clone();
    word[start..end].copy_from_slice(&rule.target());
    let mut values = state.values.clone();
    values.splice(start..end, out);
    Ok(BlueprintState { word, values })
}

/// Applies the rule realising an elementary braid move.
pub fn apply_move<A: SAlgebra, M: CommutationMaps<A>>(
    mv: Move,
    state: &BlueprintState<A::E>,
    alg: &A,
    maps: &M,
) -> Result<BlueprintState<A::E>, PatternMismatch> {
    let rule = RuleId::for_letters(mv.s, mv.t).expect("braid move letters");
    apply_rule(rule, state, mv.start, alg, maps)
}
