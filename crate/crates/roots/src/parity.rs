use hfold_golden::GoldenRat;
use hfold_rings::SignPair;

use crate::data::{H3_PARITY, H4_PARITY};
use crate::kind::Kind;
use crate::system::RootSystem;
use crate::weyl::WeylGroup;

/// A word over `Delta` and `-Delta`: letters are `(base position, positive)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedWord(pub Vec<(usize, bool)>);

impl SignedWord {
    /// A word of positive letters.
    pub fn positive(letters: &[usize]) -> Self {
        SignedWord(letters.iter().map(|&p| (p, true)).collect())
    }

    /// `(d_1, ..., d_m)^{-1} = (-d_m, ..., -d_1)`.
    pub fn inverse(&self) -> Self {
        SignedWord(self.0.iter().rev().map(|&(p, s)| (p, !s)).collect())
    }

    pub fn concat(&self, other: &SignedWord) -> Self {
        SignedWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Renders with base labels, e.g. `(rho1,-rho3)`.
    pub fn render(&self, labels: &[usize]) -> String {
        let parts: Vec<_> = self
            .0
            .iter()
            .map(|&(p, s)| format!("{}rho{}", if s { "" } else { "-" }, labels[p]))
            .collect();
        format!("({})", parts.join(","))
    }
}

/// The braid word `(s, t, s, ...)` of length `m`.
pub fn braid_word(m: usize, s: usize, t: usize) -> Vec<usize> {
    (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect()
}

/// Values `eta(alpha, delta)` of a parity map on an H3 or H4 system, indexed
/// by root index and base position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityTable {
    kind: Kind,
    values: Vec<Vec<SignPair>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParityTableError {
    #[error("no reference parity table for {0}")]
    NoTable(Kind),
    #[error("reference row `{0}` is not a root")]
    BadRow(String),
}

impl ParityTable {
    /// A table from explicit values; `values[i][p]` is `eta(root i, base p)`.
    pub fn from_values(kind: Kind, values: Vec<Vec<SignPair>>) -> Self {
        ParityTable { kind, values }
    }

    /// The reference standard parity table, extended to negative roots by
    /// `eta(-alpha, delta) = eta(alpha, delta)`.
    pub fn standard(sys: &RootSystem) -> Result<Self, ParityTableError> {
        let rows: Vec<(&str, Vec<(i8, i8)>)> = match sys.kind() {
            Kind::H3 => H3_PARITY.iter().map(|(r, v)| (*r, v.to_vec())).collect(),
            Kind::H4 => H4_PARITY.iter().map(|(r, v)| (*r, v.to_vec())).collect(),
            k => return Err(ParityTableError::NoTable(k)),
        };
        let mut values = vec![vec![SignPair::ONE; sys.rank()]; sys.len()];
        for (label, v) in rows {
            let i = sys.parse_label(label).ok_or_else(|| ParityTableError::BadRow(label.to_string()))?;
            let v: Vec<SignPair> = v.into_iter().map(|(e, f)| SignPair(e, f)).collect();
            values[sys.neg(i)] = v.clone();
            values[i] = v;
        }
        Ok(ParityTable { kind: sys.kind(), values })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn get(&self, root: usize, pos: usize) -> SignPair {
        self.values[root][pos]
    }

    pub fn set(&mut self, root: usize, pos: usize, v: SignPair) {
        self.values[root][pos] = v;
    }

    pub fn row(&self, root: usize) -> &[SignPair] {
        &self.values[root]
    }

    /// `eta(alpha, w)` for a signed word, using
    /// `eta(alpha, -delta) = eta(alpha^{s_delta}, delta)^{-1}`.
    pub fn extend(&self, sys: &RootSystem, alpha: usize, w: &SignedWord) -> SignPair {
        let mut acc = SignPair::ONE;
        let mut cur = alpha;
        for &(p, positive) in &w.0 {
            let next = sys.reflect(cur, sys.base()[p]);
            acc = acc * if positive { self.get(cur, p) } else { self.get(next, p).inv() };
            cur = next;
        }
        acc
    }
}

/// A violated instance of a parity-map property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParityViolation {
    Braid { root: usize, s: usize, t: usize },
    Adjacency { root: usize, beta: usize, word: SignedWord },
    Incomplete { root: usize, generated: Vec<SignPair> },
    Negation { root: usize, pos: usize },
}

/// Outcome of the structural parity checks.
#[derive(Clone, Debug, Default)]
pub struct ParityReport {
    pub braid_checked: usize,
    pub adjacency_checked: usize,
    pub negation_checked: usize,
    pub completeness_root: usize,
    /// Stabilising words at the completeness root whose values generate the
    /// subgroup, in discovery order.
    pub completeness_witnesses: Vec<(SignedWord, SignPair)>,
    pub violations: Vec<ParityViolation>,
}

impl ParityReport {
    pub fn braid_ok(&self) -> bool {
        !self.violations.iter().any(|v| matches!(v, ParityViolation::Braid { .. }))
    }
    pub fn adjacency_ok(&self) -> bool {
        !self.violations.iter().any(|v| matches!(v, ParityViolation::Adjacency { .. }))
    }
    pub fn complete(&self) -> bool {
        !self.violations.iter().any(|v| matches!(v, ParityViolation::Incomplete { .. }))
    }
    pub fn negation_ok(&self) -> bool {
        !self.violations.iter().any(|v| matches!(v, ParityViolation::Negation { .. }))
    }
    pub fn all_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Coxeter order of `s_i s_j` for base positions `i != j`.
pub fn coxeter_order(sys: &RootSystem, i: usize, j: usize) -> usize {
    let g = &sys.gram()[i][j];
    if g.is_zero() {
        2
    } else if *g == GoldenRat::from_ints(-1, 0, 2) {
        3
    } else if *g == GoldenRat::from_ints(0, -1, 2) {
        5
    } else {
        panic!("unexpected Gram entry {g}")
    }
}

/// Parities of breadth-first words: `fwd[e][a] = eta(a, word(e))` and
/// `inv[e][a] = eta(a, word(e)^{-1})`, where the letters of `word(e)` all
/// carry the sign `positive`.
struct WordParities {
    fwd: Vec<Vec<SignPair>>,
    inv: Vec<Vec<SignPair>>,
}

fn word_parities(sys: &RootSystem, w: &WeylGroup, t: &ParityTable, positive: bool) -> WordParities {
    let n = sys.len();
    let mut fwd = vec![vec![SignPair::ONE; n]];
    let mut inv = vec![vec![SignPair::ONE; n]];
    for e in 1..w.order() {
        let (p, g) = w.parent(e).expect("non-identity element");
        let d = sys.base()[g];
        let f: Vec<SignPair> = (0..n)
            .map(|a| {
                let cur = w.act(p, a);
                let step = if positive { t.get(cur, g) } else { t.get(sys.reflect(cur, d), g).inv() };
                fwd[p][a] * step
            })
            .collect();
        let iv: Vec<SignPair> = (0..n)
            .map(|a| {
                let next = sys.reflect(a, d);
                // the inverse word starts with the letter g of opposite sign
                let step = if positive { t.get(next, g).inv() } else { t.get(a, g) };
                step * inv[p][next]
            })
            .collect();
        fwd.push(f);
        inv.push(iv);
    }
    WordParities { fwd, inv }
}

fn signed_word(w: &WeylGroup, e: usize, positive: bool) -> SignedWord {
    SignedWord(w.word(e).into_iter().map(|p| (p, positive)).collect())
}

/// Checks braid invariance, adjacency triviality, completeness at `rho_2`
/// and the negation rule for a parity table on H3 or H4.
///
/// Delta-expressions `(w^{-1}, delta, w)` of a root are enumerated with one
/// word per Weyl element, once with positive and once with negative letters.
pub fn check_parity_properties(sys: &RootSystem, t: &ParityTable) -> ParityReport {
    let w = WeylGroup::new(sys).expect("parity checks need an enumerable Weyl group");
    let n = sys.len();
    let r = sys.rank();
    let mut rep = ParityReport::default();

    for a in 0..n {
        for i in 0..r {
            for j in i + 1..r {
                let m = coxeter_order(sys, i, j);
                let lhs = t.extend(sys, a, &SignedWord::positive(&braid_word(m, i, j)));
                let rhs = t.extend(sys, a, &SignedWord::positive(&braid_word(m, j, i)));
                rep.braid_checked += 1;
                if lhs != rhs {
                    rep.violations.push(ParityViolation::Braid { root: a, s: i, t: j });
                }
            }
        }
    }

    for positive in [true, false] {
        let wp = word_parities(sys, &w, t, positive);
        for e in 0..w.order() {
            let perm = w.perm(e);
            let mut inv_perm = vec![0usize; n];
            for (j, &k) in perm.iter().enumerate() {
                inv_perm[k as usize] = j;
            }
            for d in 0..r {
                let beta = perm[sys.base()[d]] as usize;
                for a in 0..n {
                    if !sys.ip(a, beta).is_zero() {
                        continue;
                    }
                    let a1 = inv_perm[a];
                    let v = wp.inv[e][a] * t.get(a1, d) * wp.fwd[e][a1];
                    rep.adjacency_checked += 1;
                    if !v.is_one() {
                        let we = signed_word(&w, e, positive);
                        let word = we.inverse().concat(&SignedWord(vec![(d, true)])).concat(&we);
                        rep.violations.push(ParityViolation::Adjacency { root: a, beta, word });
                    }
                }
            }
        }
    }

    let root = sys.base()[sys.base_pos(2).expect("rho_2 is in the base")];
    rep.completeness_root = root;
    let wp = word_parities(sys, &w, t, true);
    let mut generated = vec![SignPair::ONE];
    'outer: for e in 0..w.order() {
        for g in 0..r {
            let d = sys.base()[g];
            let next: Vec<u16> = w.perm(e).iter().map(|&j| sys.reflection_perm(d)[j as usize]).collect();
            let e2 = w.find(&next).expect("closed under generators");
            let mid = w.act(e, root);
            let v = wp.fwd[e][root] * t.get(mid, g) * wp.inv[e2][sys.reflect(mid, d)];
            if !generated.contains(&v) {
                let word = signed_word(&w, e, true)
                    .concat(&SignedWord(vec![(g, true)]))
                    .concat(&signed_word(&w, e2, true).inverse());
                rep.completeness_witnesses.push((word, v));
                let old = generated.clone();
                for x in old {
                    let y = x * v;
                    if !generated.contains(&y) {
                        generated.push(y);
                    }
                }
                if generated.len() == 4 {
                    break 'outer;
                }
            }
        }
    }
    if generated.len() != 4 {
        generated.sort();
        rep.violations.push(ParityViolation::Incomplete { root, generated });
    }

    for a in 0..n {
        for p in 0..r {
            rep.negation_checked += 1;
            if t.get(a, p) != t.get(sys.neg(a), p) {
                rep.violations.push(ParityViolation::Negation { root: a, pos: p });
            }
        }
    }
    rep
}
