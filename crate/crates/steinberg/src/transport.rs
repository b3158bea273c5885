//! Commutation maps for arbitrary root pairs of H3 and H4, obtained by
//! conjugating the reference formulas with products of standard Weyl
//! elements and tracking the parity signs.

use std::collections::BTreeMap;
use std::fmt;

use hfold_chevalley::{abcd_ring, resolve_name, REFERENCE_FORMULAS};
use hfold_rings::{Integers, Pair, Poly, PolyRing, Ring, SignPair};
use hfold_roots::{Kind, ParityTable, RootError, RootSystem, WeylGroup};
use num_bigint::BigInt;
use rand::Rng as _;

/// `c * a^i b^j c^k d^l` in the arguments `x = (a, b)`, `y = (c, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: i8,
    pub exps: [u8; 4],
}

impl Monomial {
    fn parse(s: &str) -> Option<Monomial> {
        if s == "0" {
            return None;
        }
        let (coeff, body) = match s.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, s),
        };
        let mut exps = [0u8; 4];
        for ch in body.chars() {
            exps[(ch as u8 - b'a') as usize] += 1;
        }
        Some(Monomial { coeff, exps })
    }

    /// The monomial after substituting `a -> e1 a, b -> f1 b, c -> e2 c,
    /// d -> f2 d` and multiplying by `outer`.
    fn twisted(self, x: SignPair, y: SignPair, outer: i8) -> Monomial {
        let signs = [x.0, x.1, y.0, y.1];
        let mut coeff = self.coeff * outer;
        for (s, &e) in signs.iter().zip(&self.exps) {
            if e % 2 == 1 {
                coeff *= s;
            }
        }
        Monomial { coeff, exps: self.exps }
    }

    fn eval<R: Ring>(&self, ring: &R, args: &[R::Elem; 4]) -> R::Elem {
        let mut t = ring.from_int(self.coeff as i64);
        for (v, &e) in args.iter().zip(&self.exps) {
            if e > 0 {
                t = ring.mul(&t, &ring.pow(v, e as u32));
            }
        }
        t
    }
}

/// A commutation map `(x, y) -> (left, right)` whose components are
/// signed monomials or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Formula {
    pub left: Option<Monomial>,
    pub right: Option<Monomial>,
}

impl Formula {
    pub fn parse(left: &str, right: &str) -> Formula {
        Formula { left: Monomial::parse(left), right: Monomial::parse(right) }
    }

    /// `eta_rho * psi(eta_zeta x, eta_xi y)`.
    pub fn twisted(&self, zeta: SignPair, xi: SignPair, rho: SignPair) -> Formula {
        Formula { left: self.left.map(|m| m.twisted(zeta, xi, rho.0)), right: self.right.map(|m| m.twisted(zeta, xi, rho.1)) }
    }

    pub fn eval<R: Ring>(&self, ring: &R, x: &Pair<R::Elem>, y: &Pair<R::Elem>) -> Pair<R::Elem> {
        let args = [x.left.clone(), x.right.clone(), y.left.clone(), y.right.clone()];
        let comp = |m: &Option<Monomial>| m.map(|m| m.eval(ring, &args)).unwrap_or_else(|| ring.zero());
        Pair::new(comp(&self.left), comp(&self.right))
    }

    /// The formula as a pair of polynomials in `Z[a, b, c, d]`.
    pub fn to_poly(&self) -> Pair<Poly<BigInt>> {
        let ring = abcd_ring();
        let x = Pair::new(ring.var(0), ring.var(1));
        let y = Pair::new(ring.var(2), ring.var(3));
        self.eval(&ring, &x, &y)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring: PolyRing<Integers> = abcd_ring();
        let p = self.to_poly();
        write!(f, "({}, {})", ring.render(&p.left), ring.render(&p.right))
    }
}

/// A reference formula resolved to root indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SourceFormula {
    pub zeta: usize,
    pub xi: usize,
    pub rho: usize,
    pub formula: Formula,
}

/// The reference formulas visible in `h`, with single-root intervals
/// resolved.
pub fn source_formulas(h: &RootSystem) -> Result<Vec<SourceFormula>, RootError> {
    let mut out = Vec::new();
    for spec in REFERENCE_FORMULAS.iter().filter(|s| h.rank() == 4 || !s.needs_h4()) {
        let name = |n: &str| resolve_name(h, n).expect("reference names resolve in H3 and H4");
        let (zeta, xi) = (name(spec.zeta), name(spec.xi));
        let rho = match spec.rho {
            Some(r) => name(r),
            None => h.open_interval(zeta, xi)?[0],
        };
        out.push(SourceFormula { zeta, xi, rho, formula: Formula::parse(spec.left, spec.right) });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransportError {
    #[error("{0} has no standard parity table")]
    NoParity(Kind),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Conjugation data for one H system: its Weyl group, the standard
/// parity table and the reference formulas.
pub struct Transporter {
    h: RootSystem,
    weyl: WeylGroup,
    table: ParityTable,
    sources: Vec<SourceFormula>,
    depth: Vec<usize>,
}

/// Where a source formula lands under one Weyl word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transported {
    pub zeta: usize,
    pub xi: usize,
    pub rho: usize,
    pub formula: Formula,
}

/// A target `(zeta, xi, rho)` reached with two different formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub target: (usize, usize, usize),
    pub first: Formula,
    pub second: Formula,
    pub word: Vec<usize>,
}

/// Outcome of the word-independence check.
#[derive(Clone, Debug, Default)]
pub struct Independence {
    /// Ordered pairs with a nonempty interval.
    pub pairs: usize,
    /// Transports compared, over all Weyl elements and random words.
    pub choices: usize,
    pub conflicts: Vec<Conflict>,
    /// Pairs with a nonempty interval and some interval root without a
    /// formula.
    pub uncovered: Vec<(usize, usize)>,
}

impl Independence {
    pub fn ok(&self) -> bool {
        self.conflicts.is_empty() && self.uncovered.is_empty()
    }
}

/// The commutation maps of every ordered pair with a nonempty interval,
/// keyed by `(zeta, xi)`, listed in interval order.
pub type CommutationTable = BTreeMap<(usize, usize), Vec<(usize, Formula)>>;

impl Transporter {
    pub fn new(h: &RootSystem) -> Result<Self, TransportError> {
        let kind = h.kind();
        if !matches!(kind, Kind::H3 | Kind::H4) {
            return Err(TransportError::NoParity(kind));
        }
        let h = h.clone();
        let weyl = WeylGroup::new(&h)?;
        let table = ParityTable::standard(&h).map_err(|_| TransportError::NoParity(kind))?;
        let sources = source_formulas(&h)?;
        let mut depth = vec![0; weyl.order()];
        for e in 1..weyl.order() {
            depth[e] = depth[weyl.parent(e).expect("not the identity").0] + 1;
        }
        Ok(Transporter { h, weyl, table, sources, depth })
    }

    pub fn h(&self) -> &RootSystem {
        &self.h
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn sources(&self) -> &[SourceFormula] {
        &self.sources
    }

    /// `(beta^w, eta_w(beta))` for a word of base positions.
    pub fn conjugate_root(&self, beta: usize, word: &[usize]) -> (usize, SignPair) {
        let mut acc = SignPair::ONE;
        let mut cur = beta;
        for &p in word {
            acc = acc * self.table.get(cur, p);
            cur = self.h.reflect(cur, self.h.base()[p]);
        }
        (cur, acc)
    }

    /// Conjugates a source formula by the Weyl word `word`.
    pub fn transport(&self, src: &SourceFormula, word: &[usize]) -> Transported {
        let (zeta, ez) = self.conjugate_root(src.zeta, word);
        let (xi, ex) = self.conjugate_root(src.xi, word);
        let (rho, er) = self.conjugate_root(src.rho, word);
        Transported { zeta, xi, rho, formula: src.formula.twisted(ez, ex, er) }
    }

    /// A uniformly chosen reduced word for the Weyl element `e`, built by
    /// peeling random right descents.
    pub fn random_reduced_word(&self, e: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
        let mut rev = Vec::with_capacity(self.depth[e]);
        let mut cur = e;
        while cur != 0 {
            let descents: Vec<(usize, usize)> = (0..self.h.rank())
                .filter_map(|p| {
                    let s = self.h.reflection_perm(self.h.base()[p]);
                    let q: Vec<u16> = self.weyl.perm(cur).iter().map(|&j| s[j as usize]).collect();
                    let f = self.weyl.find(&q).expect("closed under base reflections");
                    (self.depth[f] < self.depth[cur]).then_some((p, f))
                })
                .collect();
            let (p, f) = descents[rng.gen_range(0..descents.len())];
            rev.push(p);
            cur = f;
        }
        rev.reverse();
        rev
    }

    /// Transports every reference formula by the stored reduced word of
    /// every Weyl element. Returns the first formula per target and all
    /// disagreements.
    #[allow(clippy::type_complexity)]
    fn transport_all(&self) -> (BTreeMap<(usize, usize, usize), Formula>, BTreeMap<(usize, usize), Vec<(usize, usize)>>, Vec<Conflict>, usize) {
        let mut seen = BTreeMap::new();
        let mut reachers: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        let mut conflicts = Vec::new();
        let mut count = 0;
        for e in 0..self.weyl.order() {
            let word = self.weyl.word(e);
            for (k, src) in self.sources.iter().enumerate() {
                let t = self.transport(src, &word);
                count += 1;
                let key = (t.zeta, t.xi, t.rho);
                reachers.entry((t.zeta, t.xi)).or_default().push((e, k));
                match seen.get(&key) {
                    None => {
                        seen.insert(key, t.formula);
                    }
                    Some(&f) if f != t.formula => {
                        conflicts.push(Conflict { target: key, first: f, second: t.formula, word: word.clone() })
                    }
                    Some(_) => {}
                }
            }
        }
        (seen, reachers, conflicts, count)
    }

    /// The standard commutation map `psi_{zeta,xi}^rho`, if `rho` lies in
    /// the open interval of the non-proportional pair `(zeta, xi)`.
    pub fn standard_commutation_map(&self, zeta: usize, xi: usize, rho: usize) -> Option<Formula> {
        for e in 0..self.weyl.order() {
            for src in &self.sources {
                if self.weyl.act(e, src.zeta) == zeta && self.weyl.act(e, src.xi) == xi && self.weyl.act(e, src.rho) == rho {
                    return Some(self.transport(src, &self.weyl.word(e)).formula);
                }
            }
        }
        None
    }

    /// Builds the table of all commutation maps and checks that it does not
    /// depend on the chosen Weyl word: every Weyl element with its stored
    /// word, plus `random_words` random reduced words per pair.
    pub fn table_with_check(&self, random_words: usize, seed: u64) -> Result<(CommutationTable, Independence), TransportError> {
        use rand::SeedableRng;
        let (seen, reachers, mut conflicts, mut choices) = self.transport_all();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut table = CommutationTable::new();
        let mut uncovered = Vec::new();
        let mut pairs = 0;
        for zeta in 0..self.h.len() {
            for xi in 0..self.h.len() {
                if self.h.proportional(zeta, xi) {
                    continue;
                }
                let interval = self.h.open_interval(zeta, xi)?;
                if interval.is_empty() {
                    continue;
                }
                pairs += 1;
                let mut row = Vec::with_capacity(interval.len());
                for &rho in &interval {
                    match seen.get(&(zeta, xi, rho)) {
                        Some(&f) => row.push((rho, f)),
                        None => {
                            uncovered.push((zeta, xi));
                            break;
                        }
                    }
                }
                if row.len() != interval.len() {
                    continue;
                }
                let via = &reachers[&(zeta, xi)];
                for _ in 0..random_words {
                    let (e, k) = via[rng.gen_range(0..via.len())];
                    let word = self.random_reduced_word(e, &mut rng);
                    let t = self.transport(&self.sources[k], &word);
                    choices += 1;
                    let expected = seen[&(t.zeta, t.xi, t.rho)];
                    if t.formula != expected {
                        conflicts.push(Conflict { target: (t.zeta, t.xi, t.rho), first: expected, second: t.formula, word });
                    }
                }
                table.insert((zeta, xi), row);
            }
        }
        Ok((table, Independence { pairs, choices, conflicts, uncovered }))
    }
}
