//! The unfolded grading: source-indexed root groups carved out of the
//! folded ones by their short and long components, and its checks in a
//! folded matrix model.

use hfold_chevalley::{h2_pairs, is_weyl, nonproportional_pairs, ChevalleyModel, Check, Coverage, SparseMatrix, Word};
use hfold_golden::GoldenRat;
use hfold_rings::{Integers, Pair, Poly, PolyRing, Ring};
use hfold_roots::weyl_pair;
use num_bigint::BigInt;
use rayon::prelude::*;

/// The family `x'_xi(r)`, `xi` a source root: `theta_{pi(xi)}(r, 0)` if the
/// golden image of `xi` is short and `theta_{pi(xi)}(0, r)` if it is long.
#[derive(Clone, Copy)]
pub struct UnfoldedGrading<'a> {
    model: &'a ChevalleyModel,
}

impl<'a> UnfoldedGrading<'a> {
    pub fn new(model: &'a ChevalleyModel) -> Self {
        UnfoldedGrading { model }
    }

    pub fn is_short(&self, xi: usize) -> bool {
        self.model.folding().is_short(xi)
    }

    /// The word of `x'_xi(r)` in the folded parametrisation.
    pub fn word<R: Ring>(&self, ring: &R, xi: usize, r: &R::Elem) -> Word<R::Elem> {
        let beta = self.model.folding().fold(xi);
        let (a, b) = if self.is_short(xi) { (r.clone(), ring.zero()) } else { (ring.zero(), r.clone()) };
        self.model.folded_word::<R>(beta, &a, &b)
    }

    pub fn elem<R: Ring>(&self, ring: &R, xi: usize, r: &R::Elem) -> SparseMatrix<R::Elem> {
        self.model.eval(ring, &self.word(ring, xi, r))
    }

    /// `Some(r)` if `m = x'_xi(r)`.
    pub fn param<R: Ring>(&self, ring: &R, m: &SparseMatrix<R::Elem>, xi: usize) -> Option<R::Elem> {
        let p = self.model.as_folded_elem(ring, m, self.model.folding().fold(xi))?;
        let (val, other) = if self.is_short(xi) { (p.left, p.right) } else { (p.right, p.left) };
        ring.is_zero(&other).then_some(val)
    }
}

/// How much of the large families to check.
#[derive(Clone, Copy, Debug)]
pub struct UnfoldOptions {
    pub pairs: Coverage,
    pub weyl_roots: Coverage,
}

impl UnfoldOptions {
    pub fn full() -> Self {
        UnfoldOptions { pairs: Coverage::Full, weyl_roots: Coverage::Full }
    }
}

/// A group element with its inverse.
#[derive(Clone)]
struct El<E> {
    m: SparseMatrix<E>,
    inv: SparseMatrix<E>,
}

impl<E: Clone + PartialEq> El<E> {
    fn of<R: Ring<Elem = E>>(model: &ChevalleyModel, ring: &R, w: &[(usize, E)]) -> Self {
        El { m: model.eval(ring, w), inv: model.eval(ring, &model.inverse_word(ring, w)) }
    }

    fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        El { m: self.m.mul(ring, &o.m), inv: o.inv.mul(ring, &self.inv) }
    }

    fn inverse(&self) -> Self {
        El { m: self.inv.clone(), inv: self.m.clone() }
    }

    /// `self^g = g^{-1} self g`.
    fn conj<R: Ring<Elem = E>>(&self, ring: &R, g: &Self) -> Self {
        g.inverse().mul(ring, self).mul(ring, g)
    }

    fn comm<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        self.inverse().mul(ring, &o.inverse()).mul(ring, self).mul(ring, o)
    }
}

fn id(model: &ChevalleyModel, what: &str) -> String {
    format!("unfold.{}.{what}", model.kind().to_string().to_lowercase())
}

/// `[x'_xi(r), x'_zeta(s)] = x'_{xi+zeta}(c r s)` with `c` the model's own
/// Chevalley sign, or `1` when `xi + zeta` is not a root; over `Z[r, s]`.
pub fn commutator_signs(model: &ChevalleyModel, coverage: Coverage) -> Check {
    let g = UnfoldedGrading::new(model);
    let src = model.source();
    let ring = PolyRing::integer(&["r", "s"]);
    let (r, s) = (ring.var(0), ring.var(1));
    let rs = ring.mul(&r, &s);
    let pairs = coverage.select(&nonproportional_pairs(src));
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(xi, zeta)| {
            let c = model.commutator(&ring, &g.word(&ring, xi, &r), &g.word(&ring, zeta, &s));
            let sum: Vec<GoldenRat> = src.coords(xi).iter().zip(src.coords(zeta)).map(|(a, b)| a + b).collect();
            let ok = match src.find(&sum) {
                None => c.is_identity(&ring),
                Some(sigma) => {
                    let want = model.commutator_sign(xi, zeta).map(|c| ring.scale_int(&rs, c as i64));
                    want.is_some() && g.param(&ring, &c, sigma) == want
                }
            };
            (!ok).then(|| format!("({}, {})", src.label(xi), src.label(zeta)))
        })
        .collect();
    Check::from_failures(id(model, "commutator-signs"), "unfolded root groups have the Chevalley commutator relations of the source", pairs.len(), &failures)
}

/// `[theta_zeta(r, 0), theta_{-zeta}(0, s)] = 1` for all H roots, over
/// `Z[r, s]`.
pub fn opposite_commute(model: &ChevalleyModel) -> Check {
    let h = model.h();
    let ring = PolyRing::integer(&["r", "s"]);
    let (r, s, z) = (ring.var(0), ring.var(1), ring.zero());
    let failures: Vec<String> = (0..h.len())
        .into_par_iter()
        .filter(|&zeta| {
            let c = model.commutator(&ring, &model.folded_word::<PolyRing<Integers>>(zeta, &r, &z), &model.folded_word::<PolyRing<Integers>>(h.neg(zeta), &z, &s));
            !c.is_identity(&ring)
        })
        .map(|zeta| h.label(zeta))
        .collect();
    Check::from_failures(id(model, "opposite-commute"), "first and second components of opposite root groups commute", h.len(), &failures)
}

/// The Hall-Witt instance behind the commuting of opposite components, for
/// every H2-quintuple `(alpha, .., epsilon)` over `Z[x, y]`: with
/// `X = theta_{-delta}(0, 1)`, `Y = theta_gamma(0, x)`,
/// `Z = theta_{-alpha}(0, y)`, the three Hall-Witt factors multiply to 1,
/// the second and third vanish, `[X, Y] = theta_alpha(u, 0)` with
/// `u = +-x`, and the first factor is `[theta_alpha(u, 0), Z] = 1`.
pub fn hall_witt(model: &ChevalleyModel) -> Check {
    let h = model.h();
    let ring = PolyRing::integer(&["x", "y"]);
    let (x, y, zero, one) = (ring.var(0), ring.var(1), ring.zero(), ring.one());
    let pairs = h2_pairs(h);
    let th = |b: usize, l: &Poly<BigInt>, r: &Poly<BigInt>| El::of(model, &ring, &model.folded_word::<PolyRing<Integers>>(b, l, r));
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(alpha, eps)| {
            let q = h.quintuple(alpha, eps).expect("H2-pair");
            let (gamma, delta) = (q[2], q[3]);
            let xx = th(h.neg(delta), &zero, &one);
            let yy = th(gamma, &zero, &x);
            let zz = th(h.neg(alpha), &zero, &y);
            let a = xx.comm(&ring, &yy).comm(&ring, &zz.conj(&ring, &xx));
            let b = zz.comm(&ring, &xx).comm(&ring, &yy.conj(&ring, &zz));
            let c = yy.comm(&ring, &zz).comm(&ring, &xx.conj(&ring, &yy));
            let mut bad = Vec::new();
            if !a.mul(&ring, &b).mul(&ring, &c).m.is_identity(&ring) {
                bad.push("ABC");
            }
            if !b.m.is_identity(&ring) || !c.m.is_identity(&ring) {
                bad.push("B, C");
            }
            let xy = xx.comm(&ring, &yy);
            match model.as_folded_elem(&ring, &xy.m, alpha) {
                Some(p) if ring.is_zero(&p.right) && (p.left == x || p.left == ring.neg(&x)) => {
                    let first = th(alpha, &p.left, &zero).comm(&ring, &zz);
                    if first.m != a.m || !a.m.is_identity(&ring) {
                        bad.push("A");
                    }
                }
                _ => bad.push("[X, Y]"),
            }
            (!bad.is_empty()).then(|| format!("({}, {}): {}", h.label(alpha), h.label(eps), bad.join(", ")))
        })
        .collect();
    Check::from_failures(id(model, "hall-witt"), "Hall-Witt identity instances for opposite components", pairs.len(), &failures)
}

/// `x'_xi(r)^{w_rho} = x'_{xi'}(+-r)` with `xi' = xi^{s_i s_j}` for the pair
/// of source base reflections over each H base root `rho`, over `Z[r]`.
pub fn weyl_compatibility(model: &ChevalleyModel) -> Check {
    let g = UnfoldedGrading::new(model);
    let (src, h) = (model.source(), model.h());
    let ring = PolyRing::integer(&["r"]);
    let r = ring.var(0);
    let hl = h.base_labels();
    let tasks: Vec<(usize, usize)> = (0..h.rank()).flat_map(|p| (0..src.len()).map(move |xi| (p, xi))).collect();
    let failures: Vec<String> = tasks
        .par_iter()
        .filter_map(|&(p, xi)| {
            let (i, j) = weyl_pair(src.kind(), hl[p]);
            let si = src.base()[src.base_pos(i).expect("base label")];
            let sj = src.base()[src.base_pos(j).expect("base label")];
            let target = src.reflect(src.reflect(xi, si), sj);
            let w = model.standard_weyl_word(&ring, h.base()[p]);
            let y = model.conjugate(&ring, &g.elem(&ring, xi, &r), &w);
            let ok = g.param(&ring, &y, target).is_some_and(|v| v == r || v == ring.neg(&r));
            (!ok).then(|| format!("{} under w_rho{}", src.label(xi), hl[p]))
        })
        .collect();
    Check::from_failures(id(model, "weyl-compatibility"), "standard Weyl elements permute the unfolded root groups", tasks.len(), &failures)
}

/// The folding of the unfolded family is the original: for each H root
/// `beta` with fiber `(a1, a2)`, `x'_{a1}(r) x'_{a2}(s) = theta_beta(r, s)`
/// over `Z[r, s]`, the golden images are short and long, and positivity
/// and the base are preserved.
pub fn refold(model: &ChevalleyModel) -> Check {
    let g = UnfoldedGrading::new(model);
    let (src, h, fold) = (model.source(), model.h(), model.folding());
    let ring = PolyRing::integer(&["r", "s"]);
    let (r, s) = (ring.var(0), ring.var(1));
    let mut failures: Vec<String> = (0..h.len())
        .into_par_iter()
        .filter_map(|beta| {
            let f = model.fiber(beta);
            let shape = fold.fold(f.short) == beta && fold.fold(f.long) == beta && g.is_short(f.short) && !g.is_short(f.long);
            let prod = g.elem(&ring, f.short, &r).mul(&ring, &g.elem(&ring, f.long, &s));
            let theta = model.folded_elem(&ring, beta, &r, &s);
            let back = model.as_folded_elem(&ring, &prod, beta);
            let ok = shape && prod == theta && back == Some(Pair::new(r.clone(), s.clone()));
            (!ok).then(|| h.label(beta))
        })
        .collect();
    for a in 0..src.len() {
        if src.is_positive(a) != h.is_positive(fold.fold(a)) {
            failures.push(format!("positivity of {}", src.label(a)));
        }
    }
    let mut images: Vec<usize> = src.base().iter().map(|&d| fold.fold(d)).collect();
    images.sort_unstable();
    images.dedup();
    let mut hb = h.base().to_vec();
    hb.sort_unstable();
    if images != hb {
        failures.push("base images".into());
    }
    Check::from_failures(id(model, "refold"), "the folding of the unfolded grading is the original grading", h.len() + src.len() + 1, &failures)
}

/// For each fiber `(a1, a2)` over `beta`:
/// `theta_{-beta}(-1, 0) theta_beta(1, 0) theta_{-beta}(-1, 0)` equals
/// `x'_{-a1}(-1) x'_{a1}(1) x'_{-a1}(-1)` and is an `a1`-Weyl element of
/// the source grading; likewise for the second components and `a2`.
pub fn unfolded_weyl_elements(model: &ChevalleyModel, coverage: Coverage) -> Check {
    let g = UnfoldedGrading::new(model);
    let (src, h) = (model.source(), model.h());
    let z = Integers;
    let (one, m1, zero) = (BigInt::from(1), BigInt::from(-1), BigInt::from(0));
    let roots: Vec<usize> = (0..h.len()).collect();
    let chosen = coverage.select(&roots);
    let failures: Vec<String> = chosen
        .iter()
        .flat_map(|&beta| {
            let f = model.fiber(beta);
            let nb = h.neg(beta);
            [(f.short, true), (f.long, false)].into_iter().filter_map({
                let (one, m1, zero) = (one.clone(), m1.clone(), zero.clone());
                move |(a, first)| {
                    let pick = |v: &BigInt| if first { (v.clone(), zero.clone()) } else { (zero.clone(), v.clone()) };
                    let (o, n) = (pick(&one), pick(&m1));
                    let folded: Word<BigInt> = [model.folded_word::<Integers>(nb, &n.0, &n.1), model.folded_word::<Integers>(beta, &o.0, &o.1), model.folded_word::<Integers>(nb, &n.0, &n.1)].concat();
                    let na = src.neg(a);
                    let unfolded: Word<BigInt> = [g.word(&z, na, &m1), g.word(&z, a, &one), g.word(&z, na, &m1)].concat();
                    let ok = model.eval(&z, &folded) == model.eval(&z, &unfolded) && is_weyl(model, a, &unfolded);
                    (!ok).then(|| src.label(a))
                }
            })
        })
        .collect();
    Check::from_failures(id(model, "weyl-elements"), "Weyl elements of the unfolded grading", 2 * chosen.len(), &failures)
}

/// All unfolding checks for one model.
pub fn unfold_and_verify(model: &ChevalleyModel, opts: UnfoldOptions) -> Vec<Check> {
    vec![
        commutator_signs(model, opts.pairs),
        opposite_commute(model),
        hall_witt(model),
        weyl_compatibility(model),
        refold(model),
        unfolded_weyl_elements(model, opts.weyl_roots),
    ]
}
