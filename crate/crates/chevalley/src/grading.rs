//! Verification of the root grading of folded models: commutator
//! containment, Weyl elements, positive-system factorisation, the actions
//! of squared Weyl elements, and the GH-indexed refinements.

use hfold_rings::{Integers, Pair, Poly, PolyRing, Ring, ZMod, MAX_VARS};
use hfold_roots::{Position, RootSystem, SubsystemType};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::commaps::{abcd_args, abcd_ring};
use crate::matrix::SparseMatrix;
use crate::model::{ChevalleyModel, ModelError, Word};
use crate::report::Check;

/// How many instances of an exhaustive family to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Full,
    /// At most this many instances, evenly spaced in enumeration order.
    Sample(usize),
}

impl Coverage {
    pub fn select<T: Clone>(&self, items: &[T]) -> Vec<T> {
        match *self {
            Coverage::Full => items.to_vec(),
            Coverage::Sample(n) if n >= items.len() => items.to_vec(),
            Coverage::Sample(0) => Vec::new(),
            Coverage::Sample(n) => (0..n).map(|k| items[k * items.len() / n].clone()).collect(),
        }
    }
}

fn lift<R: Ring>(ring: &R, m: &SparseMatrix<BigInt>) -> SparseMatrix<R::Elem> {
    m.map(ring, |v| ring.from_bigint(v))
}

fn conj<R: Ring>(ring: &R, x: &SparseMatrix<R::Elem>, g: &SparseMatrix<R::Elem>, g_inv: &SparseMatrix<R::Elem>) -> SparseMatrix<R::Elem> {
    g_inv.mul(ring, x).mul(ring, g)
}

/// Ordered pairs of non-proportional roots.
pub fn nonproportional_pairs(sys: &RootSystem) -> Vec<(usize, usize)> {
    let n = sys.len();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| !sys.proportional(a, b)).collect()
}

/// Ordered H2-pairs `(alpha, epsilon)`.
pub fn h2_pairs(sys: &RootSystem) -> Vec<(usize, usize)> {
    nonproportional_pairs(sys).into_iter().filter(|&(a, b)| sys.is_h2_pair(a, b)).collect()
}

/// `[U_zeta, U_xi]` factorises along `]zeta, xi[`, checked on
/// `theta_zeta(a, b)`, `theta_xi(c, d)` over `Z[a, b, c, d]`.
pub fn commutator_containment(model: &ChevalleyModel, coverage: Coverage) -> Check {
    let pairs = coverage.select(&nonproportional_pairs(model.h()));
    let ring = abcd_ring();
    let (x, y) = abcd_args(&ring);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(z, xi)| {
            model.commutation_components(&ring, z, xi, &x, &y).err().map(|e| format!("({}, {}): {e}", model.h().label(z), model.h().label(xi)))
        })
        .collect();
    Check::from_failures(id(model, "commutator-containment"), "H-commutator relations of the folded root groups", pairs.len(), &failures)
}

fn id(model: &ChevalleyModel, what: &str) -> String {
    format!("chevalley.{}.{what}", model.kind().to_string().to_lowercase())
}

/// Whether conjugation by `g` maps every folded root group `U_gamma` onto
/// `U_{gamma^{s_beta}}`, checked on `theta_gamma(a, b)` over `Z[a, b]`.
/// Returns the roots `gamma` where it fails.
pub fn folded_weyl_failures(model: &ChevalleyModel, beta: usize, g: &[(usize, BigInt)]) -> Vec<usize> {
    let ring = PolyRing::integer(&["a", "b"]);
    let gm = lift(&ring, &model.eval(&Integers, g));
    let gi = lift(&ring, &model.eval(&Integers, &model.inverse_word(&Integers, g)));
    let h = model.h();
    (0..h.len())
        .into_par_iter()
        .filter(|&gamma| {
            let x = model.folded_elem(&ring, gamma, &ring.var(0), &ring.var(1));
            let y = conj(&ring, &x, &gm, &gi);
            model.as_folded_elem(&ring, &y, h.reflect(gamma, beta)).is_none()
        })
        .collect()
}

/// Whether the integer word `g` is a Weyl element for the source root `a`:
/// `U_b^g = U_{b^{s_a}}` for every source root `b`, checked on `x_b(t)` over
/// `Z[t]`.
pub fn is_weyl(model: &ChevalleyModel, a: usize, g: &[(usize, BigInt)]) -> bool {
    let ring = PolyRing::integer(&["t"]);
    let gm = lift(&ring, &model.eval(&Integers, g));
    let gi = lift(&ring, &model.eval(&Integers, &model.inverse_word(&Integers, g)));
    let src = model.source();
    (0..src.len()).into_par_iter().all(|b| {
        let y = conj(&ring, &model.root_elem(&ring, b, &ring.var(0)), &gm, &gi);
        model.as_root_elem(&ring, &y, src.reflect(b, a)).is_some()
    })
}

/// `w_beta(1, 1)` conjugates `U_gamma` onto `U_{gamma^{s_beta}}` for all
/// H roots `beta` and `gamma`.
pub fn weyl_conjugation(model: &ChevalleyModel, coverage: Coverage) -> Check {
    let roots: Vec<usize> = (0..model.h().len()).collect();
    let betas = coverage.select(&roots);
    let total = betas.len() * roots.len();
    let failures: Vec<(String, String)> = betas
        .iter()
        .flat_map(|&beta| {
            let w = model.standard_weyl_word(&Integers, beta);
            folded_weyl_failures(model, beta, &w).into_iter().map(move |g| (model.h().label(beta), model.h().label(g)))
        })
        .collect();
    Check::from_failures(id(model, "weyl-conjugation"), "Weyl elements permute the folded root groups", total, &failures)
}

/// Orders roots so that each one spans an extremal ray of the cone of the
/// roots after it: repeatedly remove the minimiser of `f / g`, where `g` is
/// the height and `f` a generic functional. Requires roots with
/// nonnegative simple-root coordinates.
pub fn extremal_order(sys: &RootSystem, roots: &[usize]) -> Vec<usize> {
    let weights: Vec<f64> = [2.0f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0].iter().map(|p| p.sqrt()).collect();
    let ratio = |r: usize| {
        let c: Vec<f64> = sys.coords(r).iter().map(|x| x.to_f64()).collect();
        let g: f64 = c.iter().sum();
        let f: f64 = c.iter().zip(&weights).map(|(x, w)| x * w).sum();
        f / g
    };
    let mut keyed: Vec<(f64, usize)> = roots.iter().map(|&r| (ratio(r), r)).collect();
    keyed.sort_by(|p, q| p.0.total_cmp(&q.0));
    keyed.into_iter().map(|p| p.1).collect()
}

/// The positive-system product map `(x_beta) -> prod theta_beta(x_beta)` in
/// extremal order is injective: peeling the product recovers every
/// coordinate. Symbolic when the ring has room for two variables per
/// positive root, otherwise on `samples` integer coordinate vectors.
pub fn positive_product_injective(model: &ChevalleyModel, samples: usize) -> Check {
    let h = model.h();
    let pos: Vec<usize> = (0..h.npos()).collect();
    let order = extremal_order(h, &pos);
    let n = order.len();
    let anchor = "injectivity of the positive-system product map";
    if 2 * n <= MAX_VARS {
        let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).chain((1..=n).map(|i| format!("b{i}"))).collect();
        let ring = PolyRing::integer(&names);
        let params: Vec<Pair<Poly<BigInt>>> = (0..n).map(|i| Pair::new(ring.var(i), ring.var(n + i))).collect();
        let failure = product_roundtrip(model, &ring, &order, &params);
        return Check::from_failures(id(model, "positive-product"), anchor, 1, &failure.into_iter().collect::<Vec<_>>());
    }
    let failures: Vec<String> = (0..samples)
        .into_par_iter()
        .filter_map(|k| {
            let v = |i: usize| BigInt::from(((i * 7 + k * 13 + 3) % 11) as i64 - 5);
            let params: Vec<Pair<BigInt>> = (0..n).map(|i| Pair::new(v(2 * i), v(2 * i + 1))).collect();
            product_roundtrip(model, &Integers, &order, &params).map(|e| format!("sample {k}: {e}"))
        })
        .collect();
    Check::from_failures(id(model, "positive-product"), anchor, samples, &failures)
}

fn product_roundtrip<R: Ring>(model: &ChevalleyModel, ring: &R, order: &[usize], params: &[Pair<R::Elem>]) -> Option<String> {
    let mut w: Word<R::Elem> = Vec::new();
    for (&b, p) in order.iter().zip(params) {
        w.extend(model.folded_word::<R>(b, &p.left, &p.right));
    }
    let m = model.eval(ring, &w);
    match model.peel_folded(ring, &m, order) {
        Err(e) => Some(e.to_string()),
        Ok(got) if got != params => Some("peeled coordinates differ from the input".into()),
        Ok(_) => None,
    }
}

/// Commutator relations of the source root groups: `[x_a(r), x_b(s)]` is
/// `x_{a+b}(c r s)` with `c = +-1` if `a + b` is a root and trivial
/// otherwise, checked over `Z[r, s]`.
pub fn chevalley_commutator_signs(model: &ChevalleyModel, coverage: Coverage) -> Check {
    let src = model.source();
    let pairs: Vec<(usize, usize)> = coverage.select(&nonproportional_pairs(src));
    let ring = PolyRing::integer(&["r", "s"]);
    let (r, s) = (ring.var(0), ring.var(1));
    let rs = ring.mul(&r, &s);
    let failures: Vec<(String, String)> = pairs
        .par_iter()
        .filter(|&&(a, b)| {
            let c = model.commutator(&ring, &[(a, r.clone())], &[(b, s.clone())]);
            match model.commutator_sign(a, b) {
                Some(sign) => {
                    let sum = root_sum(src, a, b).expect("sum is a root");
                    c != model.root_elem(&ring, sum, &ring.scale_int(&rs, sign as i64))
                }
                None => root_sum(src, a, b).is_some() || !c.is_identity(&ring),
            }
        })
        .map(|&(a, b)| (src.label(a), src.label(b)))
        .collect();
    Check::from_failures(id(model, "chevalley-signs"), "single-factor Chevalley commutator formula with unit sign", pairs.len(), &failures)
}

pub(crate) fn root_sum(sys: &RootSystem, a: usize, b: usize) -> Option<usize> {
    let sum: Vec<_> = sys.coords(a).iter().zip(sys.coords(b)).map(|(x, y)| x + y).collect();
    sys.find(&sum)
}

/// Action of a squared Weyl element on a folded root group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareAction {
    Identity,
    Inversion,
    /// The twisting involution `(a, b) -> (-a, b)`.
    Star,
    /// The twisting involution followed by inversion, `(a, b) -> (a, -b)`.
    StarInverse,
}

impl SquareAction {
    pub fn apply<R: Ring>(&self, ring: &R, x: &Pair<R::Elem>) -> Pair<R::Elem> {
        let (l, r) = (x.left.clone(), x.right.clone());
        match self {
            SquareAction::Identity => Pair::new(l, r),
            SquareAction::Inversion => Pair::new(ring.neg(&l), ring.neg(&r)),
            SquareAction::Star => Pair::new(ring.neg(&l), r),
            SquareAction::StarInverse => Pair::new(l, ring.neg(&r)),
        }
    }

    const ALL: [SquareAction; 4] = [SquareAction::Identity, SquareAction::Inversion, SquareAction::Star, SquareAction::StarInverse];
}

/// The action of `w_zeta^2` on `U_xi` predicted by the span type of
/// `(xi, zeta)` and the position of `zeta` relative to `xi`.
pub fn expected_square_action(h: &RootSystem, xi: usize, zeta: usize) -> SquareAction {
    if h.proportional(xi, zeta) {
        return SquareAction::Identity;
    }
    match h.classify_span(xi, zeta).expect("non-proportional") {
        SubsystemType::A1xA1 => SquareAction::Identity,
        SubsystemType::A2 => SquareAction::Inversion,
        SubsystemType::H2 => match h.position_of(xi, zeta) {
            Position::Involution => SquareAction::Star,
            _ => SquareAction::StarInverse,
        },
    }
}

/// Outcome of classifying `x_xi^{w_zeta(r,s)^2}` for all unit pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareActionReport {
    pub xi: usize,
    pub zeta: usize,
    pub expected: SquareAction,
    /// One entry per unit pair `(r, s)`, `None` if no label fits.
    pub observed: Vec<((u64, u64), Option<SquareAction>)>,
}

impl SquareActionReport {
    /// The label matches the prediction for every choice of Weyl element.
    pub fn ok(&self) -> bool {
        self.observed.iter().all(|(_, o)| *o == Some(self.expected))
    }
}

/// Squared folded Weyl elements `w_zeta(r, s)^2` and their inverses over
/// `Z/5`, one per unit pair.
fn squared_weyls(model: &ChevalleyModel, zeta: usize) -> Vec<((u64, u64), SparseMatrix<u64>, SparseMatrix<u64>)> {
    let z5 = ZMod::new(5);
    let units = z5.units();
    let mut out = Vec::new();
    for &r in &units {
        for &s in &units {
            let w = model.folded_weyl_word(&z5, zeta, &r, &s).expect("units");
            let wm = model.eval(&z5, &w);
            let wi = model.eval(&z5, &model.inverse_word(&z5, &w));
            out.push(((r, s), wm.mul(&z5, &wm), wi.mul(&z5, &wi)));
        }
    }
    out
}

/// Classifies the action of `w_zeta(r, s)^2` on `theta_xi(a, b)` over
/// `Z/5[a, b]` for all 16 unit pairs.
pub fn square_action_classify(model: &ChevalleyModel, xi: usize, zeta: usize) -> SquareActionReport {
    classify_with(model, xi, zeta, &squared_weyls(model, zeta))
}

fn classify_with(
    model: &ChevalleyModel,
    xi: usize,
    zeta: usize,
    weyls: &[((u64, u64), SparseMatrix<u64>, SparseMatrix<u64>)],
) -> SquareActionReport {
    let ring = PolyRing::new(ZMod::new(5), &["a", "b"]);
    let x = Pair::new(ring.var(0), ring.var(1));
    let xm = model.folded_elem(&ring, xi, &x.left, &x.right);
    let observed = weyls
        .iter()
        .map(|(rs, w2, w2i)| {
            let lw = w2.map(&ring, |v| ring.constant(*v));
            let lwi = w2i.map(&ring, |v| ring.constant(*v));
            let y = conj(&ring, &xm, &lw, &lwi);
            let label = SquareAction::ALL.into_iter().find(|act| {
                let p = act.apply(&ring, &x);
                model.folded_elem(&ring, xi, &p.left, &p.right) == y
            });
            (*rs, label)
        })
        .collect();
    SquareActionReport { xi, zeta, expected: expected_square_action(model.h(), xi, zeta), observed }
}

/// Square-action classification for every ordered pair of H roots.
pub fn square_actions(model: &ChevalleyModel) -> (Check, Vec<SquareActionReport>) {
    let h = model.h();
    let reports: Vec<SquareActionReport> = (0..h.len())
        .into_par_iter()
        .flat_map_iter(|zeta| {
            let weyls = squared_weyls(model, zeta);
            (0..h.len()).map(move |xi| classify_with(model, xi, zeta, &weyls))
        })
        .collect();
    let failures: Vec<(String, String)> =
        reports.iter().filter(|r| !r.ok()).map(|r| (h.label(r.xi), h.label(r.zeta))).collect();
    let check = Check::from_failures(
        id(model, "square-actions"),
        "actions of squared Weyl elements by span type and position",
        reports.len(),
        &failures,
    );
    (check, reports)
}

/// Crystallographic commutator relations of the GH-indexed family
/// `U_g = x_{unfold(g)}(R)`: `[U_g, U_h]` factorises along the roots
/// `i g + j h` with positive integers `i`, `j`.
pub fn gh_relations(model: &ChevalleyModel, coverage: Coverage) -> Check {
    let fold = model.folding();
    let gh = fold.gh();
    let pairs = coverage.select(&nonproportional_pairs(gh));
    let ring = PolyRing::integer(&["r", "s"]);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(g, k)| {
            let (a, b) = (fold.unfold_gh(g), fold.unfold_gh(k));
            let c = model.commutator(&ring, &[(a, ring.var(0))], &[(b, ring.var(1))]);
            let groups: Vec<Vec<usize>> = match gh.cry_interval(g, k) {
                Ok(i) => i.into_iter().map(|x| vec![fold.unfold_gh(x)]).collect(),
                Err(e) => return Some(e.to_string()),
            };
            model.peel(&ring, &c, &groups).err().map(|e| format!("({}, {}): {e}", gh.label(g), gh.label(k)))
        })
        .collect();
    Check::from_failures(id(model, "gh-relations"), "crystallographic GH-commutator relations", pairs.len(), &failures)
}

/// For every H2-quintuple `(alpha, beta, gamma, delta, epsilon)`:
/// `[U_alpha, U_delta]` lies in `U_{tau gamma} U_{tau beta}`.
pub fn refinement(model: &ChevalleyModel) -> Check {
    let h = model.h();
    let pairs = h2_pairs(h);
    let ring = abcd_ring();
    let (x, y) = abcd_args(&ring);
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(alpha, eps)| {
            let q = h.quintuple(alpha, eps).expect("H2-pair");
            let c = model.commutator(&ring, &model.folded_word::<PolyRing<Integers>>(alpha, &x.left, &x.right), &model.folded_word::<PolyRing<Integers>>(q[3], &y.left, &y.right));
            let groups = vec![vec![model.fiber(q[2]).long], vec![model.fiber(q[1]).long]];
            model.peel(&ring, &c, &groups).err().map(|e| format!("({}, {}): {e}", h.label(alpha), h.label(eps)))
        })
        .collect();
    Check::from_failures(id(model, "refinement"), "refinement of the H2 commutator relation through long GH roots", pairs.len(), &failures)
}

/// The `beta`-part of `[b, x]` for words `b`, `x` with `b` in `U_alpha` and
/// `x` in `U_epsilon`, read from the factorisation along `]alpha, epsilon[`.
fn beta_part<R: Ring>(model: &ChevalleyModel, ring: &R, alpha: usize, eps: usize, b: &[(usize, R::Elem)], x: &[(usize, R::Elem)]) -> Result<Pair<R::Elem>, ModelError> {
    let interval = model.h().open_interval(alpha, eps)?;
    let c = model.commutator(ring, b, x);
    let parts = model.peel_folded(ring, &c, &interval)?;
    Ok(parts.into_iter().next().expect("beta is the first interval root"))
}

/// For every H2-pair `(alpha, epsilon)` with `w_alpha = a b a`,
/// `b = theta_alpha(1, 1)`: `x_eps^{w_alpha} = [b, x_eps^{-1}]_beta`, and
/// `x_eps -> [b, x_eps]_beta` is a bijection `U_eps -> U_beta`, checked
/// on `theta_eps(c, d)` over `Z[c, d]`.
pub fn weyl_pair_checks(model: &ChevalleyModel) -> (Check, Check) {
    let h = model.h();
    let pairs = h2_pairs(h);
    let ring = PolyRing::integer(&["c", "d"]);
    let (c, d) = (ring.var(0), ring.var(1));
    let results: Vec<(Option<String>, Option<String>)> = pairs
        .par_iter()
        .map(|&(alpha, eps)| {
            let name = format!("({}, {})", h.label(alpha), h.label(eps));
            let one = ring.one();
            let b = model.folded_word::<PolyRing<Integers>>(alpha, &one, &one);
            let x = model.folded_word::<PolyRing<Integers>>(eps, &c, &d);
            let w = model.standard_weyl_word(&ring, alpha);
            let lhs = model.conjugate(&ring, &model.eval(&ring, &x), &w);
            let beta = h.quintuple(alpha, eps).expect("H2-pair")[1];
            let conj_fail = match beta_part(model, &ring, alpha, eps, &b, &model.inverse_word(&ring, &x)) {
                Ok(p) if model.folded_elem(&ring, beta, &p.left, &p.right) == lhs => None,
                Ok(_) => Some(format!("{name}: conjugate differs from the commutator part")),
                Err(e) => Some(format!("{name}: {e}")),
            };
            let bij_fail = match beta_part(model, &ring, alpha, eps, &b, &x) {
                Ok(p) => (!is_unimodular_linear(&p)).then(|| format!("{name}: map is not a unimodular linear bijection")),
                Err(e) => Some(format!("{name}: {e}")),
            };
            (conj_fail, bij_fail)
        })
        .collect();
    let (conj, bij): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let conj: Vec<String> = conj.into_iter().flatten().collect();
    let bij: Vec<String> = bij.into_iter().flatten().collect();
    (
        Check::from_failures(id(model, "weyl-pair-conjugation"), "Weyl conjugation of an H2-pair through a commutator part", pairs.len(), &conj),
        Check::from_failures(id(model, "weyl-pair-bijection"), "commutator part as an isomorphism between root groups", pairs.len(), &bij),
    )
}

/// Whether `p` is `M (c, d)` for an integer matrix `M` of determinant +-1.
fn is_unimodular_linear(p: &Pair<Poly<BigInt>>) -> bool {
    let coeff = |q: &Poly<BigInt>, i: usize| -> Option<BigInt> {
        let mut out = BigInt::zero();
        for (m, v) in q {
            if m.degree() != 1 {
                return None;
            }
            if m.exponent(i) == 1 {
                out = v.clone();
            }
        }
        Some(out)
    };
    let entries = [coeff(&p.left, 0), coeff(&p.left, 1), coeff(&p.right, 0), coeff(&p.right, 1)];
    let Some([m00, m01, m10, m11]) = entries.into_iter().collect::<Option<Vec<_>>>().and_then(|v| <[BigInt; 4]>::try_from(v).ok()) else {
        return false;
    };
    (m00 * m11 - m01 * m10).abs().is_one()
}

/// Options for [`verify_grading`].
#[derive(Clone, Copy, Debug)]
pub struct GradingOptions {
    pub pairs: Coverage,
    pub weyl: Coverage,
    pub source_pairs: Coverage,
    pub gh_pairs: Coverage,
    pub product_samples: usize,
}

impl GradingOptions {
    pub fn full() -> Self {
        GradingOptions { pairs: Coverage::Full, weyl: Coverage::Full, source_pairs: Coverage::Full, gh_pairs: Coverage::Full, product_samples: 8 }
    }
}

/// The grading suite of a folded model.
pub fn verify_grading(model: &ChevalleyModel, opts: GradingOptions) -> Vec<Check> {
    let mut out = vec![
        commutator_containment(model, opts.pairs),
        weyl_conjugation(model, opts.weyl),
        positive_product_injective(model, opts.product_samples),
        chevalley_commutator_signs(model, opts.source_pairs),
    ];
    if model.h().rank() >= 3 {
        out.push(gh_relations(model, opts.gh_pairs));
        out.push(refinement(model));
        let (a, b) = weyl_pair_checks(model);
        out.push(a);
        out.push(b);
    }
    out
}
