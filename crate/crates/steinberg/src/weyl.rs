//! Weyl elements `w_beta(r, s)` over Z/5: injectivity of the
//! parametrisation by unit pairs, membership, inverses, and surjectivity
//! onto the Weyl elements of `U_{-beta} U_beta U_{-beta}`.

use std::collections::HashSet;

use hfold_chevalley::{ChevalleyModel, Check, Coverage, ModelError, SparseMatrix};
use hfold_rings::{PolyRing, Ring, ZMod};
use rayon::prelude::*;

/// Outcome of the Weyl-parameter checks for one H root.
#[derive(Clone, Debug)]
pub struct WeylParamReport {
    pub beta: usize,
    /// Number of unit pairs `(r, s)`.
    pub images: usize,
    /// Number of distinct matrices `w_beta(r, s)`.
    pub distinct: usize,
    /// Unit pairs whose image is not a beta-Weyl element.
    pub non_weyl: Vec<(u64, u64)>,
    /// Unit pairs with `w(r, s) w(-r, -s) != 1`.
    pub inverse_failures: Vec<(u64, u64)>,
    /// Whether a zero or zero-divisor argument is refused.
    pub nonunit_rejected: bool,
    pub surjectivity: Option<Surjectivity>,
}

/// Enumeration of `u theta_beta(r, s) u'` with `u, u'` in `U_{-beta}`.
#[derive(Clone, Debug)]
pub struct Surjectivity {
    pub candidates: usize,
    /// Candidates that are beta-Weyl elements.
    pub weyl: usize,
    /// Whether every such candidate is some `w_beta(r, s)`.
    pub all_parametrised: bool,
}

impl WeylParamReport {
    pub fn ok(&self) -> bool {
        self.distinct == self.images
            && self.non_weyl.is_empty()
            && self.inverse_failures.is_empty()
            && self.nonunit_rejected
            && self.surjectivity.as_ref().is_none_or(|s| s.all_parametrised && s.weyl == self.images)
    }
}

/// Whether `w` conjugates every `U_gamma` into `U_{gamma^{s_beta}}`,
/// checked on `theta_gamma(a, b)` over `Z/5[a, b]`.
pub fn is_folded_weyl_mod(model: &ChevalleyModel, beta: usize, w: &SparseMatrix<u64>, w_inv: &SparseMatrix<u64>) -> bool {
    let ring = PolyRing::new(ZMod::new(5), &["a", "b"]);
    let lw = w.map(&ring, |v| ring.constant(*v));
    let lwi = w_inv.map(&ring, |v| ring.constant(*v));
    let h = model.h();
    (0..h.len()).all(|gamma| {
        let x = model.folded_elem(&ring, gamma, &ring.var(0), &ring.var(1));
        let y = lwi.mul(&ring, &x).mul(&ring, &lw);
        model.as_folded_elem(&ring, &y, h.reflect(gamma, beta)).is_some()
    })
}

/// Runs the checks for the H root `beta`; the surjectivity enumeration
/// (`25^3` candidates) only when `surjective` is set.
pub fn weyl_param_injectivity(model: &ChevalleyModel, beta: usize, surjective: bool) -> WeylParamReport {
    let z5 = ZMod::new(5);
    let units = z5.units();
    let pairs: Vec<(u64, u64)> = units.iter().flat_map(|&r| units.iter().map(move |&s| (r, s))).collect();
    let weyl = |r: u64, s: u64| model.folded_weyl(&z5, beta, &r, &s).expect("units");
    let mats: Vec<SparseMatrix<u64>> = pairs.iter().map(|&(r, s)| weyl(r, s)).collect();
    let distinct = mats.iter().collect::<HashSet<_>>().len();
    let mut non_weyl = Vec::new();
    let mut inverse_failures = Vec::new();
    for (&(r, s), w) in pairs.iter().zip(&mats) {
        let wi = weyl(z5.neg(&r), z5.neg(&s));
        if !w.mul(&z5, &wi).is_identity(&z5) {
            inverse_failures.push((r, s));
        }
        if !is_folded_weyl_mod(model, beta, w, &wi) {
            non_weyl.push((r, s));
        }
    }
    let z6 = ZMod::new(6);
    let nonunit_rejected = matches!(model.folded_weyl(&z5, beta, &0, &1), Err(ModelError::NonUnit(_)))
        && matches!(model.folded_weyl(&z6, beta, &1, &2), Err(ModelError::NonUnit(_)))
        && matches!(model.folded_weyl(&z6, beta, &3, &1), Err(ModelError::NonUnit(_)));
    let surjectivity = surjective.then(|| surjectivity(model, beta, &mats.into_iter().collect()));
    WeylParamReport { beta, images: pairs.len(), distinct, non_weyl, inverse_failures, nonunit_rejected, surjectivity }
}

fn surjectivity(model: &ChevalleyModel, beta: usize, params: &HashSet<SparseMatrix<u64>>) -> Surjectivity {
    let z5 = ZMod::new(5);
    let h = model.h();
    let nb = h.neg(beta);
    let all: Vec<(u64, u64)> = (0..5).flat_map(|r| (0..5).map(move |s| (r, s))).collect();
    let theta = |b: usize, (r, s): (u64, u64)| model.folded_elem(&z5, b, &r, &s);
    let neg = |(r, s): (u64, u64)| (z5.neg(&r), z5.neg(&s));
    let gens = [theta(beta, (1, 0)), theta(beta, (0, 1))];
    let found: Vec<SparseMatrix<u64>> = all
        .par_iter()
        .flat_map_iter(|&u| {
            let (um, ui) = (theta(nb, u), theta(nb, neg(u)));
            let mut out = Vec::new();
            for &m in &all {
                let left = um.mul(&z5, &theta(beta, m));
                let left_inv = theta(beta, neg(m)).mul(&z5, &ui);
                for &v in &all {
                    let w = left.mul(&z5, &theta(nb, v));
                    let wi = theta(nb, neg(v)).mul(&z5, &left_inv);
                    let swaps = gens.iter().all(|g| model.as_folded_elem(&z5, &wi.mul(&z5, g).mul(&z5, &w), nb).is_some());
                    if swaps && is_folded_weyl_mod(model, beta, &w, &wi) {
                        out.push(w);
                    }
                }
            }
            out
        })
        .collect();
    let distinct: HashSet<&SparseMatrix<u64>> = found.iter().collect();
    Surjectivity {
        candidates: all.len().pow(3),
        weyl: distinct.len(),
        all_parametrised: distinct.iter().all(|w| params.contains(*w)),
    }
}

/// The Weyl-parameter checks over a selection of H roots, as report
/// entries.
pub fn weyl_param_checks(model: &ChevalleyModel, roots: Coverage, surjective: Coverage) -> Vec<Check> {
    let h = model.h();
    let k = model.kind().to_string().to_lowercase();
    let all: Vec<usize> = (0..h.len()).collect();
    let chosen = roots.select(&all);
    let surj: HashSet<usize> = surjective.select(&all).into_iter().collect();
    let reports: Vec<WeylParamReport> = chosen.iter().map(|&b| weyl_param_injectivity(model, b, surj.contains(&b))).collect();
    let fails = |f: &dyn Fn(&WeylParamReport) -> bool| -> Vec<String> { reports.iter().filter(|r| f(r)).map(|r| h.label(r.beta)).collect() };
    let prefix = format!("steinberg.{k}.z5");
    let mut out = vec![
        Check::from_failures(
            format!("{prefix}.weyl-injective"),
            "unit pairs give pairwise distinct Weyl elements",
            reports.len(),
            &fails(&|r| r.distinct != r.images),
        ),
        Check::from_failures(
            format!("{prefix}.weyl-membership"),
            "images of the Steinberg Weyl elements are Weyl elements",
            reports.len() * 16,
            &reports.iter().flat_map(|r| r.non_weyl.iter().map(move |p| (h.label(r.beta), *p))).collect::<Vec<_>>(),
        ),
        Check::from_failures(
            format!("{prefix}.weyl-inverse"),
            "w(r, s) has inverse w(-r, -s)",
            reports.len() * 16,
            &reports.iter().flat_map(|r| r.inverse_failures.iter().map(move |p| (h.label(r.beta), *p))).collect::<Vec<_>>(),
        ),
        Check::from_failures(
            format!("{prefix}.nonunit-rejected"),
            "Weyl parameters that are not units are refused",
            reports.len(),
            &fails(&|r| !r.nonunit_rejected),
        ),
    ];
    let with_surj: Vec<&WeylParamReport> = reports.iter().filter(|r| r.surjectivity.is_some()).collect();
    if !with_surj.is_empty() {
        let failures: Vec<String> = with_surj
            .iter()
            .filter_map(|r| {
                let s = r.surjectivity.as_ref().expect("filtered");
                (!(s.all_parametrised && s.weyl == r.images)).then(|| format!("{}: {} Weyl elements", h.label(r.beta), s.weyl))
            })
            .collect();
        let mut c = Check::from_failures(
            format!("{prefix}.weyl-surjective"),
            "every Weyl element in U(-beta) U(beta) U(-beta) is some w(r, s)",
            with_surj.len(),
            &failures,
        );
        if c.passed {
            c.witness = Some(format!("{} roots, 15625 candidates each, exactly 16 Weyl elements each", with_surj.len()));
        }
        out.push(c);
    }
    out
}
