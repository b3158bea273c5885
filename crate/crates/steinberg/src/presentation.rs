//! The Steinberg presentation of type H3 or H4 as a relation list, and its
//! verification in the folded matrix models.

use std::collections::BTreeMap;

use hfold_chevalley::{ChevalleyModel, Check, Coverage, Word};
use hfold_rings::{Pair, Ring};
use hfold_roots::{Kind, RootSystem};
use rayon::prelude::*;

use crate::transport::{Formula, Independence, TransportError, Transporter};

/// One defining relation of the Steinberg group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `x_root(u) x_root(v) = x_root(u + v)`.
    Additive { root: usize },
    /// `[x_zeta(u), x_xi(v)]` equals the ordered product of
    /// `x_rho(psi^rho(u, v))` over `]zeta, xi[`; empty when the generators
    /// commute.
    Commutator { zeta: usize, xi: usize, factors: Vec<(usize, Formula)> },
}

impl Relation {
    pub fn render(&self, h: &RootSystem) -> String {
        match self {
            Relation::Additive { root } => {
                let r = h.label(*root);
                format!("x[{r}](u) x[{r}](v) = x[{r}](u+v)")
            }
            Relation::Commutator { zeta, xi, factors } => {
                let rhs: Vec<String> = factors.iter().map(|(rho, f)| format!("x[{}]{f}", h.label(*rho))).collect();
                let rhs = if rhs.is_empty() { "1".to_string() } else { rhs.join(" ") };
                format!("[x[{}](a,b), x[{}](c,d)] = {rhs}", h.label(*zeta), h.label(*xi))
            }
        }
    }
}

/// The relation list of the Steinberg group of type H3 or H4 together with
/// the word-independence report of its commutation maps.
#[derive(Clone, Debug)]
pub struct SteinbergPresentation {
    pub kind: Kind,
    pub relations: Vec<Relation>,
    pub independence: Independence,
}

/// Builds the relation list: one additivity relation per root and one
/// commutator relation per ordered pair of non-proportional roots.
/// `random_words` extra random reduced words per pair enter the
/// independence check.
pub fn steinberg_relations(tr: &Transporter, random_words: usize, seed: u64) -> Result<SteinbergPresentation, TransportError> {
    let h = tr.h();
    let (table, independence) = tr.table_with_check(random_words, seed)?;
    let mut relations: Vec<Relation> = (0..h.len()).map(|root| Relation::Additive { root }).collect();
    for zeta in 0..h.len() {
        for xi in 0..h.len() {
            if h.proportional(zeta, xi) {
                continue;
            }
            let factors = table.get(&(zeta, xi)).cloned().unwrap_or_default();
            relations.push(Relation::Commutator { zeta, xi, factors });
        }
    }
    Ok(SteinbergPresentation { kind: h.kind(), relations, independence })
}

impl SteinbergPresentation {
    pub fn commutators(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Formula)])> {
        self.relations.iter().filter_map(|r| match r {
            Relation::Commutator { zeta, xi, factors } => Some((*zeta, *xi, factors.as_slice())),
            Relation::Additive { .. } => None,
        })
    }

    /// Coverage violations: roots without exactly one additivity relation,
    /// ordered non-proportional pairs without exactly one commutator
    /// relation, and relations whose factors do not follow the interval.
    pub fn coverage_failures(&self, h: &RootSystem) -> Vec<String> {
        let mut add = vec![0usize; h.len()];
        let mut comm: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut out = Vec::new();
        for r in &self.relations {
            match r {
                Relation::Additive { root } => add[*root] += 1,
                Relation::Commutator { zeta, xi, factors } => {
                    *comm.entry((*zeta, *xi)).or_default() += 1;
                    let roots: Vec<usize> = factors.iter().map(|f| f.0).collect();
                    match h.open_interval(*zeta, *xi) {
                        Ok(i) if i == roots => {}
                        _ => out.push(format!("factors of ({}, {}) do not follow the interval", h.label(*zeta), h.label(*xi))),
                    }
                }
            }
        }
        for (root, &n) in add.iter().enumerate() {
            if n != 1 {
                out.push(format!("{} additivity relations for {}", n, h.label(root)));
            }
        }
        for zeta in 0..h.len() {
            for xi in 0..h.len() {
                let n = comm.get(&(zeta, xi)).copied().unwrap_or(0);
                let want = usize::from(!h.proportional(zeta, xi));
                if n != want {
                    out.push(format!("{n} commutator relations for ({}, {})", h.label(zeta), h.label(xi)));
                }
            }
        }
        out
    }

    /// The structural checks: word independence and coverage.
    pub fn checks(&self, h: &RootSystem) -> Vec<Check> {
        let k = self.kind.to_string().to_lowercase();
        let ind = &self.independence;
        let mut failures: Vec<String> = ind
            .conflicts
            .iter()
            .map(|c| {
                let (z, x, r) = c.target;
                format!("psi[{},{};{}]: {} vs {} via {:?}", h.label(z), h.label(x), h.label(r), c.first, c.second, c.word)
            })
            .collect();
        failures.extend(ind.uncovered.iter().map(|&(z, x)| format!("no formula for ({}, {})", h.label(z), h.label(x))));
        let mut indep = Check::from_failures(
            format!("steinberg.{k}.word-independence"),
            "standard commutation maps do not depend on the conjugating Weyl word",
            ind.choices,
            &failures,
        );
        if indep.passed {
            indep.witness = Some(format!("{} transports onto {} ordered pairs agree", ind.choices, ind.pairs));
        }
        let cov = self.coverage_failures(h);
        let coverage = Check::from_failures(
            format!("steinberg.{k}.relation-coverage"),
            "one relation per root and per ordered non-proportional pair",
            self.relations.len(),
            &cov,
        );
        vec![indep, coverage]
    }
}

fn folded<R: Ring>(model: &ChevalleyModel, beta: usize, x: &Pair<R::Elem>) -> Word<R::Elem> {
    model.folded_word::<R>(beta, &x.left, &x.right)
}

/// Checks every relation (or a sample) as a matrix identity in `model`
/// under `x_beta(r, s) -> theta_beta(r, s)`, for each argument pair in
/// `samples`.
pub fn verify_in_model<R: Ring>(
    pres: &SteinbergPresentation,
    model: &ChevalleyModel,
    ring: &R,
    ring_name: &str,
    samples: &[(Pair<R::Elem>, Pair<R::Elem>)],
    coverage: Coverage,
) -> Vec<Check> {
    let h = model.h();
    let k = model.kind().to_string().to_lowercase();
    let prefix = format!("steinberg.{k}.{ring_name}");
    if h.kind() != pres.kind {
        let w = Some(format!("presentation of type {} against a model folding onto {}", pres.kind, h.kind()));
        return vec![Check::new(format!("{prefix}.relations"), "the Steinberg relations hold in the folded model", false, w)];
    }
    let additive: Vec<usize> =
        coverage.select(&pres.relations.iter().filter_map(|r| if let Relation::Additive { root } = r { Some(*root) } else { None }).collect::<Vec<_>>());
    let add_fail: Vec<String> = additive
        .par_iter()
        .flat_map_iter(|&b| {
            samples.iter().filter_map(move |(x, y)| {
                let lhs = model.eval(ring, &[folded::<R>(model, b, x), folded::<R>(model, b, y)].concat());
                let s = Pair::new(ring.add(&x.left, &y.left), ring.add(&x.right, &y.right));
                (lhs != model.eval(ring, &folded::<R>(model, b, &s))).then(|| h.label(b))
            })
        })
        .collect();
    let comms: Vec<(usize, usize, &[(usize, Formula)])> = coverage.select(&pres.commutators().collect::<Vec<_>>());
    let comm_fail: Vec<String> = comms
        .par_iter()
        .flat_map_iter(|&(zeta, xi, factors)| {
            samples.iter().filter_map(move |(x, y)| {
                let lhs = model.commutator(ring, &folded::<R>(model, zeta, x), &folded::<R>(model, xi, y));
                let rhs: Word<R::Elem> = factors.iter().flat_map(|(rho, f)| folded::<R>(model, *rho, &f.eval(ring, x, y))).collect();
                (lhs != model.eval(ring, &rhs)).then(|| format!("[{}, {}] at ({}, {})", h.label(zeta), h.label(xi), render(ring, x), render(ring, y)))
            })
        })
        .collect();
    vec![
        Check::from_failures(
            format!("{prefix}.additivity"),
            "additivity relations hold in the folded model",
            additive.len() * samples.len(),
            &add_fail,
        ),
        Check::from_failures(
            format!("{prefix}.commutator-relations"),
            "commutator relations with standard maps hold in the folded model",
            comms.len() * samples.len(),
            &comm_fail,
        ),
    ]
}

fn render<R: Ring>(ring: &R, x: &Pair<R::Elem>) -> String {
    format!("({}, {})", ring.render(&x.left), ring.render(&x.right))
}
