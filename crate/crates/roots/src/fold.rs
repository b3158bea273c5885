use std::collections::HashMap;

use hfold_golden::GoldenRat;
use rayon::prelude::*;

use crate::data::{D6_FIBERS, E8_FIBERS};
use crate::kind::Kind;
use crate::system::RootSystem;

/// The two source roots over one H root, short image first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiberEntry {
    pub beta: usize,
    pub short: usize,
    pub long: usize,
}

/// The folding of A4, D6 or E8 onto GH and H of half the rank.
///
/// `goldfold` is the linear bijection onto the golden system fixed by the
/// base images; `fold` composes it with the scaling of long roots by
/// `tau^{-1}`.
#[derive(Clone, Debug)]
pub struct FoldingMap {
    source: RootSystem,
    gh: RootSystem,
    h: RootSystem,
    gold: Vec<usize>,
    fold: Vec<usize>,
    gh_to_source: Vec<usize>,
    gh_to_h: Vec<usize>,
    fibers: Vec<FiberEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FoldError {
    #[error("{0} is not a folding source")]
    NotASource(Kind),
}

/// Image of the simple root `delta_label`: the target `rho` label and
/// whether the image is `tau rho` rather than `rho`.
pub fn base_image(kind: Kind, label: usize) -> (usize, bool) {
    match (kind, label) {
        (Kind::A4, 2) => (2, false),
        (Kind::A4, 3) => (3, true),
        (Kind::A4, 4) => (2, true),
        (Kind::A4, 5) => (3, false),
        (Kind::D6 | Kind::E8, 1) => (1, false),
        (Kind::D6 | Kind::E8, 2) => (2, false),
        (Kind::D6 | Kind::E8, 3) => (3, true),
        (Kind::D6 | Kind::E8, 4) => (2, true),
        (Kind::D6 | Kind::E8, 5) => (3, false),
        (Kind::D6 | Kind::E8, 6) => (1, true),
        (Kind::E8, 7) => (0, false),
        (Kind::E8, 8) => (0, true),
        _ => panic!("delta_{label} is not a simple root of {kind}"),
    }
}

/// The pair of source labels whose reflections compose to `u(s_rho)`.
pub fn weyl_pair(kind: Kind, rho: usize) -> (usize, usize) {
    let labels = kind.base_labels();
    let short = labels.iter().copied().find(|&l| base_image(kind, l) == (rho, false));
    let long = labels.iter().copied().find(|&l| base_image(kind, l) == (rho, true));
    (short.expect("short preimage"), long.expect("long preimage"))
}

/// Outcome of the interval compatibility checks, listing violating triples
/// `(alpha, beta, gamma)` with `gamma` in the source interval.
#[derive(Clone, Debug, Default)]
pub struct CompatibilityReport {
    pub pairs_checked: usize,
    /// `pi(]a, b[)` not inside `]pi a, pi b[`.
    pub pi_violations: Vec<(usize, usize, usize)>,
    /// `goldfold(]a, b[)` not inside `]goldfold a, goldfold b[`.
    pub goldfold_violations: Vec<(usize, usize, usize)>,
    /// Crystallographic version for `goldfold`.
    pub goldfold_cry_violations: Vec<(usize, usize, usize)>,
    /// Crystallographic version for `pi`; these are expected to exist.
    pub pi_cry_violations: Vec<(usize, usize, usize)>,
    /// Non-proportional H pairs whose preimages fail the positivity test.
    pub h_possys_failures: Vec<(usize, usize)>,
    /// Non-proportional GH pairs whose preimages fail the positivity test.
    pub gh_possys_failures: Vec<(usize, usize)>,
}

impl CompatibilityReport {
    /// All required properties hold and the crystallographic version for
    /// `pi` fails somewhere.
    pub fn as_expected(&self) -> bool {
        self.pi_violations.is_empty()
            && self.goldfold_violations.is_empty()
            && self.goldfold_cry_violations.is_empty()
            && !self.pi_cry_violations.is_empty()
            && self.h_possys_failures.is_empty()
            && self.gh_possys_failures.is_empty()
    }
}

impl FoldingMap {
    pub fn new(source_kind: Kind) -> Result<Self, FoldError> {
        let (gh_kind, h_kind) = match source_kind {
            Kind::A4 => (Kind::GH2, Kind::H2),
            Kind::D6 => (Kind::GH3, Kind::H3),
            Kind::E8 => (Kind::GH4, Kind::H4),
            k => return Err(FoldError::NotASource(k)),
        };
        let source = RootSystem::new(source_kind);
        let gh = RootSystem::new(gh_kind);
        let h = RootSystem::new(h_kind);
        let tau = GoldenRat::tau();
        let src_labels = source_kind.base_labels();
        let images: Vec<Vec<GoldenRat>> = src_labels
            .iter()
            .map(|&l| {
                let (rho, long) = base_image(source_kind, l);
                let pos = gh.base_pos(rho).expect("rho label in target base");
                (0..gh.rank())
                    .map(|k| match (k == pos, long) {
                        (false, _) => GoldenRat::zero(),
                        (true, false) => GoldenRat::one(),
                        (true, true) => tau.clone(),
                    })
                    .collect()
            })
            .collect();
        let gold: Vec<usize> = (0..source.len())
            .map(|i| {
                let mut v = vec![GoldenRat::zero(); gh.rank()];
                for (c, img) in source.coords(i).iter().zip(&images) {
                    if !c.is_zero() {
                        for (vk, ik) in v.iter_mut().zip(img) {
                            *vk = &*vk + &(c * ik);
                        }
                    }
                }
                gh.find(&v).unwrap_or_else(|| panic!("image of root {i} is not in {gh_kind}"))
            })
            .collect();
        let gh_to_h: Vec<usize> = (0..gh.len())
            .map(|j| {
                let c: Vec<GoldenRat> = if gh.is_short(j) {
                    gh.coords(j).to_vec()
                } else {
                    gh.coords(j).iter().map(|x| x / &tau).collect()
                };
                h.find(&c).expect("scaled root lies in H")
            })
            .collect();
        let mut gh_to_source = vec![usize::MAX; gh.len()];
        for (i, &g) in gold.iter().enumerate() {
            gh_to_source[g] = i;
        }
        let fold: Vec<usize> = gold.iter().map(|&g| gh_to_h[g]).collect();
        let mut fibers: Vec<Option<FiberEntry>> = vec![None; h.len()];
        for beta in 0..h.len() {
            let short_gh = gh.find(h.coords(beta)).expect("H is inside GH");
            let long_c: Vec<GoldenRat> = h.coords(beta).iter().map(|x| x * &tau).collect();
            let long_gh = gh.find(&long_c).expect("tau H is inside GH");
            fibers[beta] = Some(FiberEntry { beta, short: gh_to_source[short_gh], long: gh_to_source[long_gh] });
        }
        Ok(FoldingMap {
            source,
            gh,
            h,
            gold,
            fold,
            gh_to_source,
            gh_to_h,
            fibers: fibers.into_iter().map(|f| f.expect("every fiber filled")).collect(),
        })
    }

    pub fn source(&self) -> &RootSystem {
        &self.source
    }

    pub fn gh(&self) -> &RootSystem {
        &self.gh
    }

    pub fn h(&self) -> &RootSystem {
        &self.h
    }

    /// `goldfold(alpha)` as a GH root index.
    pub fn goldfold(&self, alpha: usize) -> usize {
        self.gold[alpha]
    }

    /// `fold(alpha)` as an H root index.
    pub fn fold(&self, alpha: usize) -> usize {
        self.fold[alpha]
    }

    /// The source root over a GH root.
    pub fn unfold_gh(&self, g: usize) -> usize {
        self.gh_to_source[g]
    }

    /// The H root on the ray of a GH root.
    pub fn gh_to_h(&self, g: usize) -> usize {
        self.gh_to_h[g]
    }

    pub fn fiber(&self, beta: usize) -> FiberEntry {
        self.fibers[beta]
    }

    /// Whether the image of `alpha` is short.
    pub fn is_short(&self, alpha: usize) -> bool {
        self.gh.is_short(self.gold[alpha])
    }

    /// `u(w)` for a word of H base positions, as a word of source base
    /// positions: each `s_rho` becomes `s_{delta_i} s_{delta_j}`.
    pub fn embed_weyl(&self, word: &[usize]) -> Vec<usize> {
        let kind = self.source.kind();
        let hl = self.h.base_labels();
        let mut out = Vec::with_capacity(2 * word.len());
        for &p in word {
            let (i, j) = weyl_pair(kind, hl[p]);
            out.push(self.source.base_pos(i).expect("label in base"));
            out.push(self.source.base_pos(j).expect("label in base"));
        }
        out
    }

    /// The source permutation of `u(w)`.
    pub fn embed_weyl_perm(&self, word: &[usize]) -> Vec<u16> {
        let w = self.embed_weyl(word);
        (0..self.source.len()).map(|a| self.source.apply_word(a, &w) as u16).collect()
    }

    /// Checks `goldfold(alpha^{u(s)}) = goldfold(alpha)^s` for every base
    /// reflection `s` of H and every source root; returns the failures as
    /// `(base position, alpha)`.
    pub fn equivariance_failures(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.h.rank() {
            let perm = self.embed_weyl_perm(&[p]);
            let s = self.gh.base()[p];
            for a in 0..self.source.len() {
                if self.gold[perm[a] as usize] != self.gh.reflect(self.gold[a], s) {
                    out.push((p, a));
                }
            }
        }
        out
    }

    /// H roots in the reference row order of the reference fiber table.
    pub fn reference_row_order(&self) -> Vec<usize> {
        let rows: Vec<&str> = match self.source.kind() {
            Kind::D6 => D6_FIBERS.iter().map(|r| r.0).collect(),
            Kind::E8 => E8_FIBERS.iter().map(|r| r.0).collect(),
            _ => return (0..self.h.npos()).collect(),
        };
        rows.into_iter().map(|r| self.h.parse_label(r).expect("reference row is a root")).collect()
    }

    /// Renders a source root as in the reference tables: `e_i+-e_j` for D6 and
    /// A4, simple-root coordinates for E8.
    pub fn source_label(&self, a: usize) -> String {
        match self.source.kind() {
            Kind::E8 => self.source.label(a),
            _ => self.source.ambient_label(a).expect("orthonormal model"),
        }
    }

    /// Computed fiber table `(beta, short, long)` over the positive H roots
    /// in reference row order.
    pub fn fiber_table(&self) -> Vec<(String, String, String)> {
        self.reference_row_order()
            .into_iter()
            .map(|b| {
                let f = self.fiber(b);
                (self.h.label(b), self.source_label(f.short), self.source_label(f.long))
            })
            .collect()
    }

    /// Row-by-row differences between the computed table and the reference
    /// copy. Empty when they agree.
    pub fn diff_reference(&self) -> Vec<String> {
        let reference: Vec<(&str, &str, &str)> = match self.source.kind() {
            Kind::D6 => D6_FIBERS.to_vec(),
            Kind::E8 => E8_FIBERS.to_vec(),
            _ => return Vec::new(),
        };
        let computed = self.fiber_table();
        let mut out = Vec::new();
        if computed.len() != reference.len() {
            out.push(format!("row count {} != {}", computed.len(), reference.len()));
        }
        for (k, (c, r)) in computed.iter().zip(&reference).enumerate() {
            if (c.0.as_str(), c.1.as_str(), c.2.as_str()) != *r {
                out.push(format!("row {}: computed {:?}, reference {:?}", k + 1, c, r));
            }
        }
        out
    }

    fn unit_direction(&self, g: usize) -> Vec<GoldenRat> {
        let tau = GoldenRat::tau();
        if self.gh.is_short(g) {
            self.gh.coords(g).to_vec()
        } else {
            self.gh.coords(g).iter().map(|x| x / &tau).collect()
        }
    }

    /// Exhaustive interval compatibility over ordered non-proportional source
    /// pairs, plus the positive-system hypothesis for `pi` and `goldfold`.
    ///
    /// The hypotheses are stated for subsets; since `goldfold` is linear and
    /// the scaling only multiplies by positive factors, positive combinations
    /// of sets reduce to the pairwise statements checked here. A set of roots
    /// lies in a positive system exactly when some linear functional is
    /// positive on it; the functional used is the sum of the unit directions
    /// of the two target roots.
    pub fn check_interval_compatibility(&self) -> CompatibilityReport {
        let src = &self.source;
        let n = src.len();
        let h_int: HashMap<(usize, usize), (Vec<usize>, Vec<usize>)> = (0..self.h.len())
            .into_par_iter()
            .flat_map_iter(|a| {
                (0..self.h.len()).filter(move |&b| !self.h.proportional(a, b)).map(move |b| {
                    let open = self.h.open_interval(a, b).expect("non-proportional");
                    let cry = self.h.cry_interval(a, b).expect("non-proportional");
                    ((a, b), (open, cry))
                })
            })
            .collect();
        type Triples = Vec<(usize, usize, usize)>;
        let per_alpha: Vec<(usize, Triples, Triples, Triples, Triples)> = (0..n)
            .into_par_iter()
            .map(|a| {
                let (mut pi, mut gold, mut gold_cry, mut pi_cry) = (vec![], vec![], vec![], vec![]);
                let mut count = 0;
                for b in 0..n {
                    if src.proportional(a, b) {
                        continue;
                    }
                    count += 1;
                    let open = src.open_interval(a, b).expect("non-proportional");
                    let cry = src.cry_interval(a, b).expect("non-proportional");
                    let (pa, pb) = (self.fold[a], self.fold[b]);
                    let (ga, gb) = (self.gold[a], self.gold[b]);
                    if self.gh.proportional(ga, gb) {
                        // images on one line: only fiber partners, which are orthogonal
                        gold.extend(open.iter().map(|&g| (a, b, g)));
                        gold_cry.extend(cry.iter().map(|&g| (a, b, g)));
                        pi.extend(open.iter().map(|&g| (a, b, g)));
                        pi_cry.extend(cry.iter().map(|&g| (a, b, g)));
                        continue;
                    }
                    let gh_open = self.gh.open_interval(ga, gb).expect("non-proportional");
                    let gh_cry = self.gh.cry_interval(ga, gb).expect("non-proportional");
                    for &g in &open {
                        if !gh_open.contains(&self.gold[g]) {
                            gold.push((a, b, g));
                        }
                    }
                    for &g in &cry {
                        if !gh_cry.contains(&self.gold[g]) {
                            gold_cry.push((a, b, g));
                        }
                    }
                    let (h_open, h_cry) = &h_int[&(pa, pb)];
                    for &g in &open {
                        if !h_open.contains(&self.fold[g]) {
                            pi.push((a, b, g));
                        }
                    }
                    for &g in &cry {
                        if !h_cry.contains(&self.fold[g]) {
                            pi_cry.push((a, b, g));
                        }
                    }
                }
                (count, pi, gold, gold_cry, pi_cry)
            })
            .collect();
        let mut rep = CompatibilityReport::default();
        for (c, pi, gold, gold_cry, pi_cry) in per_alpha {
            rep.pairs_checked += c;
            rep.pi_violations.extend(pi);
            rep.goldfold_violations.extend(gold);
            rep.goldfold_cry_violations.extend(gold_cry);
            rep.pi_cry_violations.extend(pi_cry);
        }
        rep.h_possys_failures = self.possys_failures(&self.h, |b| {
            let f = self.fiber(b);
            vec![f.short, f.long]
        });
        rep.gh_possys_failures = self.possys_failures(&self.gh, |g| vec![self.gh_to_source[g]]);
        rep
    }

    fn possys_failures(&self, target: &RootSystem, preimage: impl Fn(usize) -> Vec<usize> + Sync) -> Vec<(usize, usize)> {
        let dir = |t: usize| -> Vec<GoldenRat> {
            let g = if target.kind().is_golden() { t } else { self.gh.find(target.coords(t)).expect("H in GH") };
            self.unit_direction(g)
        };
        (0..target.len())
            .into_par_iter()
            .flat_map_iter(|a| {
                let pre = &preimage;
                (0..target.len()).filter(move |&b| !target.proportional(a, b)).filter_map(move |b| {
                    let (da, db) = (dir(a), dir(b));
                    let f: Vec<GoldenRat> = da.iter().zip(&db).map(|(x, y)| x + y).collect();
                    let ok = pre(a)
                        .into_iter()
                        .chain(pre(b))
                        .all(|x| self.gh.ip_coords(self.gh.coords(self.gold[x]), &f).is_positive());
                    (!ok).then_some((a, b))
                })
            })
            .collect()
    }
}
