//! Verification suites. Each returns its checks; callers sort by id.

use std::fmt;
use std::str::FromStr;

use hfold_blueprint::{
    check_identities_1_35, run_polynomial, validate_cycle, validate_rule_in_model, verify_ring_structure, H3Context, HomotopyCycle, RuleId,
    StandardMaps,
};
use hfold_chevalley::{
    abcd_args, abcd_ring, check_reference_formulas, h3_restriction_mismatches, parity_mismatches, search_e8_twist, square_actions, standard_model,
    verify_grading, ChevalleyModel, Check, Coverage, GradingOptions,
};
use hfold_rings::{Integers, Pair, ZMod};
use hfold_roots::{check_parity_properties, FoldingMap, Kind, ParityTable, RootSystem, SubsystemType, WeylGroup};
use hfold_steinberg::{steinberg_relations, unfold_and_verify, verify_in_model, weyl_param_checks, SteinbergPresentation, Transporter, UnfoldOptions};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

/// Suite names accepted by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Rootsys,
    Folding,
    Chevalley,
    Parity,
    Blueprint,
    Identities,
    Ringstructure,
    Steinberg,
    Unfold,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Rootsys,
        Suite::Folding,
        Suite::Chevalley,
        Suite::Parity,
        Suite::Blueprint,
        Suite::Identities,
        Suite::Ringstructure,
        Suite::Steinberg,
        Suite::Unfold,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format!("{self:?}").to_lowercase())
    }
}

/// Ring selector for the Steinberg relation checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSel {
    /// The integers, on seeded random samples.
    Z,
    /// `Z/n`, on seeded random samples.
    ZMod(u64),
    /// `Z[a, b, c, d]` on the generic arguments.
    Poly,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown ring `{0}`; expected z, z<n> with n >= 2, or poly")]
pub struct UnknownRing(String);

impl FromStr for RingSel {
    type Err = UnknownRing;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.to_ascii_lowercase();
        match t.as_str() {
            "z" => Ok(RingSel::Z),
            "poly" => Ok(RingSel::Poly),
            _ => t
                .strip_prefix('z')
                .and_then(|n| n.parse::<u64>().ok())
                .filter(|&n| n >= 2)
                .map(RingSel::ZMod)
                .ok_or_else(|| UnknownRing(s.to_string())),
        }
    }
}

impl fmt::Display for RingSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSel::Z => write!(f, "z"),
            RingSel::ZMod(n) => write!(f, "z{n}"),
            RingSel::Poly => write!(f, "poly"),
        }
    }
}

/// A rejected selector combination.
#[derive(Debug, thiserror::Error)]
#[error("suite `{suite}` does not support {what}")]
pub struct InvalidSelector {
    pub suite: Suite,
    pub what: String,
}

/// What to run. `systems` holds H kinds; an empty list means every kind
/// the suite supports.
#[derive(Clone, Debug)]
pub struct Selection {
    pub systems: Vec<Kind>,
    pub ring: RingSel,
    pub seed: u64,
}

impl Default for Selection {
    fn default() -> Self {
        Selection { systems: Vec::new(), ring: RingSel::Poly, seed: DEFAULT_SEED }
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed;

/// The folding source of an H kind.
pub fn source_of(h: Kind) -> Option<Kind> {
    match h {
        Kind::H2 => Some(Kind::A4),
        Kind::H3 => Some(Kind::D6),
        Kind::H4 => Some(Kind::E8),
        _ => None,
    }
}

/// The H kind a source or H kind selector refers to.
pub fn h_kind(k: Kind) -> Option<Kind> {
    match k {
        Kind::H2 | Kind::A4 => Some(Kind::H2),
        Kind::H3 | Kind::D6 => Some(Kind::H3),
        Kind::H4 | Kind::E8 => Some(Kind::H4),
        _ => None,
    }
}

impl Selection {
    fn systems(&self, suite: Suite, supported: &[Kind]) -> Result<Vec<Kind>, InvalidSelector> {
        if self.systems.is_empty() {
            return Ok(supported.to_vec());
        }
        match self.systems.iter().find(|k| !supported.contains(k)) {
            Some(k) => Err(InvalidSelector { suite, what: format!("system {}", k.to_string().to_lowercase()) }),
            None => Ok(supported.iter().copied().filter(|k| self.systems.contains(k)).collect()),
        }
    }

    /// Rejects selector combinations the suite cannot run. `all`
    /// restricts each suite to the selected systems it supports.
    pub fn validate(&self, suite: Suite) -> Result<(), InvalidSelector> {
        if suite != Suite::All {
            return self.systems(suite, supported(suite)).map(|_| ());
        }
        match self.systems.iter().find(|k| h_kind(**k).is_none()) {
            Some(k) => Err(InvalidSelector { suite, what: format!("system {}", lower(*k)) }),
            None => Ok(()),
        }
    }
}

fn supported(suite: Suite) -> &'static [Kind] {
    match suite {
        Suite::Rootsys | Suite::Folding | Suite::Chevalley => &[Kind::H2, Kind::H3, Kind::H4],
        Suite::Parity | Suite::Steinberg | Suite::Unfold => &[Kind::H3, Kind::H4],
        Suite::Blueprint | Suite::Identities => &[Kind::H3],
        Suite::Ringstructure => &[Kind::H3, Kind::H4],
        Suite::All => &[Kind::H2, Kind::H3, Kind::H4],
    }
}

fn lower(k: Kind) -> String {
    k.to_string().to_lowercase()
}

fn model(h: Kind) -> &'static ChevalleyModel {
    standard_model(source_of(h).expect("H kind")).expect("standard model builds")
}

/// Runs one suite. `All` runs every suite on the selected systems it
/// supports.
pub fn run(suite: Suite, sel: &Selection) -> Result<Vec<Check>, InvalidSelector> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            let sub = Selection { systems: sel.systems.iter().copied().filter(|k| supported(s).contains(k)).collect(), ..sel.clone() };
            if !sel.systems.is_empty() && sub.systems.is_empty() {
                continue;
            }
            out.extend(run(s, &sub)?);
        }
        out.sort_by(|a, b| a.id.cmp(&b.id));
        return Ok(out);
    }
    let systems = sel.systems(suite, supported(suite))?;
    let mut out = match suite {
        Suite::Rootsys => rootsys(&systems),
        Suite::Folding => folding(&systems),
        Suite::Chevalley => chevalley(&systems),
        Suite::Parity => parity(&systems),
        Suite::Blueprint => blueprint(),
        Suite::Identities => identities(),
        Suite::Ringstructure => ringstructure(systems.contains(&Kind::H4)),
        Suite::Steinberg => steinberg(&systems, sel.ring, sel.seed),
        Suite::Unfold => unfold(&systems),
        Suite::All => unreachable!("handled above"),
    };
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Root system cardinalities, Weyl group orders and, for H3, the
/// subsystems through each root.
pub fn rootsys(systems: &[Kind]) -> Vec<Check> {
    let mut out = Vec::new();
    for &h in systems {
        let s = RootSystem::new(h);
        let want = [(Kind::H2, 10, 10), (Kind::H3, 30, 120), (Kind::H4, 120, 14400)].into_iter().find(|e| e.0 == h).expect("H kind");
        out.push(Check::new(
            format!("rootsys.{}.cardinality", lower(h)),
            "number of roots",
            s.len() == want.1,
            Some(format!("{} roots, expected {}", s.len(), want.1)),
        ));
        let order = WeylGroup::new(&s).map(|w| w.order());
        out.push(Check::new(
            format!("rootsys.{}.weyl-order", lower(h)),
            "order of the Weyl group",
            order.as_ref().is_ok_and(|&n| n == want.2),
            Some(match order {
                Ok(n) => format!("{n} elements, expected {}", want.2),
                Err(e) => e.to_string(),
            }),
        ));
        if h == Kind::H3 {
            let types = [SubsystemType::H2, SubsystemType::A2, SubsystemType::A1xA1];
            let failures: Vec<String> = (0..s.len())
                .flat_map(|a| types.iter().map(move |&t| (a, t)))
                .filter_map(|(a, t)| {
                    let n = s.count_subsystems(a, t);
                    (n != 2).then(|| format!("{} lies in {n} subsystems of type {t}", s.label(a)))
                })
                .collect();
            out.push(Check::from_failures(
                "rootsys.h3.subsystems",
                "every H3 root lies in exactly two subsystems of each type H2, A2, A1xA1",
                s.len() * types.len(),
                &failures,
            ));
        }
    }
    out
}

/// Fiber tables against the reference copies, Weyl equivariance and
/// interval compatibility of each folding.
pub fn folding(systems: &[Kind]) -> Vec<Check> {
    let mut out = Vec::new();
    for &h in systems {
        let src = source_of(h).expect("H kind");
        let k = lower(src);
        let f = FoldingMap::new(src).expect("folding builds");
        if src != Kind::A4 {
            let diff = f.diff_reference();
            let mut c = Check::from_failures(format!("folding.{k}.fiber-table"), "fiber table of the folding, row for row", f.fiber_table().len(), &diff);
            if c.passed {
                c.witness = Some(format!("{} rows equal the reference table", f.fiber_table().len()));
            }
            out.push(c);
        }
        let eq = f.equivariance_failures();
        let labels: Vec<String> = eq.iter().map(|&(a, p)| format!("{} under base reflection {p}", f.source().label(a))).collect();
        out.push(Check::from_failures(
            format!("folding.{k}.equivariance"),
            "the folding intertwines the embedded Weyl group with the H Weyl group",
            f.source().len() * h.rank(),
            &labels,
        ));
        let r = f.check_interval_compatibility();
        let mut failures = Vec::new();
        let mut note = |name: &str, n: usize| {
            if n > 0 {
                failures.push(format!("{n} {name}"));
            }
        };
        note("pi interval violations", r.pi_violations.len());
        note("goldfold interval violations", r.goldfold_violations.len());
        note("goldfold crystallographic interval violations", r.goldfold_cry_violations.len());
        note("H positive-system failures", r.h_possys_failures.len());
        note("GH positive-system failures", r.gh_possys_failures.len());
        let mut c = Check::from_failures(
            format!("folding.{k}.interval-compatibility"),
            "the folding and the golden folding are compatible with root intervals and positive systems",
            r.pairs_checked,
            &failures,
        );
        if c.passed {
            c.witness = Some(format!(
                "{} pairs; crystallographic intervals fail for pi in {} cases, as expected",
                r.pairs_checked,
                r.pi_cry_violations.len()
            ));
        }
        out.push(c);
    }
    out
}

fn sanitize(name: &str) -> String {
    name.replace("psi_", "").chars().filter(|c| !matches!(c, '{' | '}' | '^')).map(|c| if c == ',' { '-' } else { c }).collect()
}

/// Commutation-map formulas, the grading suite, and for H3 the
/// square-action classification.
pub fn chevalley(systems: &[Kind]) -> Vec<Check> {
    let mut out = Vec::new();
    for &h in systems {
        let m = model(h);
        let k = lower(m.kind());
        if h != Kind::H2 {
            for fc in check_reference_formulas(m) {
                let name = fc.spec.name();
                let id = format!("chevalley.{k}.commap.{}", sanitize(&name));
                out.push(Check::new(id, format!("commutation map {name} extracted from the model"), fc.holds(), Some(fc.render())));
            }
        }
        let opts = if h == Kind::H4 {
            GradingOptions {
                pairs: Coverage::Sample(60),
                weyl: Coverage::Sample(3),
                source_pairs: Coverage::Sample(300),
                gh_pairs: Coverage::Sample(300),
                product_samples: 2,
            }
        } else {
            GradingOptions::full()
        };
        out.extend(verify_grading(m, opts));
        if h == Kind::H3 {
            out.push(square_actions(m).0);
        }
    }
    out
}

/// Computed parity tables against the reference tables, the structural
/// properties of the reference tables, and the E8 twist search.
pub fn parity(systems: &[Kind]) -> Vec<Check> {
    let mut out = Vec::new();
    for &h in systems {
        let k = lower(h);
        let m = model(h);
        let rows = m.parity_rows().expect("parity computes");
        let values = rows.len() * h.rank();
        let mism: Vec<String> = parity_mismatches(m, &rows).into_iter().map(|(b, p)| format!("{} at base position {p}", m.h().label(b))).collect();
        let mut c = Check::from_failures(format!("parity.{k}.reference-table"), "parity map computed from the folded model", values, &mism);
        if c.passed {
            c.witness = Some(format!("{values} values equal the reference table"));
        }
        out.push(c);
        let s = RootSystem::new(h);
        let t = ParityTable::standard(&s).expect("reference table");
        let r = check_parity_properties(&s, &t);
        let prop = |what: &str, anchor: &str, ok: bool, n: usize| {
            Check::new(format!("parity.{k}.{what}"), anchor, ok, Some(format!("{n} instances")))
        };
        out.push(prop("braid-invariant", "parity map is braid invariant", r.braid_ok(), r.braid_checked));
        out.push(prop("adjacency-trivial", "parity map is adjacency trivial", r.adjacency_ok(), r.adjacency_checked));
        out.push(prop("complete", "parity values at a stabilised root generate the sign group", r.complete(), r.completeness_witnesses.len()));
        out.push(prop("negation", "eta(-a, d) = eta(a, d)", r.negation_ok(), r.negation_checked));
        if h == Kind::H4 {
            let naive = ChevalleyModel::new(Kind::E8).expect("E8 model");
            let c = match search_e8_twist(&naive) {
                Ok(s) => Check::new(
                    "parity.h4.twist-search",
                    "diagonal twist of the E8 root isomorphisms aligning parities and the (rho0, rho1) maps",
                    s.twist.is_some(),
                    Some(format!(
                        "{} equations, {} free variables, twist of {} positive roots",
                        s.equations,
                        s.free_variables,
                        s.twist.as_ref().map_or(0, Vec::len)
                    )),
                ),
                Err(e) => Check::new("parity.h4.twist-search", "diagonal twist of the E8 root isomorphisms", false, Some(e.to_string())),
            };
            out.push(c);
            if systems.contains(&Kind::H3) {
                let d6 = model(Kind::H3);
                let r3 = d6.parity_rows().expect("parity computes");
                let mism = h3_restriction_mismatches(d6, &r3, m, &rows);
                out.push(Check::from_failures("parity.h4.restricts-to-h3", "H4 parity map restricts to the H3 parity map", r3.len() * 3, &mism));
            }
        }
    }
    out
}

/// Homotopy cycle, the six rules in the D6 model, and the blueprint run
/// with its 15 raw identities and the identities derived from them.
pub fn blueprint() -> Vec<Check> {
    let m = model(Kind::H3);
    let mut out = Vec::new();
    let cycle = HomotopyCycle::embedded();
    let ctx = H3Context::new().expect("H3 context");
    let rep = validate_cycle(&cycle, &ctx);
    let mut c = Check::from_failures(
        "blueprint.cycle",
        "homotopy cycle of the longest word: elementary moves, closed, all words reduced",
        cycle.len(),
        &rep.failures,
    );
    if c.passed {
        c.witness = Some(format!("{} words, {} elementary moves, first word equals last", cycle.len(), rep.moves.len()));
    }
    out.push(c);
    let maps = StandardMaps::from_model(m).expect("maps extract");
    let reference = StandardMaps::reference();
    let differing: Vec<String> = maps.names().into_iter().filter(|&p| maps.formula(p) != reference.formula(p)).map(|p| p.to_string()).collect();
    out.push(Check::from_failures("blueprint.model-maps", "standard maps extracted from the D6 model", maps.names().len(), &differing));
    for rule in RuleId::ALL {
        let v = validate_rule_in_model(rule, m, &maps);
        out.push(Check::new(
            format!("blueprint.rule.{}", rule.to_string().to_lowercase()),
            format!("rewriting rule {rule} preserves the invariant in the D6 model"),
            v.ok(),
            v.witness.or_else(|| Some("invariant preserved, reverse rule inverts".into())),
        ));
    }
    match run_polynomial(&cycle, &maps) {
        Ok((s, ids)) => {
            for r in ids {
                let n: usize = r.label.trim_start_matches("raw-").parse().expect("raw label");
                let witness = if r.verified { "difference is zero".to_string() } else { format!("difference {}", hfold_blueprint::SAlgebra::render(&s, &hfold_blueprint::SAlgebra::sub(&s, &r.left, &r.right))) };
                out.push(Check::new(format!("blueprint.run.raw-{n:02}"), "blueprint run identity x = x'", r.verified, Some(witness)));
            }
        }
        Err(e) => out.push(Check::new("blueprint.run", "blueprint run around the homotopy cycle", false, Some(e.to_string()))),
    }
    out.extend(identities_with(&maps));
    out
}

fn identities_with(maps: &StandardMaps) -> Vec<Check> {
    let (_, recs) = check_identities_1_35(maps);
    recs.into_iter()
        .map(|r| {
            let n: usize = r.label.trim_matches(|c| c == '(' || c == ')').parse().expect("numbered identity");
            Check::new(
                format!("identities.{n:02}"),
                format!("evaluated identity {n} under the standard maps"),
                r.verified,
                Some(if r.verified { "polynomial identity".into() } else { "sides differ".into() }),
            )
        })
        .collect()
}

/// The evaluated identities under the standard maps.
pub fn identities() -> Vec<Check> {
    identities_with(&StandardMaps::reference())
}

/// Ring structure of `S`; with `rank_four`, also the commutator relation
/// of the rank four model.
pub fn ringstructure(rank_four: bool) -> Vec<Check> {
    verify_ring_structure(&StandardMaps::reference(), rank_four.then(|| model(Kind::H4)))
}

fn presentation(h: Kind, seed: u64) -> SteinbergPresentation {
    let tr = Transporter::new(model(h).h()).expect("H3 or H4");
    steinberg_relations(&tr, 3, seed).expect("transport succeeds")
}

/// The Steinberg relation list of each selected type, verified in its
/// folded model over the selected ring, and the Weyl-parameter checks over
/// Z/5.
pub fn steinberg(systems: &[Kind], ring: RingSel, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for &h in systems {
        let m = model(h);
        let pres = presentation(h, seed);
        out.extend(pres.checks(m.h()));
        let name = ring.to_string();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        out.extend(match ring {
            RingSel::Poly => {
                let r = abcd_ring();
                verify_in_model(&pres, m, &r, &name, &[abcd_args(&r)], Coverage::Full)
            }
            RingSel::Z => {
                let mut p = || Pair::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(-9i64..=9)));
                let samples: Vec<_> = (0..2).map(|_| (p(), p())).collect();
                verify_in_model(&pres, m, &Integers, &name, &samples, Coverage::Full)
            }
            RingSel::ZMod(n) => {
                let r = ZMod::new(n);
                let mut p = || Pair::new(rng.gen_range(0..n), rng.gen_range(0..n));
                let samples: Vec<_> = (0..2).map(|_| (p(), p())).collect();
                verify_in_model(&pres, m, &r, &name, &samples, Coverage::Full)
            }
        });
        out.extend(if h == Kind::H3 {
            weyl_param_checks(m, Coverage::Full, Coverage::Full)
        } else {
            weyl_param_checks(m, Coverage::Sample(12), Coverage::Sample(0))
        });
    }
    out
}

/// The unfolding suite on each selected model.
pub fn unfold(systems: &[Kind]) -> Vec<Check> {
    systems.iter().flat_map(|&h| unfold_and_verify(model(h), UnfoldOptions::full())).collect()
}
