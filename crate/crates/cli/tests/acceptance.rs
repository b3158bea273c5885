//! Acceptance suite: one pass/fail line per criterion.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use hfold::{run, Selection, Suite};
use hfold_chevalley::Check;

struct Criterion {
    name: &'static str,
    what: &'static str,
    suite: Suite,
    /// Check id prefixes that make up the criterion.
    ids: &'static [&'static str],
    /// Minimum number of matching checks.
    min: usize,
}

const CRITERIA: [Criterion; 13] = [
    Criterion {
        name: "AC1",
        what: "cardinalities and Weyl group orders of H2, H3, H4",
        suite: Suite::Rootsys,
        ids: &["rootsys.h2.cardinality", "rootsys.h3.cardinality", "rootsys.h4.cardinality", "rootsys.h2.weyl-order", "rootsys.h3.weyl-order", "rootsys.h4.weyl-order"],
        min: 6,
    },
    Criterion { name: "AC2", what: "H3 subsystem counts through every root", suite: Suite::Rootsys, ids: &["rootsys.h3.subsystems"], min: 1 },
    Criterion {
        name: "AC3",
        what: "D6 and E8 fiber tables row for row",
        suite: Suite::Folding,
        ids: &["folding.d6.fiber-table", "folding.e8.fiber-table"],
        min: 2,
    },
    Criterion {
        name: "AC4",
        what: "commutation-map formulas extracted from the D6 and E8 models",
        suite: Suite::Chevalley,
        ids: &["chevalley.d6.commap.", "chevalley.e8.commap."],
        min: 22 + 24,
    },
    Criterion {
        name: "AC5",
        what: "computed H3 and H4 parity tables equal the reference tables",
        suite: Suite::Parity,
        ids: &["parity.h3.reference-table", "parity.h4.reference-table", "parity.h4.twist-search"],
        min: 3,
    },
    Criterion {
        name: "AC6",
        what: "structural parity properties of both reference tables",
        suite: Suite::Parity,
        ids: &[
            "parity.h3.braid-invariant",
            "parity.h3.adjacency-trivial",
            "parity.h3.complete",
            "parity.h3.negation",
            "parity.h4.braid-invariant",
            "parity.h4.adjacency-trivial",
            "parity.h4.complete",
            "parity.h4.negation",
        ],
        min: 8,
    },
    Criterion {
        name: "AC7",
        what: "homotopy cycle, six rules in the D6 model, blueprint run with 15 vanishing differences",
        suite: Suite::Blueprint,
        ids: &["blueprint.cycle", "blueprint.rule.", "blueprint.run."],
        min: 1 + 6 + 15,
    },
    Criterion { name: "AC8", what: "evaluated identities (1) to (35)", suite: Suite::Identities, ids: &["identities."], min: 35 },
    Criterion { name: "AC9", what: "ring structure of S", suite: Suite::Ringstructure, ids: &["ringstructure."], min: 9 },
    Criterion {
        name: "AC10",
        what: "Steinberg relations in both folded models over Z[a,b,c,d]; Weyl parameters over Z/5",
        suite: Suite::Steinberg,
        ids: &["steinberg."],
        min: 2 * (2 + 2) + 5 + 4,
    },
    Criterion {
        name: "AC11",
        what: "unfolding suite for D6 and E8",
        suite: Suite::Unfold,
        ids: &["unfold.d6.", "unfold.e8."],
        min: 12,
    },
    Criterion { name: "AC12", what: "square-action classification over Z/5 for all H3 pairs", suite: Suite::Chevalley, ids: &["chevalley.d6.square-actions"], min: 1 },
    Criterion {
        name: "AC13",
        what: "GH commutator relations and the refinement through long GH roots in the D6 model",
        suite: Suite::Chevalley,
        ids: &["chevalley.d6.gh-relations", "chevalley.d6.refinement"],
        min: 2,
    },
];

fn main() -> ExitCode {
    let mut results: BTreeMap<Suite, (Vec<Check>, f64)> = BTreeMap::new();
    let mut out = std::io::stdout();
    let mut all_pass = true;
    for c in &CRITERIA {
        let (checks, secs) = results.entry(c.suite).or_insert_with(|| {
            let t = Instant::now();
            let checks = run(c.suite, &Selection::default()).expect("default selection is valid");
            (checks, t.elapsed().as_secs_f64())
        });
        let picked: Vec<&Check> = checks.iter().filter(|k| c.ids.iter().any(|p| k.id.starts_with(p))).collect();
        let failed: Vec<&str> = picked.iter().filter(|k| !k.passed).map(|k| k.id.as_str()).collect();
        let pass = failed.is_empty() && picked.len() >= c.min;
        all_pass &= pass;
        let detail = if !failed.is_empty() {
            format!("failed: {}", failed.join(", "))
        } else if picked.len() < c.min {
            format!("only {} of {} checks present", picked.len(), c.min)
        } else {
            format!("checks: {}", picked.len())
        };
        let status = if pass { "pass" } else { "FAIL" };
        writeln!(out, "{} {status}: {} ({detail}; suite {} {:.1} s)", c.name, c.what, c.suite, secs).expect("stdout");
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
