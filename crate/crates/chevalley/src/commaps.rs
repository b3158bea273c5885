//! Commutation maps of folded models and the reference formulas for the
//! pairs in the plane of two base roots.

use hfold_rings::{Integers, Pair, Poly, PolyRing, Ring};
use hfold_roots::RootSystem;
use num_bigint::BigInt;

use crate::model::{ChevalleyModel, ModelError};

/// One commutation map `psi_{zeta,xi}^rho((a,b),(c,d))` as a pair of
/// polynomials in `a, b, c, d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommRow {
    pub zeta: usize,
    pub xi: usize,
    pub rho: usize,
    pub value: Pair<Poly<BigInt>>,
}

/// A reference formula: root names and the two components as monomials
/// with an optional sign, or `0`.
#[derive(Clone, Copy, Debug)]
pub struct FormulaSpec {
    pub zeta: &'static str,
    pub xi: &'static str,
    /// `None` when the interval has a single root.
    pub rho: Option<&'static str>,
    pub left: &'static str,
    pub right: &'static str,
}

const fn f(zeta: &'static str, xi: &'static str, rho: Option<&'static str>, left: &'static str, right: &'static str) -> FormulaSpec {
    FormulaSpec { zeta, xi, rho, left, right }
}

/// The commutator formulas of the folded Chevalley groups for
/// non-adjacent pairs in the plane of two base roots. Greek names refer to
/// the H2-quintuple `(alpha, beta, gamma, delta, epsilon)` of
/// `(rho2, rho3)`.
pub const REFERENCE_FORMULAS: [FormulaSpec; 24] = [
    f("rho0", "rho1", None, "ac", "bd"),
    f("rho1", "rho0", None, "-ac", "-bd"),
    f("rho1", "rho2", None, "ac", "bd"),
    f("rho2", "rho1", None, "-ac", "-bd"),
    f("alpha", "gamma", None, "0", "ac"),
    f("gamma", "alpha", None, "0", "-ac"),
    f("beta", "delta", None, "0", "-ac"),
    f("delta", "beta", None, "0", "ac"),
    f("gamma", "epsilon", None, "0", "ac"),
    f("epsilon", "gamma", None, "0", "-ac"),
    f("alpha", "delta", Some("beta"), "0", "-bc"),
    f("delta", "alpha", Some("beta"), "0", "ad"),
    f("alpha", "delta", Some("gamma"), "0", "ad"),
    f("delta", "alpha", Some("gamma"), "0", "-bc"),
    f("beta", "epsilon", Some("gamma"), "0", "bc"),
    f("epsilon", "beta", Some("gamma"), "0", "-ad"),
    f("beta", "epsilon", Some("delta"), "0", "-ad"),
    f("epsilon", "beta", Some("delta"), "0", "bc"),
    f("alpha", "epsilon", Some("beta"), "bc", "abd"),
    f("epsilon", "alpha", Some("beta"), "-ad", "-bcd"),
    f("alpha", "epsilon", Some("gamma"), "-bd", "abcd"),
    f("epsilon", "alpha", Some("gamma"), "bd", "-abcd"),
    f("alpha", "epsilon", Some("delta"), "ad", "-bcd"),
    f("epsilon", "alpha", Some("delta"), "-bc", "abd"),
];

impl FormulaSpec {
    /// Whether the formula involves `rho0` and so needs the rank four model.
    pub fn needs_h4(&self) -> bool {
        self.zeta == "rho0" || self.xi == "rho0"
    }

    /// Display name in the form `psi_{zeta,xi}^{rho}`.
    pub fn name(&self) -> String {
        match self.rho {
            Some(r) => format!("psi_{{{},{}}}^{{{}}}", self.zeta, self.xi, r),
            None => format!("psi_{{{},{}}}", self.zeta, self.xi),
        }
    }
}

/// The polynomial ring `Z[a, b, c, d]` in which commutation maps live.
pub fn abcd_ring() -> PolyRing<Integers> {
    PolyRing::integer(&["a", "b", "c", "d"])
}

/// The generic pair arguments `(a, b)`, `(c, d)`.
pub fn abcd_args(ring: &PolyRing<Integers>) -> (Pair<Poly<BigInt>>, Pair<Poly<BigInt>>) {
    (Pair::new(ring.var(0), ring.var(1)), Pair::new(ring.var(2), ring.var(3)))
}

/// Parses `0`, `ac`, `-abcd`: a signed product of single-letter variables.
pub fn parse_monomial(ring: &PolyRing<Integers>, s: &str) -> Poly<BigInt> {
    if s == "0" {
        return ring.zero();
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let mut p = ring.one();
    for ch in body.chars() {
        p = ring.mul(&p, &ring.var_named(&ch.to_string()));
    }
    if neg {
        ring.neg(&p)
    } else {
        p
    }
}

/// Resolves `rho0..rho3` and the quintuple names of `(rho2, rho3)` in an H
/// system.
pub fn resolve_name(h: &RootSystem, name: &str) -> Option<usize> {
    let rho = |k: usize| h.base_pos(k).map(|p| h.base()[p]);
    let q = || h.quintuple(rho(2)?, rho(3)?);
    match name {
        "rho0" => rho(0),
        "rho1" => rho(1),
        "rho2" | "alpha" => rho(2),
        "rho3" | "epsilon" => rho(3),
        "beta" => q().map(|q| q[1]),
        "gamma" => q().map(|q| q[2]),
        "delta" => q().map(|q| q[3]),
        _ => None,
    }
}

/// The reference value of a formula as a pair of polynomials.
pub fn reference_value(ring: &PolyRing<Integers>, spec: &FormulaSpec) -> Pair<Poly<BigInt>> {
    Pair::new(parse_monomial(ring, spec.left), parse_monomial(ring, spec.right))
}

/// All commutation maps of `(zeta, xi)`, computed from the model over
/// `Z[a, b, c, d]`.
pub fn extract_commutation_map(model: &ChevalleyModel, zeta: usize, xi: usize) -> Result<Vec<CommRow>, ModelError> {
    let ring = abcd_ring();
    let (x, y) = abcd_args(&ring);
    Ok(model
        .commutation_components(&ring, zeta, xi, &x, &y)?
        .into_iter()
        .map(|(rho, value)| CommRow { zeta, xi, rho, value })
        .collect())
}

/// Outcome of comparing one reference formula with the model.
#[derive(Clone, Debug)]
pub struct FormulaCheck {
    pub spec: FormulaSpec,
    pub computed: Option<Pair<Poly<BigInt>>>,
    pub expected: Pair<Poly<BigInt>>,
}

impl FormulaCheck {
    pub fn holds(&self) -> bool {
        self.computed.as_ref() == Some(&self.expected)
    }

    pub fn render(&self) -> String {
        let ring = abcd_ring();
        let show = |p: &Pair<Poly<BigInt>>| format!("({}, {})", ring.render(&p.left), ring.render(&p.right));
        let got = self.computed.as_ref().map(show).unwrap_or_else(|| "failed".into());
        format!("{} = {} (expected {})", self.spec.name(), got, show(&self.expected))
    }
}

/// Checks every reference formula the model can see: all of them for the
/// rank four model, those without `rho0` otherwise.
pub fn check_reference_formulas(model: &ChevalleyModel) -> Vec<FormulaCheck> {
    let h = model.h();
    let ring = abcd_ring();
    REFERENCE_FORMULAS
        .iter()
        .filter(|s| h.rank() == 4 || !s.needs_h4())
        .map(|spec| {
            let zeta = resolve_name(h, spec.zeta).expect("known name");
            let xi = resolve_name(h, spec.xi).expect("known name");
            let rho = spec.rho.map(|r| resolve_name(h, r).expect("known name"));
            let computed = extract_commutation_map(model, zeta, xi).ok().and_then(|rows| match rho {
                Some(r) => rows.into_iter().find(|row| row.rho == r).map(|row| row.value),
                None if rows.len() == 1 => rows.into_iter().next().map(|row| row.value),
                None => None,
            });
            FormulaCheck { spec: *spec, computed, expected: reference_value(&ring, spec) }
        })
        .collect()
}
