//! Commutation maps as a provider interface: concrete polynomial formulas
//! for verification, uninterpreted symbols for term emission.

use std::collections::HashMap;
use std::fmt;

use hfold_chevalley::{abcd_ring, extract_commutation_map, reference_value, resolve_name, ChevalleyModel, ModelError, REFERENCE_FORMULAS};
use hfold_rings::{Integers, Pair, PairRing, Poly, PolyRing, Ring};
use num_bigint::BigInt;

use crate::algebra::{SAlgebra, Term, TermAlgebra};

/// The roots of the H2-quintuple `(alpha, beta, gamma, delta, epsilon)` of
/// `(rho2, rho3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Q {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
}

impl Q {
    pub const ALL: [Q; 5] = [Q::Alpha, Q::Beta, Q::Gamma, Q::Delta, Q::Epsilon];

    pub fn name(self) -> &'static str {
        match self {
            Q::Alpha => "alpha",
            Q::Beta => "beta",
            Q::Gamma => "gamma",
            Q::Delta => "delta",
            Q::Epsilon => "epsilon",
        }
    }

    pub fn from_name(s: &str) -> Option<Q> {
        Q::ALL.into_iter().find(|q| q.name() == s)
    }
}

/// A commutation map `psi_{zeta,xi}^rho`; `rho` is `None` when the open
/// interval has a single root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Psi {
    pub zeta: Q,
    pub xi: Q,
    pub rho: Option<Q>,
}

impl Psi {
    pub const fn new(zeta: Q, xi: Q, rho: Option<Q>) -> Self {
        Psi { zeta, xi, rho }
    }

    pub fn name(&self) -> String {
        match self.rho {
            Some(r) => format!("psi[{},{};{}]", self.zeta.name(), self.xi.name(), r.name()),
            None => format!("psi[{},{}]", self.zeta.name(), self.xi.name()),
        }
    }
}

impl fmt::Display for Psi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `f = psi_{alpha,gamma}`.
pub const F: Psi = Psi::new(Q::Alpha, Q::Gamma, None);
/// `g = psi_{alpha,delta}^beta`.
pub const G: Psi = Psi::new(Q::Alpha, Q::Delta, Some(Q::Beta));
/// `h1 = psi_{alpha,epsilon}^beta`.
pub const H1: Psi = Psi::new(Q::Alpha, Q::Epsilon, Some(Q::Beta));
/// `h2 = psi_{alpha,epsilon}^gamma`.
pub const H2: Psi = Psi::new(Q::Alpha, Q::Epsilon, Some(Q::Gamma));

/// Supplies `psi(x, y)` in an algebra.
pub trait CommutationMaps<A: SAlgebra> {
    fn psi(&self, alg: &A, p: Psi, x: &A::E, y: &A::E) -> A::E;
}

/// Uninterpreted commutation maps over the term algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct Uninterpreted;

impl CommutationMaps<TermAlgebra> for Uninterpreted {
    fn psi(&self, alg: &TermAlgebra, p: Psi, x: &Term, y: &Term) -> Term {
        alg.psi(p, x, y)
    }
}

/// Commutation maps given as pairs of polynomials in `a, b, c, d`, the
/// arguments being `(a, b)` and `(c, d)`.
#[derive(Clone, Debug)]
pub struct StandardMaps {
    table: HashMap<Psi, Pair<Poly<BigInt>>>,
}

impl StandardMaps {
    /// The reference formulas of the folded Chevalley groups.
    pub fn reference() -> Self {
        let ring = abcd_ring();
        let table = REFERENCE_FORMULAS
            .iter()
            .filter_map(|spec| {
                let zeta = Q::from_name(spec.zeta)?;
                let xi = Q::from_name(spec.xi)?;
                let rho = spec.rho.map(|r| Q::from_name(r).expect("quintuple name"));
                Some((Psi::new(zeta, xi, rho), reference_value(&ring, spec)))
            })
            .collect();
        StandardMaps { table }
    }

    /// The same maps extracted from a folded model of rank at least three.
    pub fn from_model(model: &ChevalleyModel) -> Result<Self, ModelError> {
        let h = model.h();
        let idx = |q: Q| resolve_name(h, q.name()).expect("quintuple root");
        let mut table = HashMap::new();
        for &zeta in &Q::ALL {
            for &xi in &Q::ALL {
                if zeta == xi {
                    continue;
                }
                let rows = extract_commutation_map(model, idx(zeta), idx(xi))?;
                let single = rows.len() == 1;
                for row in rows {
                    let rho = Q::ALL.into_iter().find(|&q| idx(q) == row.rho);
                    let Some(rho) = rho else { continue };
                    let key = Psi::new(zeta, xi, if single { None } else { Some(rho) });
                    table.insert(key, row.value);
                }
            }
        }
        Ok(StandardMaps { table })
    }

    pub fn formula(&self, p: Psi) -> Option<&Pair<Poly<BigInt>>> {
        self.table.get(&p)
    }

    pub fn names(&self) -> Vec<Psi> {
        let mut v: Vec<Psi> = self.table.keys().copied().collect();
        v.sort();
        v
    }

    /// A copy with `p` replaced by `-p`.
    pub fn sabotaged(&self, p: Psi) -> Self {
        let ring = abcd_ring();
        let mut table = self.table.clone();
        if let Some(v) = table.get_mut(&p) {
            *v = Pair::new(ring.neg(&v.left), ring.neg(&v.right));
        }
        StandardMaps { table }
    }
}

impl<R: Ring> CommutationMaps<PairRing<R>> for StandardMaps {
    fn psi(&self, alg: &PairRing<R>, p: Psi, x: &Pair<R::Elem>, y: &Pair<R::Elem>) -> Pair<R::Elem> {
        let formula = self.table.get(&p).unwrap_or_else(|| panic!("no formula for {p}"));
        let ring = abcd_ring();
        let base = alg.base();
        let args = [x.left.clone(), x.right.clone(), y.left.clone(), y.right.clone()];
        let ev = |q: &Poly<BigInt>| eval_abcd(&ring, q, base, &args);
        Pair::new(ev(&formula.left), ev(&formula.right))
    }
}

fn eval_abcd<R: Ring>(ring: &PolyRing<Integers>, q: &Poly<BigInt>, base: &R, args: &[R::Elem; 4]) -> R::Elem {
    ring.eval(q, base, args, |c| base.from_bigint(c))
}
