use hfold_golden::GoldenRat;
use hfold_rings::{Integers, Pair, Ring, SignPair};
use hfold_roots::{FiberEntry, FoldingMap, Kind, ParityTable, RootError, RootSystem};
use num_bigint::BigInt;

use crate::e8::{int, StructureConstants};
use crate::matrix::SparseMatrix;

/// A group element written as a product of root elements `x_root(param)`.
pub type Word<E> = Vec<(usize, E)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("{0} has no matrix model")]
    NoModel(Kind),
    #[error("{0} is not a unit")]
    NonUnit(String),
    #[error("factorisation failed: {0}")]
    Factorisation(String),
    #[error("conjugation of the root group of {beta} by the Weyl element of {delta} matches no sign pair")]
    NoParity { beta: String, delta: String },
    #[error(transparent)]
    Root(#[from] RootError),
}

/// The nilpotent parts of one root homomorphism:
/// `x(r) = 1 + r n1 + r^2 n2`.
#[derive(Clone, Debug)]
struct RootOperator {
    n1: Vec<(usize, usize, i64)>,
    n2: Vec<(usize, usize, i64)>,
    probe: (usize, usize, i64),
}

/// A matrix realisation of the Chevalley group of type A4, D6 or E8 together
/// with its folding onto H2, H3 or H4.
///
/// Root homomorphisms are indexed by the roots of the source system of the
/// folding map. A twist negates the argument of `x_a` and `x_{-a}` for the
/// roots `a` in the twist set.
#[derive(Clone, Debug)]
pub struct ChevalleyModel {
    kind: Kind,
    fold: FoldingMap,
    dim: usize,
    ops: Vec<RootOperator>,
    twist: Vec<bool>,
    constants: Option<StructureConstants>,
}

fn ambient_ints(sys: &RootSystem, i: usize) -> Vec<i64> {
    sys.ambient(i).expect("ambient coordinates").iter().map(|c| int(c).expect("integral ambient coordinate")).collect()
}

fn square_half(dim: usize, n1: &[(usize, usize, i64)]) -> Vec<(usize, usize, i64)> {
    let m = SparseMatrix::from_entries(&Integers, dim, n1.iter().map(|&(i, j, v)| (i, j, BigInt::from(v))));
    let sq = m.mul(&Integers, &m);
    sq.entries()
        .map(|(i, j, v)| {
            let two = BigInt::from(2);
            assert!((v % &two) == BigInt::from(0), "ad^2 / 2 is integral");
            let h: BigInt = v / two;
            (i, j, i64::try_from(h).expect("small entry"))
        })
        .collect()
}

impl ChevalleyModel {
    /// The untwisted model of the given kind.
    pub fn new(kind: Kind) -> Result<Self, ModelError> {
        let fold = FoldingMap::new(kind).map_err(|_| ModelError::NoModel(kind))?;
        let sys = fold.source();
        let n = sys.len();
        let (dim, n1s, constants): (usize, Vec<Vec<(usize, usize, i64)>>, _) = match kind {
            Kind::A4 => {
                let n1s = (0..n)
                    .map(|a| {
                        let v = ambient_ints(sys, a);
                        let p = v.iter().position(|&x| x == 1).expect("e_i - e_j");
                        let q = v.iter().position(|&x| x == -1).expect("e_i - e_j");
                        vec![(p, q, 1)]
                    })
                    .collect();
                (5, n1s, None)
            }
            Kind::D6 => {
                let n1s = (0..n)
                    .map(|a| {
                        let v = ambient_ints(sys, a);
                        let nz: Vec<(usize, i64)> = v.iter().copied().enumerate().filter(|x| x.1 != 0).collect();
                        let [(i, si), (j, sj)] = [nz[0], nz[1]];
                        match (si, sj) {
                            (1, -1) => vec![(i, j, 1), (6 + j, 6 + i, -1)],
                            (-1, 1) => vec![(j, i, 1), (6 + i, 6 + j, -1)],
                            (1, 1) => vec![(i, 6 + j, 1), (j, 6 + i, -1)],
                            (-1, -1) => vec![(6 + j, i, 1), (6 + i, j, -1)],
                            _ => unreachable!("D6 roots are +-e_i +- e_j"),
                        }
                    })
                    .collect();
                (12, n1s, None)
            }
            Kind::E8 => {
                let sc = StructureConstants::e8(sys);
                let n1s = (0..n).map(|a| sc.ad(a)).collect();
                (sc.dim(), n1s, Some(sc))
            }
            k => return Err(ModelError::NoModel(k)),
        };
        let ops = n1s
            .into_iter()
            .map(|n1| {
                let n2 = square_half(dim, &n1);
                let probe = *n1.iter().find(|e| e.2.abs() == 1).expect("unit entry");
                RootOperator { n1, n2, probe }
            })
            .collect();
        Ok(ChevalleyModel { kind, fold, dim, ops, twist: vec![false; n], constants })
    }

    /// A copy with the twist given by a set of positive source roots.
    pub fn with_twist(&self, positive_roots: &[usize]) -> Self {
        let sys = self.source();
        let mut twist = vec![false; sys.len()];
        for &a in positive_roots {
            assert!(sys.is_positive(a), "twist sets consist of positive roots");
            twist[a] = true;
            twist[sys.neg(a)] = true;
        }
        ChevalleyModel { twist, ..self.clone() }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn folding(&self) -> &FoldingMap {
        &self.fold
    }

    pub fn source(&self) -> &RootSystem {
        self.fold.source()
    }

    pub fn h(&self) -> &RootSystem {
        self.fold.h()
    }

    pub fn structure_constants(&self) -> Option<&StructureConstants> {
        self.constants.as_ref()
    }

    /// Positive roots in the twist set.
    pub fn twist_set(&self) -> Vec<usize> {
        (0..self.source().npos()).filter(|&a| self.twist[a]).collect()
    }

    pub fn is_twisted(&self, a: usize) -> bool {
        self.twist[a]
    }

    /// `x_a(r)`.
    pub fn root_elem<R: Ring>(&self, ring: &R, a: usize, r: &R::Elem) -> SparseMatrix<R::Elem> {
        let s = if self.twist[a] { ring.neg(r) } else { r.clone() };
        let op = &self.ops[a];
        let s2 = ring.mul(&s, &s);
        let entries = (0..self.dim)
            .map(|i| (i, i, ring.one()))
            .chain(op.n1.iter().map(|&(i, j, c)| (i, j, ring.scale_int(&s, c))))
            .chain(op.n2.iter().map(|&(i, j, c)| (i, j, ring.scale_int(&s2, c))));
        SparseMatrix::from_entries(ring, self.dim, entries)
    }

    pub fn identity<R: Ring>(&self, ring: &R) -> SparseMatrix<R::Elem> {
        SparseMatrix::identity(ring, self.dim)
    }

    pub fn eval<R: Ring>(&self, ring: &R, w: &[(usize, R::Elem)]) -> SparseMatrix<R::Elem> {
        let mut m = self.identity(ring);
        for (a, r) in w {
            m = m.mul(ring, &self.root_elem(ring, *a, r));
        }
        m
    }

    pub fn inverse_word<R: Ring>(&self, ring: &R, w: &[(usize, R::Elem)]) -> Word<R::Elem> {
        w.iter().rev().map(|(a, r)| (*a, ring.neg(r))).collect()
    }

    /// `g^{-1} x g`.
    pub fn conjugate<R: Ring>(&self, ring: &R, x: &SparseMatrix<R::Elem>, g: &[(usize, R::Elem)]) -> SparseMatrix<R::Elem> {
        self.eval(ring, &self.inverse_word(ring, g)).mul(ring, x).mul(ring, &self.eval(ring, g))
    }

    /// `[x, y] = x^{-1} y^{-1} x y` for words `x`, `y`.
    pub fn commutator<R: Ring>(&self, ring: &R, x: &[(usize, R::Elem)], y: &[(usize, R::Elem)]) -> SparseMatrix<R::Elem> {
        let mut w = self.inverse_word(ring, x);
        w.extend(self.inverse_word(ring, y));
        w.extend(x.iter().cloned());
        w.extend(y.iter().cloned());
        self.eval(ring, &w)
    }

    /// The word of `w_a(r) = x_{-a}(-r^{-1}) x_a(r) x_{-a}(-r^{-1})`.
    pub fn weyl_word<R: Ring>(&self, ring: &R, a: usize, r: &R::Elem) -> Result<Word<R::Elem>, ModelError> {
        let inv = ring.inverse(r).ok_or_else(|| ModelError::NonUnit(ring.render(r)))?;
        let m = ring.neg(&inv);
        let na = self.source().neg(a);
        Ok(vec![(na, m.clone()), (a, r.clone()), (na, m)])
    }

    pub fn weyl_elem<R: Ring>(&self, ring: &R, a: usize, r: &R::Elem) -> Result<SparseMatrix<R::Elem>, ModelError> {
        Ok(self.eval(ring, &self.weyl_word(ring, a, r)?))
    }

    pub fn fiber(&self, beta: usize) -> FiberEntry {
        self.fold.fiber(beta)
    }

    /// The word of `theta_beta(r, s) = x_short(r) x_long(s)`.
    pub fn folded_word<R: Ring>(&self, beta: usize, r: &R::Elem, s: &R::Elem) -> Word<R::Elem> {
        let f = self.fiber(beta);
        vec![(f.short, r.clone()), (f.long, s.clone())]
    }

    pub fn folded_elem<R: Ring>(&self, ring: &R, beta: usize, r: &R::Elem, s: &R::Elem) -> SparseMatrix<R::Elem> {
        self.eval(ring, &self.folded_word::<R>(beta, r, s))
    }

    /// The word of `w_beta(r, s) = w_short(r) w_long(s)`.
    pub fn folded_weyl_word<R: Ring>(&self, ring: &R, beta: usize, r: &R::Elem, s: &R::Elem) -> Result<Word<R::Elem>, ModelError> {
        let f = self.fiber(beta);
        let mut w = self.weyl_word(ring, f.short, r)?;
        w.extend(self.weyl_word(ring, f.long, s)?);
        Ok(w)
    }

    pub fn folded_weyl<R: Ring>(&self, ring: &R, beta: usize, r: &R::Elem, s: &R::Elem) -> Result<SparseMatrix<R::Elem>, ModelError> {
        Ok(self.eval(ring, &self.folded_weyl_word(ring, beta, r, s)?))
    }

    /// The standard Weyl element `w_rho(1, 1)` of a base root of H.
    pub fn standard_weyl_word<R: Ring>(&self, ring: &R, rho: usize) -> Word<R::Elem> {
        self.folded_weyl_word(ring, rho, &ring.one(), &ring.one()).expect("1 is a unit")
    }

    /// The parameter of `m` at root `a`, read from a single matrix entry.
    /// Exact when `m` lies in a product of root groups in which `a` is not
    /// a positive combination of the other roots.
    pub fn read_param<R: Ring>(&self, ring: &R, m: &SparseMatrix<R::Elem>, a: usize) -> R::Elem {
        let (i, j, c) = self.ops[a].probe;
        let sign = if self.twist[a] { -c } else { c };
        m.get(i, j).map(|v| ring.scale_int(v, sign)).unwrap_or_else(|| ring.zero())
    }

    /// `Some(r)` if `m = x_a(r)`.
    pub fn as_root_elem<R: Ring>(&self, ring: &R, m: &SparseMatrix<R::Elem>, a: usize) -> Option<R::Elem> {
        let r = self.read_param(ring, m, a);
        (self.root_elem(ring, a, &r) == *m).then_some(r)
    }

    /// `Some((r, s))` if `m = theta_beta(r, s)`.
    pub fn as_folded_elem<R: Ring>(&self, ring: &R, m: &SparseMatrix<R::Elem>, beta: usize) -> Option<Pair<R::Elem>> {
        let f = self.fiber(beta);
        let r = self.read_param(ring, m, f.short);
        let s = self.read_param(ring, m, f.long);
        (self.folded_elem(ring, beta, &r, &s) == *m).then(|| Pair::new(r, s))
    }

    /// Writes `m` as an ordered product over groups of pairwise commuting
    /// source roots, returning one parameter per root. Fails unless the
    /// remainder after peeling off all factors is the identity.
    pub fn peel<R: Ring>(&self, ring: &R, m: &SparseMatrix<R::Elem>, groups: &[Vec<usize>]) -> Result<Vec<Vec<R::Elem>>, ModelError> {
        let mut cur = m.clone();
        let mut out = Vec::with_capacity(groups.len());
        for g in groups {
            let params: Vec<R::Elem> = g.iter().map(|&a| self.read_param(ring, &cur, a)).collect();
            let w: Word<R::Elem> = g.iter().zip(&params).map(|(&a, p)| (a, p.clone())).collect();
            cur = self.eval(ring, &self.inverse_word(ring, &w)).mul(ring, &cur);
            out.push(params);
        }
        if !cur.is_identity(ring) {
            let (i, j) = cur.first_difference(ring, &self.identity(ring)).expect("not the identity");
            let names: Vec<String> = groups.iter().map(|g| format!("{g:?}")).collect();
            return Err(ModelError::Factorisation(format!("remainder at entry ({i},{j}) after peeling {}", names.join(" "))));
        }
        Ok(out)
    }

    /// Peels `m` along H roots, one folded factor per root.
    pub fn peel_folded<R: Ring>(&self, ring: &R, m: &SparseMatrix<R::Elem>, roots: &[usize]) -> Result<Vec<Pair<R::Elem>>, ModelError> {
        let groups: Vec<Vec<usize>> = roots
            .iter()
            .map(|&b| {
                let f = self.fiber(b);
                vec![f.short, f.long]
            })
            .collect();
        Ok(self
            .peel(ring, m, &groups)?
            .into_iter()
            .map(|mut p| {
                let s = p.pop().expect("two params");
                let r = p.pop().expect("two params");
                Pair::new(r, s)
            })
            .collect())
    }

    /// The components `psi_{zeta,xi}^rho(x, y)` for all `rho` in the open
    /// interval `]zeta, xi[`, in the interval ordering starting from `zeta`.
    pub fn commutation_components<R: Ring>(
        &self,
        ring: &R,
        zeta: usize,
        xi: usize,
        x: &Pair<R::Elem>,
        y: &Pair<R::Elem>,
    ) -> Result<Vec<(usize, Pair<R::Elem>)>, ModelError> {
        let interval = self.h().open_interval(zeta, xi)?;
        let c = self.commutator(ring, &self.folded_word::<R>(zeta, &x.left, &x.right), &self.folded_word::<R>(xi, &y.left, &y.right));
        let parts = self.peel_folded(ring, &c, &interval)?;
        Ok(interval.into_iter().zip(parts).collect())
    }

    /// `c` with `[x_a(r), x_b(s)] = x_{a+b}(c r s)` over the integers.
    pub fn commutator_sign(&self, a: usize, b: usize) -> Option<i8> {
        let sys = self.source();
        let sum: Vec<GoldenRat> = sys.coords(a).iter().zip(sys.coords(b)).map(|(x, y)| x + y).collect();
        let s = sys.find(&sum)?;
        let one = BigInt::from(1);
        let c = self.commutator(&Integers, &[(a, one.clone())], &[(b, one)]);
        let v = self.as_root_elem(&Integers, &c, s)?;
        i8::try_from(v).ok()
    }

    /// The parity `eta(beta, rho)` defined by
    /// `theta_beta(r, s)^{w_rho} = theta_{beta^{s_rho}}(e r, f s)` over Z.
    pub fn compute_parity(&self, beta: usize, rho: usize) -> Result<SignPair, ModelError> {
        let z = Integers;
        let one = BigInt::from(1);
        let w = self.standard_weyl_word(&z, rho);
        let x = self.folded_elem(&z, beta, &one, &one);
        let y = self.conjugate(&z, &x, &w);
        let target = self.h().reflect(beta, rho);
        let err = || ModelError::NoParity { beta: self.h().label(beta), delta: self.h().label(rho) };
        let p = self.as_folded_elem(&z, &y, target).ok_or_else(err)?;
        let sign = |v: &BigInt| -> Option<i8> {
            match i8::try_from(v) {
                Ok(1) => Some(1),
                Ok(-1) => Some(-1),
                _ => None,
            }
        };
        match (sign(&p.left), sign(&p.right)) {
            (Some(e), Some(f)) => Ok(SignPair(e, f)),
            _ => Err(err()),
        }
    }

    /// The parity table over the positive H roots, one column per base root.
    pub fn parity_rows(&self) -> Result<Vec<Vec<SignPair>>, ModelError> {
        let h = self.h();
        (0..h.npos())
            .map(|b| h.base().iter().map(|&rho| self.compute_parity(b, rho)).collect())
            .collect()
    }

    /// The parity table on all H roots, extended to negative roots by
    /// `eta(-beta, rho) = eta(beta, rho)`.
    pub fn parity_table(&self) -> Result<ParityTable, ModelError> {
        let h = self.h();
        let rows = self.parity_rows()?;
        let mut values = vec![Vec::new(); h.len()];
        for (b, r) in rows.into_iter().enumerate() {
            values[h.neg(b)] = r.clone();
            values[b] = r;
        }
        Ok(ParityTable::from_values(h.kind(), values))
    }
}
