use std::collections::{HashMap, VecDeque};
use std::fmt;

use hfold_golden::{GoldenInt, GoldenRat};
use num_traits::{One, Signed, Zero};

use crate::kind::{dot, Kind};

/// The ambient basis of a coordinate vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Standard orthonormal basis of `R^n`.
    Orthonormal(usize),
    /// Simple roots `rho` of an H kind (shared by the GH kinds), paired with
    /// the exact Gram matrix of that base.
    Golden(usize),
}

/// A vector with exact coordinates in a declared basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVec {
    pub coords: Vec<GoldenRat>,
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("cannot reflect along the zero vector")]
    ZeroVector,
    #[error("vectors live in different bases")]
    BasisMismatch,
    #[error("roots are proportional")]
    Proportional,
    #[error("vector is not a root of {0}")]
    NotARoot(Kind),
    #[error("the Weyl group of {0} is not enumerated")]
    WeylRefused(Kind),
}

/// A finite root system with a fixed ordered base.
///
/// Roots are indexed `0..n`. Positive roots come first, sorted by height and
/// then by base coordinates; negatives follow in the same order, so the
/// negative of root `i` is `(i + npos) % n`. For GH kinds the order is
/// `H+, tau H+, -H+, -tau H+`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: Kind,
    gram: Vec<Vec<GoldenRat>>,
    coords: Vec<Vec<GoldenRat>>,
    ambient: Option<Vec<Vec<GoldenRat>>>,
    index: HashMap<Vec<GoldenRat>, usize>,
    npos: usize,
    ip: Vec<Vec<GoldenRat>>,
    ipf: Vec<Vec<f64>>,
    refl: Vec<Vec<u16>>,
    base: Vec<usize>,
}

impl RootSystem {
    pub fn new(kind: Kind) -> Self {
        let gram = kind.base_gram();
        let n = kind.rank();
        let unit = |i: usize| -> Vec<GoldenRat> {
            (0..n).map(|j| if i == j { GoldenRat::one() } else { GoldenRat::zero() }).collect()
        };
        let base_vecs: Vec<Vec<GoldenRat>> = (0..n).map(unit).collect();
        let reduced = close_under_reflections(&base_vecs, &gram);
        let mut pos: Vec<Vec<GoldenRat>> =
            reduced.into_iter().filter(|c| c.iter().all(|x| !x.is_negative())).collect();
        pos.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        if kind.is_golden() {
            let t = GoldenRat::tau();
            let long: Vec<_> = pos.iter().map(|c| c.iter().map(|x| x * &t).collect::<Vec<_>>()).collect();
            pos.extend(long);
        }
        let npos = pos.len();
        let mut coords = pos.clone();
        coords.extend(pos.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        assert_eq!(coords.len(), kind.size(), "unexpected size of {kind}");
        let index: HashMap<_, _> = coords.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let ambient = kind.ambient_dim().map(|d| {
            let bv = kind.base_vectors();
            coords
                .iter()
                .map(|c| {
                    let mut v = vec![GoldenRat::zero(); d];
                    for (ci, b) in c.iter().zip(&bv) {
                        if !ci.is_zero() {
                            for (vk, bk) in v.iter_mut().zip(b) {
                                *vk = &*vk + &(ci * bk);
                            }
                        }
                    }
                    v
                })
                .collect()
        });
        let total = coords.len();
        let ip: Vec<Vec<GoldenRat>> = (0..total)
            .map(|i| (0..total).map(|j| gram_ip(&gram, &coords[i], &coords[j])).collect())
            .collect();
        let ipf = ip.iter().map(|r| r.iter().map(GoldenRat::to_f64).collect()).collect();
        let base: Vec<usize> = base_vecs.iter().map(|v| index[v]).collect();
        let mut sys = RootSystem {
            kind,
            gram,
            coords,
            ambient,
            index,
            npos,
            ip,
            ipf,
            refl: Vec::new(),
            base,
        };
        sys.refl = (0..total)
            .map(|a| {
                (0..total)
                    .map(|v| {
                        let img = sys.reflect_coords(&sys.coords[v], a);
                        sys.index[&img] as u16
                    })
                    .collect()
            })
            .collect();
        sys
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn npos(&self) -> usize {
        self.npos
    }

    pub fn gram(&self) -> &[Vec<GoldenRat>] {
        &self.gram
    }

    /// Root indices of the ordered base.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Labels of the simple roots (`delta_i` or `rho_i`) in base order.
    pub fn base_labels(&self) -> Vec<usize> {
        self.kind.base_labels()
    }

    /// Position of a label in the base.
    pub fn base_pos(&self, label: usize) -> Option<usize> {
        self.kind.base_labels().iter().position(|&l| l == label)
    }

    pub fn basis(&self) -> Basis {
        match self.kind.ambient_dim() {
            Some(d) => Basis::Orthonormal(d),
            None => Basis::Golden(self.rank()),
        }
    }

    /// Coordinates of root `i` with respect to the base.
    pub fn coords(&self, i: usize) -> &[GoldenRat] {
        &self.coords[i]
    }

    /// Orthonormal coordinates of root `i` (A/D/E kinds only).
    pub fn ambient(&self, i: usize) -> Option<&[GoldenRat]> {
        self.ambient.as_ref().map(|a| a[i].as_slice())
    }

    /// Root `i` as a vector in the system's declared basis.
    pub fn root(&self, i: usize) -> RootVec {
        RootVec {
            coords: self.ambient(i).unwrap_or(&self.coords[i]).to_vec(),
            basis: self.basis(),
        }
    }

    pub fn find(&self, coords: &[GoldenRat]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Looks up a root by a vector in the system's declared basis.
    pub fn find_vec(&self, v: &RootVec) -> Option<usize> {
        if v.basis != self.basis() {
            return None;
        }
        match &self.ambient {
            Some(a) => a.iter().position(|x| *x == v.coords),
            None => self.find(&v.coords),
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn neg(&self, i: usize) -> usize {
        (i + self.npos) % self.len()
    }

    /// Exact inner product of roots `i` and `j`.
    pub fn ip(&self, i: usize, j: usize) -> &GoldenRat {
        &self.ip[i][j]
    }

    pub fn ipf(&self, i: usize, j: usize) -> f64 {
        self.ipf[i][j]
    }

    /// Inner product of arbitrary base-coordinate vectors.
    pub fn ip_coords(&self, a: &[GoldenRat], b: &[GoldenRat]) -> GoldenRat {
        gram_ip(&self.gram, a, b)
    }

    /// Index of `s_a(v)`.
    pub fn reflect(&self, v: usize, a: usize) -> usize {
        self.refl[a][v] as usize
    }

    /// The reflection `s_a` as a permutation of root indices.
    pub fn reflection_perm(&self, a: usize) -> &[u16] {
        &self.refl[a]
    }

    /// Reflects base coordinates `v` along root `a`.
    pub fn reflect_coords(&self, v: &[GoldenRat], a: usize) -> Vec<GoldenRat> {
        reflect_in(&self.gram, v, &self.coords[a])
    }

    /// Applies the base reflections at the given base positions in order
    /// (right action: the first letter acts first).
    pub fn apply_word(&self, v: usize, word: &[usize]) -> usize {
        word.iter().fold(v, |acc, &p| self.reflect(acc, self.base[p]))
    }

    /// Whether roots `i` and `j` are proportional.
    pub fn proportional(&self, i: usize, j: usize) -> bool {
        let (ii, jj, ij) = (&self.ip[i][i], &self.ip[j][j], &self.ip[i][j]);
        (ij * ij) == (ii * jj)
    }

    /// Squared length of root `i`.
    pub fn norm2(&self, i: usize) -> &GoldenRat {
        &self.ip[i][i]
    }

    /// Whether root `i` is short (squared length 1 for H/GH kinds).
    pub fn is_short(&self, i: usize) -> bool {
        !self.kind.is_golden() || self.ip[i][i].is_one()
    }

    /// Renders base coordinates as `a,b,c` with entries like `tau^2`.
    pub fn label(&self, i: usize) -> String {
        self.coords[i].iter().map(render_coord).collect::<Vec<_>>().join(",")
    }

    /// Renders orthonormal coordinates as `e_i-e_j`, `e_i+e_j` and so on.
    pub fn ambient_label(&self, i: usize) -> Option<String> {
        let v = self.ambient(i)?;
        if v.iter().all(|x| x.to_integer().is_some()) {
            let mut s = String::new();
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                if x.is_negative() {
                    s.push('-');
                } else if !s.is_empty() {
                    s.push('+');
                }
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                }
                s.push_str(&format!("e_{}", k + 1));
            }
            Some(s)
        } else {
            Some(format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        }
    }

    /// Parses a base-coordinate label such as `tau,tau^2,1`.
    pub fn parse_label(&self, s: &str) -> Option<usize> {
        let coords = s
            .split(',')
            .map(|t| t.trim().parse::<GoldenInt>().ok().map(GoldenRat::from))
            .collect::<Option<Vec<_>>>()?;
        self.find(&coords)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<_> = self.coords.iter().map(render_coord).collect();
        write!(f, "<{}>", c.join(","))
    }
}

/// Reflects `v` along `a` in a basis with the given Gram matrix. Panics on
/// the zero vector.
pub(crate) fn reflect_in(gram: &[Vec<GoldenRat>], v: &[GoldenRat], a: &[GoldenRat]) -> Vec<GoldenRat> {
    let aa = gram_ip(gram, a, a);
    let av = gram_ip(gram, a, v);
    if av.is_zero() {
        return v.to_vec();
    }
    let c = &(&av + &av) / &aa;
    v.iter().zip(a).map(|(x, y)| x - &(&c * y)).collect()
}

/// `v - 2(a.v)/(a.a) a` for vectors in a common basis.
pub fn reflect(v: &RootVec, a: &RootVec, gram: Option<&[Vec<GoldenRat>]>) -> Result<RootVec, RootError> {
    if v.basis != a.basis {
        return Err(RootError::BasisMismatch);
    }
    if a.coords.iter().all(GoldenRat::is_zero) {
        return Err(RootError::ZeroVector);
    }
    let coords = match (v.basis, gram) {
        (Basis::Golden(_), Some(g)) => reflect_in(g, &v.coords, &a.coords),
        _ => {
            let aa = dot(&a.coords, &a.coords);
            let av = dot(&a.coords, &v.coords);
            let c = &(&av + &av) / &aa;
            v.coords.iter().zip(&a.coords).map(|(x, y)| x - &(&c * y)).collect()
        }
    };
    Ok(RootVec { coords, basis: v.basis })
}

pub(crate) fn gram_ip(gram: &[Vec<GoldenRat>], a: &[GoldenRat], b: &[GoldenRat]) -> GoldenRat {
    let mut s = GoldenRat::zero();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() || gram[i][j].is_zero() {
                continue;
            }
            s = &s + &(&(x * y) * &gram[i][j]);
        }
    }
    s
}

fn height(c: &[GoldenRat]) -> GoldenRat {
    c.iter().fold(GoldenRat::zero(), |s, x| &s + x)
}

fn close_under_reflections(base: &[Vec<GoldenRat>], gram: &[Vec<GoldenRat>]) -> Vec<Vec<GoldenRat>> {
    let mut seen: HashMap<Vec<GoldenRat>, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue: VecDeque<Vec<GoldenRat>> = base.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        if seen.insert(v.clone(), ()).is_some() {
            continue;
        }
        for b in base {
            let w = reflect_in(gram, &v, b);
            if !seen.contains_key(&w) {
                queue.push_back(w);
            }
        }
        out.push(v);
    }
    out
}

/// Renders a coordinate in the compact table notation (`tau^2` for `tau+1`).
pub fn render_coord(x: &GoldenRat) -> String {
    let Some(g) = x.to_golden_int() else {
        return x.to_string();
    };
    if g.b.is_zero() || g.a.is_zero() || g.is_one() {
        return g.table_string();
    }
    if g.a.is_one() && g.b.is_one() {
        return "tau^2".to_string();
    }
    let t = if g.b.is_one() { "tau".to_string() } else { format!("{}tau", g.b) };
    if g.a.is_negative() {
        format!("{t}{}", g.a)
    } else {
        format!("{t}+{}", g.a)
    }
}
