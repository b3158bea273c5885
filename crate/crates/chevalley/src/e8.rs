//! A Chevalley basis of the Lie algebra of type E8 built from a bimultiplicative
//! sign cocycle on the root lattice.

use hfold_golden::GoldenRat;
use hfold_roots::{Kind, RootSystem};
use num_traits::ToPrimitive;
use rayon::prelude::*;

pub(crate) fn int(g: &GoldenRat) -> Option<i64> {
    g.to_integer().and_then(|n| n.to_i64())
}

/// Bracket table of a Chevalley basis `(x_alpha) u (h_1, ..., h_8)`.
///
/// Basis index `i < 240` is the root vector `x_i` of root `i` of the E8
/// system; index `240 + k` is the simple coroot `h_k`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    nroots: usize,
    rank: usize,
    table: Vec<Vec<(u16, i8)>>,
}

impl StructureConstants {
    /// Constants `N_{a,b} = eps(a,b) k_a k_b k_{a+b}` with the cocycle
    /// `eps(d_i, d_j) = -1` for `i = j` and for bonded `i < j`, and the sign
    /// `k` that is `-1` on negative roots, so that `[x_a, x_{-a}] = h_a`.
    pub fn e8(sys: &RootSystem) -> Self {
        assert_eq!(sys.kind(), Kind::E8);
        let n = sys.len();
        let rank = sys.rank();
        let coords: Vec<Vec<i64>> = (0..n)
            .map(|i| sys.coords(i).iter().map(|c| int(c).expect("integral E8 coordinates")).collect())
            .collect();
        let base = sys.base();
        let bonded = |i: usize, j: usize| i < j && int(sys.ip(base[i], base[j])) == Some(-1);
        let eps = |a: &[i64], b: &[i64]| -> i8 {
            let mut e = 0i64;
            for i in 0..rank {
                for j in 0..rank {
                    if i == j || bonded(i, j) {
                        e += a[i] * b[j];
                    }
                }
            }
            if e.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };
        let kappa = |i: usize| -> i8 {
            if sys.is_positive(i) {
                1
            } else {
                -1
            }
        };
        let pairing = |i: usize, j: usize| int(sys.ip(i, j)).expect("integral pairing");
        let dim = n + rank;
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..n {
            for b in 0..n {
                let entry = &mut table[a * dim + b];
                if b == sys.neg(a) {
                    for (k, &c) in coords[a].iter().enumerate() {
                        if c != 0 {
                            entry.push(((n + k) as u16, c as i8));
                        }
                    }
                    continue;
                }
                let sum: Vec<_> = coords[a].iter().zip(&coords[b]).map(|(x, y)| x + y).collect();
                let golden: Vec<_> = sum.iter().map(|&x| GoldenRat::from_ints(x, 0, 1)).collect();
                if let Some(s) = sys.find(&golden) {
                    let v = eps(&coords[a], &coords[b]) * kappa(a) * kappa(b) * kappa(s);
                    entry.push((s as u16, v));
                }
            }
            for k in 0..rank {
                let p = pairing(a, base[k]);
                if p != 0 {
                    table[a * dim + n + k].push((a as u16, -p as i8));
                    table[(n + k) * dim + a].push((a as u16, p as i8));
                }
            }
        }
        StructureConstants { nroots: n, rank, table }
    }

    pub fn dim(&self) -> usize {
        self.nroots + self.rank
    }

    /// `[b_i, b_j]` as a sparse combination of basis elements.
    pub fn bracket(&self, i: usize, j: usize) -> &[(u16, i8)] {
        &self.table[i * self.dim() + j]
    }

    /// `N_{a,b}` for roots `a`, `b` with `a + b` a root.
    pub fn n(&self, a: usize, b: usize) -> Option<i8> {
        self.bracket(a, b).iter().find(|(k, _)| (*k as usize) < self.nroots).map(|x| x.1)
    }

    fn bracket_into(&self, i: usize, j: usize, c: i64, acc: &mut [i64], touched: &mut Vec<usize>) {
        for &(k, d) in self.bracket(i, j) {
            let k = k as usize;
            acc[k] += c * d as i64;
            touched.push(k);
        }
    }

    /// Basis triples `i < j < k` violating the Jacobi identity.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let dim = self.dim();
        (0..dim)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                let mut acc = vec![0i64; dim];
                let mut touched = Vec::new();
                for j in i + 1..dim {
                    for k in j + 1..dim {
                        for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                            for &(m, c) in self.bracket(y, z) {
                                self.bracket_into(x, m as usize, c as i64, &mut acc, &mut touched);
                            }
                        }
                        let bad = touched.iter().any(|&t| acc[t] != 0);
                        for &t in &touched {
                            acc[t] = 0;
                        }
                        touched.clear();
                        if bad {
                            out.push((i, j, k));
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// Matrix entries `(row, col, value)` of `ad x_a`.
    pub fn ad(&self, a: usize) -> Vec<(usize, usize, i64)> {
        let mut e = Vec::new();
        for col in 0..self.dim() {
            for &(row, c) in self.bracket(a, col) {
                e.push((row as usize, col, c as i64));
            }
        }
        e
    }
}
