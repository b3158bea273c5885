//! Searches for twist sets that align a model with the reference sign data.

use hfold_golden::GoldenRat;
use hfold_rings::{Integers, SignPair};
use hfold_roots::{Kind, ParityTable};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::commaps::check_reference_formulas;
use crate::model::{ChevalleyModel, ModelError};

/// Subsets of the simple roots of D6 whose twist reproduces every reference
/// commutator formula on H3 and the reference H3 parity table.
pub fn d6_twist_candidates(model: &ChevalleyModel) -> Result<Vec<Vec<usize>>, ModelError> {
    assert_eq!(model.kind(), Kind::D6);
    let base = model.source().base().to_vec();
    let reference = ParityTable::standard(model.h()).expect("embedded H3 table");
    let masks: Vec<u32> = (0..1u32 << base.len()).collect();
    let found: Vec<Option<Vec<usize>>> = masks
        .par_iter()
        .map(|&mask| {
            let t: Vec<usize> = (0..base.len()).filter(|i| mask >> i & 1 == 1).map(|i| base[i]).collect();
            let m = model.with_twist(&t);
            if !check_reference_formulas(&m).iter().all(|c| c.holds()) {
                return Ok(None);
            }
            let rows = m.parity_rows()?;
            let same = rows.iter().enumerate().all(|(b, r)| r.iter().enumerate().all(|(p, v)| *v == reference.get(b, p)));
            Ok(same.then_some(t))
        })
        .collect::<Result<_, ModelError>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// `s` with `x_g(1)^{w_a(1)} = x_{g^{s_a}}(s)` in the given model.
pub fn conjugation_sign(model: &ChevalleyModel, g: usize, a: usize) -> Result<i8, ModelError> {
    let z = Integers;
    let one = BigInt::from(1);
    let w = model.weyl_word(&z, a, &one)?;
    let y = model.conjugate(&z, &model.root_elem(&z, g, &one), &w);
    let target = model.source().reflect(g, a);
    let v = model.as_root_elem(&z, &y, target).ok_or_else(|| ModelError::NoParity {
        beta: model.source().label(g),
        delta: model.source().label(a),
    })?;
    i8::try_from(v).map_err(|_| ModelError::Factorisation("conjugation sign is not a unit".into()))
}

/// A linear system over GF(2) in at most 128 unknowns.
#[derive(Clone, Debug, Default)]
pub struct Gf2System {
    rows: Vec<(u128, bool)>,
}

impl Gf2System {
    pub fn push(&mut self, vars: &[usize], rhs: bool) {
        let mut r = 0u128;
        for &v in vars {
            r ^= 1 << v;
        }
        self.rows.push((r, rhs));
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// A solution with all free variables zero, or `None` if inconsistent.
    /// Also returns the number of free variables.
    pub fn solve(&self, nvars: usize) -> Option<(Vec<bool>, usize)> {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nvars {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].0 >> c & 1 == 1) else { continue };
            rows.swap(r, p);
            let pr = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.0 >> c & 1 == 1 {
                    row.0 ^= pr.0;
                    row.1 ^= pr.1;
                }
            }
            pivots.push(c);
            r += 1;
        }
        if rows[r..].iter().any(|row| row.1) {
            return None;
        }
        let mut x = vec![false; nvars];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = rows[i].1;
        }
        Some((x, nvars - pivots.len()))
    }
}

/// Result of the E8 twist search.
#[derive(Clone, Debug)]
pub struct TwistSearch {
    /// Positive E8 roots in the twist set, if the system is consistent.
    pub twist: Option<Vec<usize>>,
    pub equations: usize,
    pub free_variables: usize,
}

/// Solves for a twist of the E8 model whose folded parity map is the
/// reference H4 table and whose `(rho0, rho1)` commutation map is
/// `((a,b),(c,d)) -> (ac, bd)`.
///
/// A twist by a sign function `t` on roots (with `t(-a) = t(a)`) changes
/// `x_g(1)^{w_a(1)} = x_{g'}(s)` to sign `t_g t_{g'} s`, times the sign of
/// `w_a(1)^2` on `x_g` when `t_a = -1`; and it multiplies the commutator sign
/// `c_{a,b}` by `t_a t_b t_{a+b}`. Both are linear over GF(2).
pub fn search_e8_twist(model: &ChevalleyModel) -> Result<TwistSearch, ModelError> {
    assert_eq!(model.kind(), Kind::E8);
    assert!(model.twist_set().is_empty(), "search starts from the untwisted model");
    let src = model.source();
    let h = model.h();
    let npos = src.npos();
    let base = src.base().to_vec();
    let sigma: Vec<Vec<i8>> = (0..src.len())
        .into_par_iter()
        .map(|g| base.iter().map(|&a| conjugation_sign(model, g, a)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let bpos = |a: usize| base.iter().position(|&x| x == a).expect("simple root");
    let var = |g: usize| if g < npos { g } else { src.neg(g) };
    let reference = ParityTable::standard(h).expect("embedded H4 table");
    let mut sys = Gf2System::default();
    for beta in 0..h.len() {
        for (p, &rho) in h.base().iter().enumerate() {
            let fr = model.fiber(rho);
            let fb = model.fiber(beta);
            let target = model.fiber(h.reflect(beta, rho));
            let eta = reference.get(beta, p);
            for (g, want, expect_end) in [(fb.short, eta.0, target.short), (fb.long, eta.1, target.long)] {
                let (a1, a2) = (fr.short, fr.long);
                let g1 = src.reflect(g, a1);
                let g2 = src.reflect(g1, a2);
                assert_eq!(g2, expect_end, "fiber order is preserved");
                let s1 = sigma[g][bpos(a1)];
                let s2 = sigma[g1][bpos(a2)];
                let k1 = sigma[g][bpos(a1)] * sigma[g1][bpos(a1)] == -1;
                let k2 = sigma[g1][bpos(a2)] * sigma[g2][bpos(a2)] == -1;
                let mut vars = vec![var(g), var(g2)];
                if k1 {
                    vars.push(var(a1));
                }
                if k2 {
                    vars.push(var(a2));
                }
                sys.push(&vars, s1 * s2 * want == -1);
            }
        }
    }
    let rho0 = h.base()[h.base_pos(0).expect("rho0")];
    let rho1 = h.base()[h.base_pos(1).expect("rho1")];
    let (f0, f1) = (model.fiber(rho0), model.fiber(rho1));
    for (a, b) in [(f0.short, f1.short), (f0.long, f1.long)] {
        let c = model.commutator_sign(a, b).ok_or_else(|| ModelError::Factorisation("a + b is not a root".into()))?;
        let sum: Vec<_> = src.coords(a).iter().zip(src.coords(b)).map(|(x, y)| x + y).collect();
        let s = src.find(&sum).expect("sum is a root");
        sys.push(&[var(a), var(b), var(s)], c == -1);
    }
    let solved = sys.solve(npos);
    Ok(TwistSearch {
        twist: solved.as_ref().map(|(x, _)| (0..npos).filter(|&g| x[g]).collect()),
        equations: sys.len(),
        free_variables: solved.map(|s| s.1).unwrap_or(0),
    })
}

/// Compares a computed parity table with the embedded reference.
pub fn parity_mismatches(model: &ChevalleyModel, rows: &[Vec<SignPair>]) -> Vec<(usize, usize)> {
    let reference = ParityTable::standard(model.h()).expect("embedded table");
    let mut out = Vec::new();
    for (b, r) in rows.iter().enumerate() {
        for (p, v) in r.iter().enumerate() {
            if *v != reference.get(b, p) {
                out.push((b, p));
            }
        }
    }
    out
}

/// Cells `(H3 root, base position)` where the parity table of an H3 model
/// differs from the table of an H4 model restricted to the copy of H3
/// spanned by `rho1, rho2, rho3`.
pub fn h3_restriction_mismatches(h3_model: &ChevalleyModel, h3_rows: &[Vec<SignPair>], h4_model: &ChevalleyModel, h4_rows: &[Vec<SignPair>]) -> Vec<(usize, usize)> {
    let (h3, h4) = (h3_model.h(), h4_model.h());
    let p0 = h4.base_pos(0).expect("rho0 in H4");
    let mut out = Vec::new();
    for (b, row) in h3_rows.iter().enumerate() {
        let mut coords = vec![GoldenRat::zero(); 4];
        for (k, c) in h3.coords(b).iter().enumerate() {
            let label = h3.base_labels()[k];
            coords[h4.base_pos(label).expect("label in H4")] = c.clone();
        }
        debug_assert!(coords[p0].is_zero());
        let b4 = h4.find(&coords).expect("H3 root lies in H4");
        for (p, v) in row.iter().enumerate() {
            let q = h4.base_pos(h3.base_labels()[p]).expect("label in H4");
            if h4_rows[b4][q] != *v {
                out.push((b, p));
            }
        }
    }
    out
}
