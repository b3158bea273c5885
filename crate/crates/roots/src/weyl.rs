use std::collections::{HashMap, VecDeque};

use crate::kind::Kind;
use crate::system::{RootError, RootSystem};

/// A Weyl group enumerated as permutations of the root indices.
///
/// Elements are numbered in breadth-first order over the base reflections,
/// so element 0 is the identity and each element's stored word is a reduced
/// word. Roots are acted on from the right: the permutation of `w s` is
/// `j -> s(w(j))`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    perms: Vec<Vec<u16>>,
    parent: Vec<(usize, usize)>,
    index: HashMap<Vec<u16>, usize>,
}

impl WeylGroup {
    /// Enumerates `W(sys)`. Refused for E8 and the golden kinds.
    pub fn new(sys: &RootSystem) -> Result<Self, RootError> {
        if matches!(sys.kind(), Kind::E8 | Kind::GH2 | Kind::GH3 | Kind::GH4) {
            return Err(RootError::WeylRefused(sys.kind()));
        }
        let n = sys.len();
        let gens: Vec<&[u16]> = sys.base().iter().map(|&b| sys.reflection_perm(b)).collect();
        let id: Vec<u16> = (0..n as u16).collect();
        let mut perms = vec![id.clone()];
        let mut parent = vec![(usize::MAX, usize::MAX)];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (g, s) in gens.iter().enumerate() {
                let p: Vec<u16> = perms[e].iter().map(|&j| s[j as usize]).collect();
                if !index.contains_key(&p) {
                    let k = perms.len();
                    index.insert(p.clone(), k);
                    perms.push(p);
                    parent.push((e, g));
                    queue.push_back(k);
                }
            }
        }
        Ok(WeylGroup { perms, parent, index })
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, e: usize) -> &[u16] {
        &self.perms[e]
    }

    /// `alpha^w` for the element `e`.
    pub fn act(&self, e: usize, alpha: usize) -> usize {
        self.perms[e][alpha] as usize
    }

    pub fn find(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Breadth-first parent and last generator (base position) of `e`.
    pub fn parent(&self, e: usize) -> Option<(usize, usize)> {
        (e != 0).then(|| self.parent[e])
    }

    /// A reduced word for `e` as base positions.
    pub fn word(&self, e: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = e;
        while cur != 0 {
            let (p, g) = self.parent[cur];
            w.push(g);
            cur = p;
        }
        w.reverse();
        w
    }

    /// Word length of `e`.
    pub fn length(&self, e: usize) -> usize {
        self.word(e).len()
    }

    /// The element sending every positive root to a negative one.
    pub fn longest(&self, sys: &RootSystem) -> usize {
        (0..self.order())
            .find(|&e| (0..sys.npos()).all(|j| !sys.is_positive(self.act(e, j))))
            .expect("a longest element exists")
    }

    /// Orbit of a root.
    pub fn orbit(&self, alpha: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.perms.iter().map(|p| p[alpha] as usize).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    /// Permutation of a word of base positions.
    pub fn word_perm(sys: &RootSystem, word: &[usize]) -> Vec<u16> {
        (0..sys.len()).map(|j| sys.apply_word(j, word) as u16).collect()
    }
}
