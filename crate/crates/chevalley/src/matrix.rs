use hfold_rings::Ring;

/// A square matrix stored row by row as sorted `(column, value)` lists.
///
/// Zero entries are never stored, so structural equality is equality of
/// matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix<E> {
    dim: usize,
    rows: Vec<Vec<(usize, E)>>,
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, dim: usize) -> Self {
        let rows = (0..dim).map(|i| vec![(i, ring.one())]).collect();
        SparseMatrix { dim, rows }
    }

    /// Builds a matrix from `(row, col, value)` triples, adding duplicates.
    pub fn from_entries<R: Ring<Elem = E>>(ring: &R, dim: usize, entries: impl IntoIterator<Item = (usize, usize, E)>) -> Self {
        let mut m = SparseMatrix::zero(dim);
        for (i, j, v) in entries {
            m.add_entry(ring, i, j, &v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, E)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&E> {
        let r = &self.rows[i];
        r.binary_search_by_key(&j, |e| e.0).ok().map(|k| &r[k].1)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn add_entry<R: Ring<Elem = E>>(&mut self, ring: &R, i: usize, j: usize, v: &E) {
        if ring.is_zero(v) {
            return;
        }
        let r = &mut self.rows[i];
        match r.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                let s = ring.add(&r[k].1, v);
                if ring.is_zero(&s) {
                    r.remove(k);
                } else {
                    r[k].1 = s;
                }
            }
            Err(k) => r.insert(k, (j, v.clone())),
        }
    }

    pub fn is_identity<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && ring.is_one(&r[0].1))
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let mut m = self.clone();
        for (i, j, v) in o.entries() {
            m.add_entry(ring, i, j, v);
        }
        m
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let mut m = self.clone();
        for (i, j, v) in o.entries() {
            m.add_entry(ring, i, j, &ring.neg(v));
        }
        m
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        let mut m = SparseMatrix::zero(self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                let p = ring.mul(c, v);
                if !ring.is_zero(&p) {
                    m.rows[i].push((*j, p));
                }
            }
        }
        m
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut acc: Vec<Option<E>> = vec![None; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut rows = Vec::with_capacity(n);
        for r in &self.rows {
            for (k, a) in r {
                for (j, b) in &o.rows[*k] {
                    let p = ring.mul(a, b);
                    match &mut acc[*j] {
                        Some(x) => ring.add_assign(x, &p),
                        slot => {
                            *slot = Some(p);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = acc[j].take().expect("touched slot");
                if !ring.is_zero(&v) {
                    row.push((j, v));
                }
            }
            touched.clear();
            rows.push(row);
        }
        SparseMatrix { dim: n, rows }
    }

    /// Applies `f` to every entry, dropping entries that become zero.
    pub fn map<R: Ring>(&self, target: &R, f: impl Fn(&E) -> R::Elem) -> SparseMatrix<R::Elem> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, f(v))).filter(|(_, v)| !target.is_zero(v)).collect())
            .collect();
        SparseMatrix { dim: self.dim, rows }
    }

    /// First entry (row-major) where `self` and `o` differ.
    pub fn first_difference<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Option<(usize, usize)> {
        let d = self.sub(ring, o);
        let first = d.entries().next().map(|(i, j, _)| (i, j));
        first
    }

    pub fn render<R: Ring<Elem = E>>(&self, ring: &R) -> String {
        let mut s = String::new();
        for (i, j, v) in self.entries() {
            s.push_str(&format!("({i},{j}) {}\n", ring.render(v)));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hfold_rings::Integers;
    use num_bigint::BigInt;

    fn m(entries: &[(usize, usize, i64)]) -> SparseMatrix<BigInt> {
        SparseMatrix::from_entries(&Integers, 3, entries.iter().map(|&(i, j, v)| (i, j, BigInt::from(v))))
    }

    #[test]
    fn products_and_cancellation() {
        let a = m(&[(0, 1, 2), (1, 2, 3)]);
        let b = m(&[(1, 0, 1), (2, 2, -1)]);
        assert_eq!(a.mul(&Integers, &b), m(&[(0, 0, 2), (1, 2, -3)]));
        let i = SparseMatrix::identity(&Integers, 3);
        assert_eq!(a.mul(&Integers, &i), a);
        assert!(a.sub(&Integers, &a).nnz() == 0);
        assert_eq!(m(&[(0, 0, 1), (0, 0, -1)]).nnz(), 0);
    }
}
