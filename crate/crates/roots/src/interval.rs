use std::collections::BTreeSet;

use hfold_golden::GoldenRat;

use crate::system::{RootError, RootSystem};

const EPS: f64 = 1e-9;

/// Type of the rank-2 subsystem spanned by two non-proportional roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubsystemType {
    A1xA1,
    A2,
    H2,
}

impl std::fmt::Display for SubsystemType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SubsystemType::A1xA1 => "A1xA1",
            SubsystemType::A2 => "A2",
            SubsystemType::H2 => "H2",
        })
    }
}

/// Relative position of two H roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    /// `(x, y)` or `(x, -y)` is an H2-pair.
    Involution,
    /// The span is of type H2 but the roots meet at 72 or 108 degrees.
    InvertedInvolution,
    NotH2,
}

impl RootSystem {
    /// Exact coefficients `(x, y)` with `root g = x a + y b`, if `g` lies in
    /// the plane of the non-proportional roots `a`, `b`.
    pub fn plane_coeffs(&self, a: usize, b: usize, g: usize) -> Option<(GoldenRat, GoldenRat)> {
        let (aa, bb, ab) = (self.ipf(a, a), self.ipf(b, b), self.ipf(a, b));
        let (ag, bg, gg) = (self.ipf(a, g), self.ipf(b, g), self.ipf(g, g));
        let det = aa * bb - ab * ab;
        let x = (ag * bb - bg * ab) / det;
        let y = (bg * aa - ag * ab) / det;
        if (gg - x * ag - y * bg).abs() > EPS {
            return None;
        }
        let (aa, bb, ab) = (self.ip(a, a), self.ip(b, b), self.ip(a, b));
        let (ag, bg) = (self.ip(a, g), self.ip(b, g));
        let det = &(aa * bb) - &(ab * ab);
        let x = &(&(ag * bb) - &(bg * ab)) / &det;
        let y = &(&(bg * aa) - &(ag * ab)) / &det;
        let (ca, cb, cg) = (self.coords(a), self.coords(b), self.coords(g));
        let exact = (0..ca.len()).all(|k| cg[k] == &(&x * &ca[k]) + &(&y * &cb[k]));
        exact.then_some((x, y))
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<(), RootError> {
        if self.proportional(a, b) {
            Err(RootError::Proportional)
        } else {
            Ok(())
        }
    }

    /// All roots in the plane spanned by `a` and `b`, with coefficients.
    fn plane(&self, a: usize, b: usize) -> Vec<(usize, GoldenRat, GoldenRat)> {
        (0..self.len()).filter_map(|g| self.plane_coeffs(a, b, g).map(|(x, y)| (g, x, y))).collect()
    }

    /// The interval ordering of `]a, b[` starting from `a`: roots `x a + y b`
    /// with `x, y > 0`, sorted by increasing angle from `a`. Proportional
    /// roots (GH kinds only) are ordered short before long.
    pub fn open_interval(&self, a: usize, b: usize) -> Result<Vec<usize>, RootError> {
        self.check_pair(a, b)?;
        let mut v: Vec<_> =
            self.plane(a, b).into_iter().filter(|(_, x, y)| x.is_positive() && y.is_positive()).collect();
        v.sort_by(|p, q| {
            (&p.2 * &q.1).cmp(&(&q.2 * &p.1)).then_with(|| self.norm2(p.0).cmp(self.norm2(q.0)))
        });
        Ok(v.into_iter().map(|p| p.0).collect())
    }

    /// The crystallographic interval: roots `x a + y b` with positive
    /// integers `x`, `y`, in interval order.
    pub fn cry_interval(&self, a: usize, b: usize) -> Result<Vec<usize>, RootError> {
        let open = self.open_interval(a, b)?;
        Ok(open
            .into_iter()
            .filter(|&g| {
                let (x, y) = self.plane_coeffs(a, b, g).expect("interval root lies in the plane");
                x.to_integer().is_some() && y.to_integer().is_some()
            })
            .collect())
    }

    /// All roots in the plane spanned by `a` and `b`, sorted by index.
    pub fn plane_roots(&self, a: usize, b: usize) -> Result<Vec<usize>, RootError> {
        self.check_pair(a, b)?;
        Ok(self.plane(a, b).into_iter().map(|p| p.0).collect())
    }

    /// Type of the subsystem spanned by `a` and `b`.
    pub fn classify_span(&self, a: usize, b: usize) -> Result<SubsystemType, RootError> {
        let n = self.plane_roots(a, b)?.len();
        let n = if self.kind().is_golden() { n / 2 } else { n };
        Ok(match n {
            4 => SubsystemType::A1xA1,
            6 => SubsystemType::A2,
            10 => SubsystemType::H2,
            _ => panic!("unexpected rank-2 subsystem with {n} roots in {}", self.kind()),
        })
    }

    /// All rank-2 subsystems containing `a`, each as its sorted root set.
    pub fn subsystems_through(&self, a: usize) -> Vec<(SubsystemType, Vec<usize>)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for b in 0..self.len() {
            if self.proportional(a, b) {
                continue;
            }
            let plane = self.plane_roots(a, b).expect("non-proportional");
            if seen.insert(plane.clone()) {
                out.push((self.classify_span(a, b).expect("non-proportional"), plane));
            }
        }
        out
    }

    /// Number of rank-2 subsystems of type `ty` containing `a`.
    pub fn count_subsystems(&self, a: usize, ty: SubsystemType) -> usize {
        self.subsystems_through(a).iter().filter(|(t, _)| *t == ty).count()
    }

    /// Relative position of two roots, read off the angle between them.
    pub fn position_of(&self, x: usize, z: usize) -> Position {
        let ip = self.ip(x, z);
        let c2 = &(ip * ip) / &(self.norm2(x) * self.norm2(z));
        let t = GoldenRat::tau();
        let inv = &(&t * &t) / &GoldenRat::from_int(4);
        let tm = &t - &GoldenRat::one();
        let inverted = &(&tm * &tm) / &GoldenRat::from_int(4);
        if c2 == inv {
            Position::Involution
        } else if c2 == inverted {
            Position::InvertedInvolution
        } else {
            Position::NotH2
        }
    }

    /// Whether `(a, b)` is an H2-pair: a root base of an H2 subsystem.
    pub fn is_h2_pair(&self, a: usize, b: usize) -> bool {
        let expect = GoldenRat::from_ints(0, -1, 2);
        self.norm2(a).is_one() && self.norm2(b).is_one() && *self.ip(a, b) == expect
    }

    /// Whether `(a, b)` is an A2-pair: a root base of an A2 subsystem.
    pub fn is_a2_pair(&self, a: usize, b: usize) -> bool {
        let na = self.norm2(a);
        na == self.norm2(b) && (self.ip(a, b) + self.ip(a, b)) == -na
    }

    /// The H2-quintuple `(alpha, beta, gamma, delta, epsilon)` of an H2-pair.
    pub fn quintuple(&self, alpha: usize, epsilon: usize) -> Option<[usize; 5]> {
        if !self.is_h2_pair(alpha, epsilon) {
            return None;
        }
        let i = self.open_interval(alpha, epsilon).ok()?;
        (i.len() == 3).then(|| [alpha, i[0], i[1], i[2], epsilon])
    }

    /// Positive roots in the plane of two base roots.
    pub fn e2_plus(&self) -> Vec<usize> {
        (0..self.npos())
            .filter(|&i| self.coords(i).iter().filter(|c| !c.is_zero()).count() <= 2)
            .collect()
    }

    /// Whether the interval ordering of `]a, b[` satisfies the nesting
    /// property: for the chain `a = g_0, g_1, ..., g_k, g_{k+1} = b`, every
    /// `]g_i, g_j[` consists of exactly the `g_p` with `i < p < j`.
    pub fn interval_nesting_holds(&self, a: usize, b: usize) -> Result<bool, RootError> {
        let mut chain = vec![a];
        chain.extend(self.open_interval(a, b)?);
        chain.push(b);
        for i in 0..chain.len() {
            for j in i + 1..chain.len() {
                let got: BTreeSet<_> = self.open_interval(chain[i], chain[j])?.into_iter().collect();
                let want: BTreeSet<_> = chain[i + 1..j].iter().copied().collect();
                if got != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
