use std::fmt;
use std::str::FromStr;

use hfold_golden::GoldenRat;

/// The root systems supported by the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A4,
    D6,
    E8,
    H2,
    H3,
    H4,
    GH2,
    GH3,
    GH4,
}

impl Kind {
    pub const ALL: [Kind; 9] =
        [Kind::A4, Kind::D6, Kind::E8, Kind::H2, Kind::H3, Kind::H4, Kind::GH2, Kind::GH3, Kind::GH4];

    pub fn rank(self) -> usize {
        match self {
            Kind::A4 => 4,
            Kind::D6 => 6,
            Kind::E8 => 8,
            Kind::H2 | Kind::GH2 => 2,
            Kind::H3 | Kind::GH3 => 3,
            Kind::H4 | Kind::GH4 => 4,
        }
    }

    /// A, D and E kinds.
    pub fn is_crystallographic(self) -> bool {
        matches!(self, Kind::A4 | Kind::D6 | Kind::E8)
    }

    pub fn is_golden(self) -> bool {
        matches!(self, Kind::GH2 | Kind::GH3 | Kind::GH4)
    }

    pub fn is_h(self) -> bool {
        matches!(self, Kind::H2 | Kind::H3 | Kind::H4)
    }

    /// The reduced H kind underlying an H or GH kind.
    pub fn reduced(self) -> Kind {
        match self {
            Kind::GH2 => Kind::H2,
            Kind::GH3 => Kind::H3,
            Kind::GH4 => Kind::H4,
            k => k,
        }
    }

    pub fn golden(self) -> Option<Kind> {
        match self {
            Kind::H2 | Kind::GH2 => Some(Kind::GH2),
            Kind::H3 | Kind::GH3 => Some(Kind::GH3),
            Kind::H4 | Kind::GH4 => Some(Kind::GH4),
            _ => None,
        }
    }

    /// Labels of the simple roots in base order: `delta_i` for A/D/E kinds,
    /// `rho_i` for H/GH kinds.
    pub fn base_labels(self) -> Vec<usize> {
        match self {
            Kind::A4 => vec![2, 3, 4, 5],
            Kind::D6 => (1..=6).collect(),
            Kind::E8 => (1..=8).collect(),
            Kind::H2 | Kind::GH2 => vec![2, 3],
            Kind::H3 | Kind::GH3 => vec![1, 2, 3],
            Kind::H4 | Kind::GH4 => vec![0, 1, 2, 3],
        }
    }

    /// Expected number of roots.
    pub fn size(self) -> usize {
        match self {
            Kind::A4 => 20,
            Kind::D6 => 60,
            Kind::E8 => 240,
            Kind::H2 => 10,
            Kind::H3 => 30,
            Kind::H4 => 120,
            Kind::GH2 => 20,
            Kind::GH3 => 60,
            Kind::GH4 => 240,
        }
    }

    /// Gram matrix of the ordered base.
    ///
    /// For the H kinds all simple roots have length 1 and the angles are
    /// obtuse: `rho_i . rho_{i+1} = -1/2` along the simply laced bonds and
    /// `rho_2 . rho_3 = -tau/2` on the bond of order five.
    pub fn base_gram(self) -> Vec<Vec<GoldenRat>> {
        let n = self.rank();
        let mut g = vec![vec![GoldenRat::zero(); n]; n];
        if self.is_crystallographic() {
            let v = self.base_vectors();
            for i in 0..n {
                for j in 0..n {
                    g[i][j] = dot(&v[i], &v[j]);
                }
            }
            return g;
        }
        let labels = self.base_labels();
        for i in 0..n {
            g[i][i] = GoldenRat::one();
        }
        for i in 0..n.saturating_sub(1) {
            let bond = if labels[i] == 2 && labels[i + 1] == 3 {
                GoldenRat::from_ints(0, -1, 2)
            } else {
                GoldenRat::from_ints(-1, 0, 2)
            };
            g[i][i + 1] = bond.clone();
            g[i + 1][i] = bond;
        }
        g
    }

    /// Simple roots of the A/D/E kinds in orthonormal coordinates.
    pub fn base_vectors(self) -> Vec<Vec<GoldenRat>> {
        let e = |n: usize, plus: &[usize], minus: &[usize]| -> Vec<GoldenRat> {
            let mut v = vec![GoldenRat::zero(); n];
            for &i in plus {
                v[i - 1] = GoldenRat::one();
            }
            for &i in minus {
                v[i - 1] = GoldenRat::from_int(-1);
            }
            v
        };
        match self {
            Kind::A4 => vec![e(5, &[1], &[2]), e(5, &[2], &[3]), e(5, &[3], &[4]), e(5, &[4], &[5])],
            Kind::D6 | Kind::E8 => {
                let n = if self == Kind::D6 { 6 } else { 8 };
                let mut v = vec![
                    e(n, &[1], &[2]),
                    e(n, &[2], &[3]),
                    e(n, &[3], &[4]),
                    e(n, &[4], &[5]),
                    e(n, &[5], &[6]),
                    e(n, &[5, 6], &[]),
                ];
                if self == Kind::E8 {
                    v.push(e(8, &[7], &[1]));
                    v.push(vec![GoldenRat::from_ints(-1, 0, 2); 8]);
                }
                v
            }
            _ => panic!("{self} has no orthonormal model"),
        }
    }

    /// Dimension of the ambient orthonormal space for A/D/E kinds.
    pub fn ambient_dim(self) -> Option<usize> {
        match self {
            Kind::A4 => Some(5),
            Kind::D6 => Some(6),
            Kind::E8 => Some(8),
            _ => None,
        }
    }
}

pub(crate) fn dot(a: &[GoldenRat], b: &[GoldenRat]) -> GoldenRat {
    let mut s = GoldenRat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s = &s + &(x * y);
        }
    }
    s
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown root system kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for Kind {
    type Err = UnknownKind;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}
