use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `a + b*tau` of `Z[tau]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        GoldenInt::new(0, 0)
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    pub fn tau() -> Self {
        GoldenInt::new(0, 1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenInt::new(n, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the element lies in `Z`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: `tau` goes to `1 - tau`.
    pub fn conj(&self) -> Self {
        GoldenInt { a: &self.a + &self.b, b: -&self.b }
    }

    /// Field norm `x * conj(x) = a^2 + ab - b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign of the real number `a + b*tau`.
    ///
    /// Writing `2x = s + t*sqrt 5` with `s = 2a + b`, `t = b`, the sign is
    /// read off from `s`, `t` and the comparison `s^2` against `5 t^2`.
    pub fn sign(&self) -> i32 {
        let s: BigInt = BigInt::from(2) * &self.a + &self.b;
        let t = &self.b;
        let ss = sgn(&s);
        let st = sgn(t);
        if ss == 0 {
            return st;
        }
        if st == 0 || ss == st {
            return ss;
        }
        let lhs = &s * &s;
        let rhs = BigInt::from(5) * t * t;
        if lhs > rhs {
            ss
        } else {
            st
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Units of `Z[tau]` are exactly the elements of norm `+-1`.
    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Exact quotient in `Z[tau]`, if it exists.
    pub fn checked_div(&self, d: &GoldenInt) -> Option<GoldenInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let p = self * &d.conj();
        if (&p.a % &n).is_zero() && (&p.b % &n).is_zero() {
            Some(GoldenInt { a: p.a / &n, b: p.b / n })
        } else {
            None
        }
    }

    /// `tau^k` for `k >= 0`.
    pub fn tau_pow(k: u32) -> Self {
        let mut r = GoldenInt::one();
        for _ in 0..k {
            r = &r * &GoldenInt::tau();
        }
        r
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        GoldenInt { a: &self.a * n, b: &self.b * n }
    }

    /// Floating-point approximation, for display and sanity checks only.
    pub fn to_f64(&self) -> f64 {
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * tau
    }

    /// Rendering used by the reference tables: `tau+1` prints as `tau^2`,
    /// otherwise the plain form.
    pub fn table_string(&self) -> String {
        if self.a.is_one() && self.b.is_one() {
            "tau^2".to_string()
        } else {
            self.to_string()
        }
    }
}

fn sgn(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau_part = |b: &BigInt| -> String {
            if b.is_one() {
                "tau".to_string()
            } else if *b == BigInt::from(-1) {
                "-tau".to_string()
            } else {
                format!("{b}tau")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}", tau_part(&self.b)),
            (false, false) => {
                let t = tau_part(&self.b);
                if t.starts_with('-') {
                    write!(f, "{}{}", self.a, t)
                } else {
                    write!(f, "{}+{}", self.a, t)
                }
            }
        }
    }
}

impl From<i64> for GoldenInt {
    fn from(n: i64) -> Self {
        GoldenInt::from_int(n)
    }
}

impl From<BigInt> for GoldenInt {
    fn from(n: BigInt) -> Self {
        GoldenInt::from_int(n)
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -&self.a, b: -&self.b }
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -self.a, b: -self.b }
    }
}

impl<'b> Add<&'b GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, o: &'b GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl<'b> Sub<&'b GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn sub(self, o: &'b GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl<'b> Mul<&'b GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    // (a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t
    fn mul(self, o: &'b GoldenInt) -> GoldenInt {
        let bd = &self.b * &o.b;
        GoldenInt {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, o: GoldenInt) -> GoldenInt {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, o: &'a GoldenInt) -> GoldenInt {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<GoldenInt> for &'a GoldenInt {
            type Output = GoldenInt;
            fn $m(self, o: GoldenInt) -> GoldenInt {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&GoldenInt> for GoldenInt {
    fn add_assign(&mut self, o: &GoldenInt) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&GoldenInt> for GoldenInt {
    fn sub_assign(&mut self, o: &GoldenInt) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl MulAssign<&GoldenInt> for GoldenInt {
    fn mul_assign(&mut self, o: &GoldenInt) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    #[test]
    fn defining_relation() {
        assert_eq!(&GoldenInt::tau() * &GoldenInt::tau(), g(1, 1));
        assert_eq!(g(1, 1) * g(2, -1), g(1, 0));
        assert_eq!(g(1, 2) * g(1, 0), g(1, 2));
    }

    #[test]
    fn signs() {
        assert_eq!(g(1, -1).sign(), -1);
        assert_eq!(g(0, 0).sign(), 0);
        assert_eq!(g(5, -3).sign(), 1);
        assert_eq!(g(-2, 1).sign(), -1);
        assert_eq!(g(-1, 1).sign(), 1);
    }

    #[test]
    fn conj_and_norm() {
        assert_eq!(GoldenInt::tau().conj(), g(1, -1));
        assert_eq!(GoldenInt::tau().norm(), BigInt::from(-1));
        let x = g(1, 1);
        let y = g(2, -1);
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn rendering() {
        assert_eq!(g(1, 2).to_string(), "1+2tau");
        assert_eq!(g(0, -1).to_string(), "-tau");
        assert_eq!(g(3, -2).to_string(), "3-2tau");
        assert_eq!(g(1, 1).table_string(), "tau^2");
        assert_eq!(g(0, 2).table_string(), "2tau");
    }

    #[test]
    fn division() {
        assert_eq!(g(1, 0).checked_div(&g(0, 1)), Some(g(-1, 1)));
        assert_eq!(g(1, 0).checked_div(&g(2, 0)), None);
    }
}
