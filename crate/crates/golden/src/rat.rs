use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::GoldenInt;

/// An element `num / den` of `Q(tau)` in canonical form: `den > 0` and
/// `gcd(num.a, num.b, den) = 1`. Zero is stored as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenRat {
    num: GoldenInt,
    den: BigInt,
}

impl GoldenRat {
    /// Builds and canonicalises `num / den`. Panics on a zero denominator.
    pub fn new(num: GoldenInt, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        let mut r = GoldenRat { num, den };
        r.reduce();
        r
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenRat { num: GoldenInt::from_int(n), den: BigInt::one() }
    }

    pub fn from_ints(a: i64, b: i64, den: i64) -> Self {
        GoldenRat::new(GoldenInt::new(a, b), den)
    }

    pub fn zero() -> Self {
        GoldenRat::from_int(0)
    }

    pub fn one() -> Self {
        GoldenRat::from_int(1)
    }

    pub fn tau() -> Self {
        GoldenRat::from(GoldenInt::tau())
    }

    pub fn num(&self) -> &GoldenInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.a.gcd(&self.num.b).gcd(&self.den);
        if !g.is_one() {
            self.num.a /= &g;
            self.num.b /= &g;
            self.den /= &g;
        }
        if self.den.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The element as a member of `Z[tau]`, if it is one.
    pub fn to_golden_int(&self) -> Option<GoldenInt> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// The element as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.den.is_one() && self.num.b.is_zero()).then(|| self.num.a.clone())
    }

    pub fn sign(&self) -> i32 {
        self.num.sign()
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

    pub fn conj(&self) -> Self {
        GoldenRat { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(n/d) = d * conj(n) / N(n)
        let n = self.num.norm();
        Some(GoldenRat::new(self.num.conj().scale(&self.den), n))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.num.to_f64() / self.den.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for GoldenRat {
    fn default() -> Self {
        GoldenRat::zero()
    }
}

impl From<GoldenInt> for GoldenRat {
    fn from(num: GoldenInt) -> Self {
        GoldenRat { num, den: BigInt::one() }
    }
}

impl From<i64> for GoldenRat {
    fn from(n: i64) -> Self {
        GoldenRat::from_int(n)
    }
}

impl PartialOrd for GoldenRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for GoldenRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.b.is_zero() || self.num.a.is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl Neg for &GoldenRat {
    type Output = GoldenRat;
    fn neg(self) -> GoldenRat {
        GoldenRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for GoldenRat {
    type Output = GoldenRat;
    fn neg(self) -> GoldenRat {
        GoldenRat { num: -self.num, den: self.den }
    }
}

impl<'b> Add<&'b GoldenRat> for &GoldenRat {
    type Output = GoldenRat;
    fn add(self, o: &'b GoldenRat) -> GoldenRat {
        if self.den == o.den {
            return GoldenRat::new(&self.num + &o.num, self.den.clone());
        }
        GoldenRat::new(self.num.scale(&o.den) + o.num.scale(&self.den), &self.den * &o.den)
    }
}

impl<'b> Sub<&'b GoldenRat> for &GoldenRat {
    type Output = GoldenRat;
    fn sub(self, o: &'b GoldenRat) -> GoldenRat {
        self + &(-o)
    }
}

impl<'b> Mul<&'b GoldenRat> for &GoldenRat {
    type Output = GoldenRat;
    fn mul(self, o: &'b GoldenRat) -> GoldenRat {
        GoldenRat::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'b> Div<&'b GoldenRat> for &GoldenRat {
    type Output = GoldenRat;
    /// Panics on division by zero.
    fn div(self, o: &'b GoldenRat) -> GoldenRat {
        self * &o.inverse().expect("division by zero in Q(tau)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GoldenRat> for GoldenRat {
            type Output = GoldenRat;
            fn $m(self, o: GoldenRat) -> GoldenRat {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GoldenRat> for GoldenRat {
            type Output = GoldenRat;
            fn $m(self, o: &'a GoldenRat) -> GoldenRat {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<GoldenRat> for &'a GoldenRat {
            type Output = GoldenRat;
            fn $m(self, o: GoldenRat) -> GoldenRat {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let x = GoldenRat::from_ints(2, 4, -6);
        assert_eq!(x.num(), &GoldenInt::new(-1, -2));
        assert_eq!(x.den(), &BigInt::from(3));
        assert_eq!(GoldenRat::from_ints(0, 0, 7), GoldenRat::zero());
        assert_eq!(GoldenRat::from_ints(0, 0, 7).den(), &BigInt::one());
    }

    #[test]
    fn inverse_of_half_tau() {
        let x = GoldenRat::from_ints(0, 1, 2);
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        // 2/tau = 2(tau - 1)
        assert_eq!(y, GoldenRat::from_ints(-2, 2, 1));
    }

    #[test]
    fn ordering() {
        let half_tau = GoldenRat::from_ints(0, 1, 2);
        let one = GoldenRat::one();
        assert!(one < GoldenRat::tau());
        assert!(half_tau < one);
        assert!(GoldenRat::from_ints(-1, 1, 2) < GoldenRat::from_ints(1, 0, 2));
    }
}
