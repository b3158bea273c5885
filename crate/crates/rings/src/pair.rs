use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;

use crate::Ring;

/// An element of the sign group `{+-1} x {+-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPair(pub i8, pub i8);

impl SignPair {
    pub const ONE: SignPair = SignPair(1, 1);
    pub const ALL: [SignPair; 4] =
        [SignPair(1, 1), SignPair(-1, -1), SignPair(-1, 1), SignPair(1, -1)];

    /// Panics unless both components are `+-1`.
    pub fn new(e: i64, f: i64) -> Self {
        assert!(e.abs() == 1 && f.abs() == 1, "sign components must be +-1");
        SignPair(e as i8, f as i8)
    }

    pub fn is_one(&self) -> bool {
        *self == SignPair::ONE
    }

    /// Every element is its own inverse.
    pub fn inv(self) -> Self {
        self
    }
}

impl Mul for SignPair {
    type Output = SignPair;
    fn mul(self, o: SignPair) -> SignPair {
        SignPair(self.0 * o.0, self.1 * o.1)
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// An element `(r, s)` of `R x R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair<E> {
    pub left: E,
    pub right: E,
}

impl<E> Pair<E> {
    pub fn new(left: E, right: E) -> Self {
        Pair { left, right }
    }
}

/// The product ring `R x R` with the twisting involution and sign action.
#[derive(Clone, Debug)]
pub struct PairRing<R: Ring> {
    base: R,
}

impl<R: Ring> PairRing<R> {
    pub fn new(base: R) -> Self {
        PairRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn pair(&self, left: R::Elem, right: R::Elem) -> Pair<R::Elem> {
        Pair::new(left, right)
    }

    /// `(r, s)* = (-r, s)`.
    pub fn star(&self, x: &Pair<R::Elem>) -> Pair<R::Elem> {
        Pair::new(self.base.neg(&x.left), x.right.clone())
    }

    /// `(e, f).(r, s) = (e r, f s)`.
    pub fn act(&self, g: SignPair, x: &Pair<R::Elem>) -> Pair<R::Elem> {
        Pair::new(
            self.base.scale_int(&x.left, g.0 as i64),
            self.base.scale_int(&x.right, g.1 as i64),
        )
    }
}

impl<R: Ring> Ring for PairRing<R> {
    type Elem = Pair<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Pair::new(self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        Pair::new(self.base.one(), self.base.one())
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        Pair::new(self.base.from_bigint(n), self.base.from_bigint(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Pair::new(self.base.add(&a.left, &b.left), self.base.add(&a.right, &b.right))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Pair::new(self.base.neg(&a.left), self.base.neg(&a.right))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Pair::new(self.base.mul(&a.left, &b.left), self.base.mul(&a.right, &b.right))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.left) && self.base.is_zero(&a.right)
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        Some(Pair::new(self.base.inverse(&a.left)?, self.base.inverse(&a.right)?))
    }
    fn render(&self, a: &Self::Elem) -> String {
        format!("({}, {})", self.base.render(&a.left), self.base.render(&a.right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PolyRing;

    #[test]
    fn star_and_action() {
        let r = PolyRing::integer(&["x", "y"]);
        let s = PairRing::new(r.clone());
        let p = s.pair(r.var(0), r.var(1));
        assert_eq!(s.star(&p), s.pair(r.neg(&r.var(0)), r.var(1)));
        assert_eq!(s.act(SignPair(-1, 1), &p), s.star(&p));
        assert_eq!(s.star(&s.star(&p)), p);
    }

    #[test]
    fn componentwise_product() {
        let r = PolyRing::integer(&["a", "b", "c", "d"]);
        let s = PairRing::new(r.clone());
        let x = s.pair(r.var(0), r.var(1));
        let y = s.pair(r.var(2), r.var(3));
        let xy = s.mul(&x, &y);
        assert_eq!(xy.left, r.mul(&r.var(0), &r.var(2)));
        assert_eq!(xy.right, r.mul(&r.var(1), &r.var(3)));
    }
}
