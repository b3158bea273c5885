//! Pluggable commutative rings.
//!
//! A [`Ring`] value is a stateless (or nearly stateless) context object that
//! performs arithmetic on plain element values. This keeps elements cheap to
//! clone and lets polynomial rings carry their variable names in the context.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;

mod integers;
mod pair;
mod poly;
mod zmod;

pub use integers::Integers;
pub use pair::{Pair, PairRing, SignPair};
pub use poly::{Monomial, Poly, PolyRing, UnknownVariable, MAX_VARS};
pub use zmod::ZMod;

/// A commutative ring with identity.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse where invertibility is decidable; `None` for
    /// non-units and for elements whose unit status the ring cannot decide.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// `a * n` for a machine integer `n`.
    fn scale_int(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        match n {
            1 => a.clone(),
            -1 => self.neg(a),
            0 => self.zero(),
            _ => self.mul(a, &self.from_int(n)),
        }
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for x in items {
            self.add_assign(&mut acc, x);
        }
        acc
    }
}
