use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::{Integers, Ring};

/// Maximum number of variables in a polynomial ring.
pub const MAX_VARS: usize = 32;

/// An exponent vector. Ordered graded-lexicographically: total degree first,
/// then exponents compared variable by variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { deg: 0, exps: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_add(o.exps[i]).expect("exponent overflow");
        }
        Monomial { deg: self.deg + o.deg, exps }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<_> = self.exps.iter().enumerate().filter(|(_, e)| **e > 0).collect();
        write!(f, "x{nz:?}")
    }
}

/// A sparse polynomial: monomials with nonzero coefficients only.
pub type Poly<E> = BTreeMap<Monomial, E>;

/// Polynomials over a coefficient ring in a fixed list of named variables.
#[derive(Clone, Debug)]
pub struct PolyRing<C: Ring> {
    names: Arc<Vec<String>>,
    coeff: C,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UnknownVariable {
    #[error("unknown variable `{0}`")]
    Unknown(String),
    #[error("no value assigned to variable `{0}`")]
    Missing(String),
}

impl PolyRing<Integers> {
    /// Integer polynomials in the given variables.
    pub fn integer<S: AsRef<str>>(names: &[S]) -> Self {
        PolyRing::new(Integers, names)
    }

    /// The evaluation homomorphism defined by a named assignment, applied to
    /// `p`. Every variable must receive a value; unknown names are rejected.
    pub fn eval_named<T: Ring>(
        &self,
        p: &Poly<BigInt>,
        target: &T,
        assignment: &[(&str, T::Elem)],
    ) -> Result<T::Elem, UnknownVariable> {
        let mut values: Vec<Option<T::Elem>> = vec![None; self.names.len()];
        for (name, v) in assignment {
            let i = self.index_of(name).ok_or_else(|| UnknownVariable::Unknown(name.to_string()))?;
            values[i] = Some(v.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| UnknownVariable::Missing(self.names[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.eval(p, target, &values, |c| target.from_bigint(c)))
    }
}

impl<C: Ring> PolyRing<C> {
    pub fn new<S: AsRef<str>>(coeff: C, names: &[S]) -> Self {
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!names[..i].contains(n), "duplicate variable name `{n}`");
        }
        PolyRing { names: Arc::new(names), coeff }
    }

    pub fn coeff_ring(&self) -> &C {
        &self.coeff
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, i: usize) -> Poly<C::Elem> {
        assert!(i < self.names.len());
        let mut p = Poly::new();
        p.insert(Monomial::var(i), self.coeff.one());
        p
    }

    pub fn var_named(&self, name: &str) -> Poly<C::Elem> {
        self.var(self.index_of(name).unwrap_or_else(|| panic!("unknown variable `{name}`")))
    }

    pub fn constant(&self, c: C::Elem) -> Poly<C::Elem> {
        let mut p = Poly::new();
        if !self.coeff.is_zero(&c) {
            p.insert(Monomial::one(), c);
        }
        p
    }

    /// Leading term in graded-lex order, if any.
    pub fn leading_term<'a>(&self, p: &'a Poly<C::Elem>) -> Option<(&'a Monomial, &'a C::Elem)> {
        p.iter().next_back()
    }

    pub fn degree(&self, p: &Poly<C::Elem>) -> Option<u32> {
        p.keys().next_back().map(|m| m.degree())
    }

    /// Evaluates `p` at `values` in `target`, mapping coefficients with `lift`.
    pub fn eval<T: Ring>(
        &self,
        p: &Poly<C::Elem>,
        target: &T,
        values: &[T::Elem],
        lift: impl Fn(&C::Elem) -> T::Elem,
    ) -> T::Elem {
        assert_eq!(values.len(), self.names.len(), "one value per variable");
        let mut acc = target.zero();
        for (m, c) in p {
            let mut t = lift(c);
            for (i, v) in values.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = target.mul(&t, &target.pow(v, e));
                }
            }
            target.add_assign(&mut acc, &t);
        }
        acc
    }

    fn add_term(&self, p: &mut Poly<C::Elem>, m: Monomial, c: C::Elem) {
        use std::collections::btree_map::Entry;
        match p.entry(m) {
            Entry::Vacant(v) => {
                if !self.coeff.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = self.coeff.add(o.get(), &c);
                if self.coeff.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            match m.exponent(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl<C: Ring> Ring for PolyRing<C> {
    type Elem = Poly<C::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::new()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.coeff.one())
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.coeff.from_bigint(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut r = a.clone();
        self.add_assign(&mut r, b);
        r
    }
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        for (m, c) in b {
            self.add_term(a, *m, c.clone());
        }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|(m, c)| (*m, self.coeff.neg(c))).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut r = Poly::new();
        if a.is_empty() || b.is_empty() {
            return r;
        }
        for (ma, ca) in a {
            for (mb, cb) in b {
                self.add_term(&mut r, ma.mul(mb), self.coeff.mul(ca, cb));
            }
        }
        r
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // Only constants can be units when the coefficient ring is a domain;
        // nilpotent-coefficient units are not considered.
        if a.len() != 1 {
            return None;
        }
        let (m, c) = a.iter().next()?;
        if m.degree() != 0 {
            return None;
        }
        self.coeff.inverse(c).map(|i| self.constant(i))
    }
    fn render(&self, a: &Self::Elem) -> String {
        if a.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in a.iter().rev().enumerate() {
            let cs = self.coeff.render(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_monomial(m);
            if mono.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ZMod;

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::integer(&["x", "y"]);
        let x = r.var(0);
        let y = r.var(1);
        let p = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        let expected = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(p, expected);
        assert_eq!(r.render(&p), "x^2 - y^2");
        let v = r.eval_named(&p, &Integers, &[("x", 2.into()), ("y", 3.into())]).unwrap();
        assert_eq!(v, BigInt::from(-5));
    }

    #[test]
    fn eval_mod_five() {
        let r = PolyRing::integer(&["x"]);
        let p = r.add(&r.scale_int(&r.var(0), 5), &r.one());
        let z5 = ZMod::new(5);
        assert_eq!(r.eval_named(&p, &z5, &[("x", 3)]).unwrap(), 1);
    }

    #[test]
    fn eval_rejects_unknown_and_missing() {
        let r = PolyRing::integer(&["x", "y"]);
        let p = r.var(0);
        assert_eq!(
            r.eval_named(&p, &Integers, &[("z", 1.into())]),
            Err(UnknownVariable::Unknown("z".into()))
        );
        assert_eq!(
            r.eval_named(&p, &Integers, &[("x", 1.into())]),
            Err(UnknownVariable::Missing("y".into()))
        );
    }

    #[test]
    fn units_are_constant_units() {
        let r = PolyRing::integer(&["x"]);
        assert!(r.inverse(&r.from_int(-1)).is_some());
        assert!(r.inverse(&r.from_int(2)).is_none());
        assert!(r.inverse(&r.var(0)).is_none());
    }

    #[test]
    fn grlex_rendering_is_deterministic() {
        let r = PolyRing::integer(&["a", "b"]);
        let a = r.var(0);
        let b = r.var(1);
        let p = r.add(&r.add(&b, &r.mul(&a, &b)), &r.add(&a, &r.from_int(-2)));
        assert_eq!(r.render(&p), "a*b + a + b - 2");
    }
}
