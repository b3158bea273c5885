//! The coordinate algebra `S` in which blueprint rules compute: a
//! commutative ring with an additive involution `*`.

use std::collections::HashMap;
use std::fmt::Debug;
use std::rc::Rc;

use hfold_rings::{PairRing, Ring};

use crate::maps::{CommutationMaps, Psi};

pub trait SAlgebra {
    type E: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn star(&self, a: &Self::E) -> Self::E;
    fn render(&self, a: &Self::E) -> String;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::E) -> bool {
        *a == self.zero()
    }
}

/// `R x R` with `(r, s)* = (-r, s)`.
impl<R: Ring> SAlgebra for PairRing<R> {
    type E = <PairRing<R> as Ring>::Elem;

    fn zero(&self) -> Self::E {
        Ring::zero(self)
    }
    fn one(&self) -> Self::E {
        Ring::one(self)
    }
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E {
        Ring::add(self, a, b)
    }
    fn neg(&self, a: &Self::E) -> Self::E {
        Ring::neg(self, a)
    }
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E {
        Ring::mul(self, a, b)
    }
    fn star(&self, a: &Self::E) -> Self::E {
        PairRing::star(self, a)
    }
    fn render(&self, a: &Self::E) -> String {
        Ring::render(self, a)
    }
    fn is_zero(&self, a: &Self::E) -> bool {
        Ring::is_zero(self, a)
    }
}

/// A node of a syntax tree over `S` with uninterpreted commutation maps.
#[derive(Debug, PartialEq)]
pub enum Node {
    Zero,
    One,
    /// The indeterminate `y_i`.
    Var(usize),
    Add(Term, Term),
    Neg(Term),
    Mul(Term, Term),
    Star(Term),
    Psi(Psi, Term, Term),
}

pub type Term = Rc<Node>;

/// Free term algebra with the simplifications `0 + x = x`, `-(-x) = x`,
/// `-0 = 0`, `0 x = 0`, `1 x = x`, `0* = 0`, `x** = x` and
/// `psi(0, x) = psi(x, 0) = 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct TermAlgebra;

impl TermAlgebra {
    pub fn var(&self, i: usize) -> Term {
        Rc::new(Node::Var(i))
    }

    pub fn psi(&self, p: Psi, x: &Term, y: &Term) -> Term {
        if *x.as_ref() == Node::Zero || *y.as_ref() == Node::Zero {
            return self.zero();
        }
        Rc::new(Node::Psi(p, x.clone(), y.clone()))
    }
}

impl SAlgebra for TermAlgebra {
    type E = Term;

    fn zero(&self) -> Term {
        Rc::new(Node::Zero)
    }
    fn one(&self) -> Term {
        Rc::new(Node::One)
    }
    fn add(&self, a: &Term, b: &Term) -> Term {
        match (a.as_ref(), b.as_ref()) {
            (Node::Zero, _) => b.clone(),
            (_, Node::Zero) => a.clone(),
            _ => Rc::new(Node::Add(a.clone(), b.clone())),
        }
    }
    fn neg(&self, a: &Term) -> Term {
        match a.as_ref() {
            Node::Zero => a.clone(),
            Node::Neg(x) => x.clone(),
            _ => Rc::new(Node::Neg(a.clone())),
        }
    }
    fn mul(&self, a: &Term, b: &Term) -> Term {
        match (a.as_ref(), b.as_ref()) {
            (Node::Zero, _) | (_, Node::Zero) => self.zero(),
            (Node::One, _) => b.clone(),
            (_, Node::One) => a.clone(),
            _ => Rc::new(Node::Mul(a.clone(), b.clone())),
        }
    }
    fn star(&self, a: &Term) -> Term {
        match a.as_ref() {
            Node::Zero => a.clone(),
            Node::Star(x) => x.clone(),
            _ => Rc::new(Node::Star(a.clone())),
        }
    }
    fn render(&self, a: &Term) -> String {
        let mut out = String::new();
        render_into(a, &mut out);
        out
    }
    fn is_zero(&self, a: &Term) -> bool {
        *a.as_ref() == Node::Zero
    }
}

fn render_into(t: &Term, out: &mut String) {
    match t.as_ref() {
        Node::Zero => out.push('0'),
        Node::One => out.push('1'),
        Node::Var(i) => out.push_str(&format!("y{i}")),
        Node::Add(a, b) => {
            out.push('(');
            render_into(a, out);
            if let Node::Neg(x) = b.as_ref() {
                out.push_str(" - ");
                render_into(x, out);
            } else {
                out.push_str(" + ");
                render_into(b, out);
            }
            out.push(')');
        }
        Node::Neg(a) => {
            out.push('-');
            render_into(a, out);
        }
        Node::Mul(a, b) => {
            render_into(a, out);
            out.push('*');
            render_into(b, out);
        }
        Node::Star(a) => {
            out.push_str("star(");
            render_into(a, out);
            out.push(')');
        }
        Node::Psi(p, a, b) => {
            out.push_str(&p.name());
            out.push('(');
            render_into(a, out);
            out.push_str(", ");
            render_into(b, out);
            out.push(')');
        }
    }
}

/// Number of distinct nodes of a term, counting shared subterms once.
pub fn dag_size(t: &Term) -> usize {
    fn walk(t: &Term, seen: &mut HashMap<*const Node, ()>) {
        if seen.insert(Rc::as_ptr(t), ()).is_some() {
            return;
        }
        match t.as_ref() {
            Node::Zero | Node::One | Node::Var(_) => {}
            Node::Neg(a) | Node::Star(a) => walk(a, seen),
            Node::Add(a, b) | Node::Mul(a, b) | Node::Psi(_, a, b) => {
                walk(a, seen);
                walk(b, seen);
            }
        }
    }
    let mut seen = HashMap::new();
    walk(t, &mut seen);
    seen.len()
}

/// Evaluates a term in a concrete algebra, `y_i` taking `values[i]`.
/// Shared subterms are evaluated once.
pub fn eval_term<A: SAlgebra, M: CommutationMaps<A>>(t: &Term, alg: &A, maps: &M, values: &[A::E]) -> A::E {
    fn go<A: SAlgebra, M: CommutationMaps<A>>(
        t: &Term,
        alg: &A,
        maps: &M,
        values: &[A::E],
        memo: &mut HashMap<*const Node, A::E>,
    ) -> A::E {
        if let Some(v) = memo.get(&Rc::as_ptr(t)) {
            return v.clone();
        }
        let v = match t.as_ref() {
            Node::Zero => alg.zero(),
            Node::One => alg.one(),
            Node::Var(i) => values[*i].clone(),
            Node::Add(a, b) => {
                let (x, y) = (go(a, alg, maps, values, memo), go(b, alg, maps, values, memo));
                alg.add(&x, &y)
            }
            Node::Neg(a) => {
                let x = go(a, alg, maps, values, memo);
                alg.neg(&x)
            }
            Node::Mul(a, b) => {
                let (x, y) = (go(a, alg, maps, values, memo), go(b, alg, maps, values, memo));
                alg.mul(&x, &y)
            }
            Node::Star(a) => {
                let x = go(a, alg, maps, values, memo);
                alg.star(&x)
            }
            Node::Psi(p, a, b) => {
                let (x, y) = (go(a, alg, maps, values, memo), go(b, alg, maps, values, memo));
                maps.psi(alg, *p, &x, &y)
            }
        };
        memo.insert(Rc::as_ptr(t), v.clone());
        v
    }
    go(t, alg, maps, values, &mut HashMap::new())
}
