//! The ring structure of `S` derived from the blueprint identities,
//! checked on symbolic elements of `R x R`.

use hfold_chevalley::{abcd_args, abcd_ring, resolve_name, Check, ChevalleyModel};
use hfold_rings::{Integers, Pair, PairRing, Poly, PolyRing, Ring};
use num_bigint::BigInt;

use crate::algebra::SAlgebra;
use crate::maps::{CommutationMaps, F, G, H1, H2};

type S = PairRing<PolyRing<Integers>>;
type E = Pair<Poly<BigInt>>;

struct Ctx<'a, M> {
    s: S,
    maps: &'a M,
}

impl<M: CommutationMaps<S>> Ctx<'_, M> {
    fn ring(&self) -> &PolyRing<Integers> {
        self.s.base()
    }
    fn v(&self, name: &str) -> Poly<BigInt> {
        self.ring().var_named(name)
    }
    fn elem(&self, l: &str, r: &str) -> E {
        Pair::new(self.v(l), self.v(r))
    }
    fn psi(&self, p: crate::maps::Psi, x: &E, y: &E) -> E {
        self.maps.psi(&self.s, p, x, y)
    }
    fn one(&self) -> E {
        SAlgebra::one(&self.s)
    }
    fn p1(&self, x: &E) -> E {
        let fx = self.psi(F, x, &self.one());
        SAlgebra::neg(&self.s, &self.psi(H1, &SAlgebra::neg(&self.s, &fx), &self.one()))
    }
    fn p2(&self, x: &E) -> E {
        SAlgebra::neg(&self.s, &self.psi(G, x, &self.one()))
    }
    fn phi(&self, x: &E) -> E {
        self.psi(F, &self.one(), x)
    }
    /// `<a, b> = a + phi(b)` for `a, b` in `S1`.
    fn coord(&self, a: &E, b: &E) -> E {
        SAlgebra::add(&self.s, a, &self.phi(b))
    }
    fn in_s1(&self, x: &E) -> bool {
        SAlgebra::is_zero(&self.s, &self.psi(G, x, &self.one()))
    }
    fn in_s2(&self, x: &E) -> bool {
        SAlgebra::is_zero(&self.s, &self.psi(G, &self.one(), x))
    }
    fn show(&self, x: &E) -> String {
        SAlgebra::render(&self.s, x)
    }
}

fn check(id: &str, anchor: &str, failures: Vec<String>) -> Check {
    let passed = failures.is_empty();
    Check::new(id, anchor, passed, (!passed).then(|| failures.join("; ")))
}

fn expect(failures: &mut Vec<String>, what: &str, ok: bool) {
    if !ok {
        failures.push(what.to_string());
    }
}

/// Verifies commutativity and associativity, the decomposition
/// `S = S1 + S2` with its projections, the isomorphism `phi: S1 -> S2`, the
/// involution formula and the four commutator formulas in coordinates.
/// With a rank four model, also the relation for `(rho0, rho1)`.
pub fn verify_ring_structure<M: CommutationMaps<S>>(maps: &M, e8: Option<&ChevalleyModel>) -> Vec<Check> {
    let names = ["x1", "x2", "y1", "y2", "z1", "z2", "u1", "u2", "v1", "v2"];
    let c = Ctx { s: PairRing::new(PolyRing::integer(&names)), maps };
    let s = &c.s;
    let (x, y, z) = (c.elem("x1", "x2"), c.elem("y1", "y2"), c.elem("z1", "z2"));
    let zero = SAlgebra::zero(s);
    let add = |a: &E, b: &E| SAlgebra::add(s, a, b);
    let mul = |a: &E, b: &E| SAlgebra::mul(s, a, b);
    let neg = |a: &E| SAlgebra::neg(s, a);
    let mut out = Vec::new();

    let mut f = Vec::new();
    expect(&mut f, "xy = yx", mul(&x, &y) == mul(&y, &x));
    out.push(check("ringstructure.commutative", "multiplication on S is commutative", f));

    let mut f = Vec::new();
    expect(&mut f, "(xy)z = x(yz)", mul(&mul(&x, &y), &z) == mul(&x, &mul(&y, &z)));
    out.push(check("ringstructure.associative", "multiplication on S is associative", f));

    let mut f = Vec::new();
    let (p1x, p2x) = (c.p1(&x), c.p2(&x));
    expect(&mut f, "p1(x) + p2(x) = x", add(&p1x, &p2x) == x);
    expect(&mut f, &format!("p1(x) = (x1, 0), got {}", c.show(&p1x)), p1x == Pair::new(c.v("x1"), c.ring().zero()));
    expect(&mut f, &format!("p2(x) = (0, x2), got {}", c.show(&p2x)), p2x == Pair::new(c.ring().zero(), c.v("x2")));
    expect(&mut f, "p1(x) lies in S1", c.in_s1(&p1x));
    expect(&mut f, "p2(x) lies in S2", c.in_s2(&p2x));
    expect(&mut f, "p1 p2 = 0", c.p1(&p2x) == zero);
    expect(&mut f, "p2 p1 = 0", c.p2(&p1x) == zero);
    expect(&mut f, "S1 is an ideal", c.in_s1(&mul(&p1x, &y)));
    expect(&mut f, "S2 is an ideal", c.in_s2(&mul(&p2x, &y)));
    out.push(check("ringstructure.direct-sum", "S is the direct sum of the ideals S1 and S2 with projections p1, p2", f));

    let mut f = Vec::new();
    let (a, b) = (c.p1(&x), c.p1(&y));
    let one1 = c.p1(&c.one());
    let one2 = c.p2(&c.one());
    expect(&mut f, "phi(S1) lies in S2", c.in_s2(&c.phi(&a)));
    expect(&mut f, "phi is additive", c.phi(&add(&a, &b)) == add(&c.phi(&a), &c.phi(&b)));
    expect(&mut f, "phi is multiplicative", c.phi(&mul(&a, &b)) == mul(&c.phi(&a), &c.phi(&b)));
    expect(&mut f, "phi(1_S1) = 1_S2", c.phi(&one1) == one2);
    expect(&mut f, "h1(phi(x), 1) = x on S1", c.psi(H1, &c.phi(&a), &c.one()) == a);
    expect(&mut f, "phi(h1(x, 1)) = x on S2", c.phi(&c.psi(H1, &p2x, &c.one())) == p2x);
    out.push(check("ringstructure.phi-isomorphism", "phi = f(1, .) is an isomorphism S1 -> S2 with inverse h1(., 1)", f));

    let mut f = Vec::new();
    expect(&mut f, "x* = -p1(x) + p2(x)", SAlgebra::star(s, &x) == add(&neg(&p1x), &p2x));
    out.push(check("ringstructure.involution", "the involution is x* = -p1(x) + p2(x)", f));

    let s1 = |n: &str| Pair::new(c.v(n), c.ring().zero());
    let (x1, x2, y1, y2) = (s1("u1"), s1("u2"), s1("v1"), s1("v2"));
    let (xc, yc) = (c.coord(&x1, &x2), c.coord(&y1, &y2));
    let rows: [(&str, crate::maps::Psi, E); 4] = [
        ("i", F, c.coord(&zero, &mul(&x1, &y1))),
        ("ii", G, c.coord(&zero, &neg(&mul(&y1, &x2)))),
        ("iii", H1, c.coord(&mul(&x2, &y1), &mul(&mul(&x1, &x2), &y2))),
        ("iv", H2, c.coord(&neg(&mul(&x2, &y2)), &mul(&mul(&mul(&x1, &x2), &y1), &y2))),
    ];
    for (label, p, expected) in rows {
        let got = c.psi(p, &xc, &yc);
        let mut f = Vec::new();
        expect(&mut f, &format!("{p}(<u1,u2>, <v1,v2>) = {}, expected {}", c.show(&got), c.show(&expected)), got == expected);
        out.push(check(&format!("ringstructure.comm-formula-{label}"), &format!("commutator formula ({label}) in coordinates <x1, x2>"), f));
    }

    if let Some(m) = e8 {
        let h = m.h();
        let ring = abcd_ring();
        let (xa, ya) = abcd_args(&ring);
        let mut f = Vec::new();
        match (resolve_name(h, "rho0"), resolve_name(h, "rho1")) {
            (Some(r0), Some(r1)) => match m.commutation_components(&ring, r0, r1, &xa, &ya) {
                Ok(parts) => {
                    let want = Pair::new(ring.mul(&xa.left, &ya.left), ring.mul(&xa.right, &ya.right));
                    let sum = h.find(&h.coords(r0).iter().zip(h.coords(r1)).map(|(p, q)| p + q).collect::<Vec<_>>());
                    let ok = parts.len() == 1 && Some(parts[0].0) == sum && parts[0].1 == want;
                    expect(&mut f, "[theta_rho0(a,b), theta_rho1(c,d)] = theta_{rho0+rho1}(ac, bd)", ok);
                }
                Err(e) => f.push(e.to_string()),
            },
            _ => f.push("the model has no rho0".into()),
        }
        out.push(check("ringstructure.h4-relation", "commutator relation of (rho0, rho1) in the rank four model", f));
    }
    out
}
