//! The evaluated blueprint identities (1)-(35).

use hfold_rings::{Integers, Pair, PairRing, Poly, PolyRing};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::SAlgebra;
use crate::maps::{CommutationMaps, Psi, Q, F, G, H1, H2};
use crate::run::{poly_initial, IdentityRecord};

/// Metadata of one evaluated identity.
#[derive(Clone, Copy, Debug)]
pub struct IdentitySpec {
    pub number: usize,
    /// The blueprint identity it is evaluated from.
    pub blueprint: usize,
    /// The variables left nonzero, with fixed values.
    pub nonzero: &'static str,
    pub statement: &'static str,
}

const fn spec(number: usize, blueprint: usize, nonzero: &'static str, statement: &'static str) -> IdentitySpec {
    IdentitySpec { number, blueprint, nonzero, statement }
}

const SPECS: [IdentitySpec; 35] = [
    spec(1, 12, "y4", "(-y4)* = -y4*"),
    spec(2, 5, "y2, y15", "y15 y2* = (y15 y2)*"),
    spec(3, 9, "y5, y8", "psi[epsilon,gamma](y5,y8) = -psi[alpha,gamma](y5,y8)"),
    spec(4, 9, "y4, y5, y12=1", "psi[alpha,gamma](y4,y5) = psi[alpha,gamma](y5,y4)"),
    spec(5, 14, "y1, y3", "psi[alpha,gamma](y1,y3)* = psi[alpha,gamma](y1,y3)"),
    spec(6, 5, "y1, y12", "psi[alpha,gamma](y1,y12*) = -psi[alpha,gamma](y1,y12)"),
    spec(7, 7, "y4=1, y10, y12", "psi[beta,delta](y10,y12) = psi[epsilon,gamma](y10,y12)"),
    spec(8, 7, "y4, y10, y12", "psi[alpha,gamma](y4 y10,y12) = psi[alpha,gamma](y4 y12,y10)"),
    spec(9, 13, "y1, y4", "psi[epsilon,beta;gamma](y1,y4) = -psi[alpha,delta;gamma](y1,y4*)"),
    spec(10, 3, "y7, y15", "psi[beta,epsilon;delta](y7,y15) = -psi[delta,alpha;beta](y7,y15)"),
    spec(11, 3, "y10, y14", "psi[beta,epsilon;delta](y10*,y14) = psi[beta,epsilon;delta](y10,-y14)"),
    spec(12, 12, "y2, y5", "psi[beta,epsilon;delta](y2,y5)* = -psi[beta,epsilon;delta](y2,-y5)"),
    spec(13, 7, "y7, y10", "psi[beta,epsilon;delta](y7,y10*) = psi[beta,epsilon;delta](y7,y10)"),
    spec(14, 11, "y1, y3, y8", "psi[alpha,gamma](psi[alpha,gamma](y1,y3),y8) = 0"),
    spec(15, 11, "y1, y4, y9", "psi[alpha,gamma](psi[alpha,delta;gamma](y1,y4),y9) = 0"),
    spec(16, 6, "y3, y5, y13", "psi[alpha,delta;gamma](psi[alpha,gamma](y3,y5),y13) = 0"),
    spec(17, 7, "y1, y4, y12", "psi[alpha,delta;gamma](psi[alpha,delta;gamma](y1,y4),y12) = 0"),
    spec(18, 8, "y4, y6, y15", "psi[alpha,gamma](y6,psi[alpha,epsilon;gamma](y15,y4)) = y4 psi[beta,epsilon;delta](y6,y15)"),
    spec(19, 6, "y7, y10, y14", "psi[alpha,gamma](psi[beta,epsilon;delta](y10,y14),y7) = 0"),
    spec(20, 9, "y2, y5, y14=1", "psi[beta,epsilon;delta](y5,y2) = -psi[epsilon,beta;gamma](y5,-y2)"),
    spec(21, 3, "y1, y14", "psi[epsilon,alpha;beta](y1,y14) = psi[alpha,epsilon;delta](y1,-y14)"),
    spec(22, 3, "y4, y15", "h1(-y15,y4) = h1(y15,y4*)"),
    spec(23, 12, "y1, y5", "h1(-y5,y1) = h1(y5,y1)*"),
    spec(24, 11, "y1, y5, y8", "f(h1(y1,y5),y8) = f(y5,y8) y1"),
    spec(25, 4, "y4, y10, y15", "f(y4,y10) y15 = -g(y15,y4 y10)"),
    spec(26, 5, "y1, y4, y15", "g(y1,h1(y15,y4)) = g(y1,y4) y15"),
    spec(27, 3, "y5, y10, y15", "g(y5 y15,y10) = g(y15,y10) y5"),
    spec(28, 13, "y1, y5", "h2(y1,y5) = h2(y5,y1)"),
    spec(29, 7, "y1, y5, y12", "y1 (y5 y12) = -h1(-f(y1,y12),y5) + g(y12,h2(y1,y5))"),
    spec(30, 3, "y3, y5, y15", "f(h1(y15,y3),y15 y5) = h1(y15,f(y3,y5))"),
    spec(31, 3, "y1, y5, y15", "h1(y15,h1(y5,y1)) = h1(y15 y5,y1)"),
    spec(32, 4, "y1, y7, y15", "g(g(y15,y7),y1) = -g(y15,y1 y7)"),
    spec(33, 6, "y5, y10, y15", "g(h1(y5,y10),y15) = 0 for y5 in S2"),
    spec(34, 11, "y1, y5, y12=1", "g(h2(y1,y5),1) = g((f(y1,y5) y5) y1,1)"),
    spec(35, 6, "y1, y4, y14", "g(h1(y14,y1),y4) = h1(-y14,g(y1,y4))"),
];

pub fn identity_specs() -> &'static [IdentitySpec] {
    &SPECS
}

/// Both sides of identity `n` for the values `y[1..=15]`.
fn sides<A: SAlgebra, M: CommutationMaps<A>>(n: usize, alg: &A, maps: &M, y: &[A::E]) -> (A::E, A::E) {
    use Q::*;
    let p = |z, x, r, u: &A::E, v: &A::E| maps.psi(alg, Psi::new(z, x, r), u, v);
    let m = |q: Psi, u: &A::E, v: &A::E| maps.psi(alg, q, u, v);
    let neg = |u: &A::E| alg.neg(u);
    let st = |u: &A::E| alg.star(u);
    let mul = |u: &A::E, v: &A::E| alg.mul(u, v);
    let one = alg.one();
    let zero = alg.zero();
    match n {
        1 => (st(&neg(&y[4])), neg(&st(&y[4]))),
        2 => (mul(&y[15], &st(&y[2])), st(&mul(&y[15], &y[2]))),
        3 => (p(Epsilon, Gamma, None, &y[5], &y[8]), neg(&m(F, &y[5], &y[8]))),
        4 => (m(F, &y[4], &y[5]), m(F, &y[5], &y[4])),
        5 => (st(&m(F, &y[1], &y[3])), m(F, &y[1], &y[3])),
        6 => (m(F, &y[1], &st(&y[12])), neg(&m(F, &y[1], &y[12]))),
        7 => (p(Beta, Delta, None, &y[10], &y[12]), p(Epsilon, Gamma, None, &y[10], &y[12])),
        8 => (m(F, &mul(&y[4], &y[10]), &y[12]), m(F, &mul(&y[4], &y[12]), &y[10])),
        9 => (p(Epsilon, Beta, Some(Gamma), &y[1], &y[4]), neg(&p(Alpha, Delta, Some(Gamma), &y[1], &st(&y[4])))),
        10 => (p(Beta, Epsilon, Some(Delta), &y[7], &y[15]), neg(&p(Delta, Alpha, Some(Beta), &y[7], &y[15]))),
        11 => (p(Beta, Epsilon, Some(Delta), &st(&y[10]), &y[14]), p(Beta, Epsilon, Some(Delta), &y[10], &neg(&y[14]))),
        12 => (st(&p(Beta, Epsilon, Some(Delta), &y[2], &y[5])), neg(&p(Beta, Epsilon, Some(Delta), &y[2], &neg(&y[5])))),
        13 => (p(Beta, Epsilon, Some(Delta), &y[7], &st(&y[10])), p(Beta, Epsilon, Some(Delta), &y[7], &y[10])),
        14 => (m(F, &m(F, &y[1], &y[3]), &y[8]), zero),
        15 => (m(F, &p(Alpha, Delta, Some(Gamma), &y[1], &y[4]), &y[9]), zero),
        16 => (p(Alpha, Delta, Some(Gamma), &m(F, &y[3], &y[5]), &y[13]), zero),
        17 => {
            let inner = p(Alpha, Delta, Some(Gamma), &y[1], &y[4]);
            (p(Alpha, Delta, Some(Gamma), &inner, &y[12]), zero)
        }
        18 => (m(F, &y[6], &m(H2, &y[15], &y[4])), mul(&y[4], &p(Beta, Epsilon, Some(Delta), &y[6], &y[15]))),
        19 => (m(F, &p(Beta, Epsilon, Some(Delta), &y[10], &y[14]), &y[7]), zero),
        20 => (p(Beta, Epsilon, Some(Delta), &y[5], &y[2]), neg(&p(Epsilon, Beta, Some(Gamma), &y[5], &neg(&y[2])))),
        21 => (p(Epsilon, Alpha, Some(Beta), &y[1], &y[14]), p(Alpha, Epsilon, Some(Delta), &y[1], &neg(&y[14]))),
        22 => (m(H1, &neg(&y[15]), &y[4]), m(H1, &y[15], &st(&y[4]))),
        23 => (m(H1, &neg(&y[5]), &y[1]), st(&m(H1, &y[5], &y[1]))),
        24 => (m(F, &m(H1, &y[1], &y[5]), &y[8]), mul(&m(F, &y[5], &y[8]), &y[1])),
        25 => (mul(&m(F, &y[4], &y[10]), &y[15]), neg(&m(G, &y[15], &mul(&y[4], &y[10])))),
        26 => (m(G, &y[1], &m(H1, &y[15], &y[4])), mul(&m(G, &y[1], &y[4]), &y[15])),
        27 => (m(G, &mul(&y[5], &y[15]), &y[10]), mul(&m(G, &y[15], &y[10]), &y[5])),
        28 => (m(H2, &y[1], &y[5]), m(H2, &y[5], &y[1])),
        29 => {
            let lhs = mul(&y[1], &mul(&y[5], &y[12]));
            let rhs = alg.add(&neg(&m(H1, &neg(&m(F, &y[1], &y[12])), &y[5])), &m(G, &y[12], &m(H2, &y[1], &y[5])));
            (lhs, rhs)
        }
        30 => (m(F, &m(H1, &y[15], &y[3]), &mul(&y[15], &y[5])), m(H1, &y[15], &m(F, &y[3], &y[5]))),
        31 => (m(H1, &y[15], &m(H1, &y[5], &y[1])), m(H1, &mul(&y[15], &y[5]), &y[1])),
        32 => (m(G, &m(G, &y[15], &y[7]), &y[1]), neg(&m(G, &y[15], &mul(&y[1], &y[7])))),
        33 => {
            let s2 = neg(&m(G, &y[5], &one));
            (m(G, &m(H1, &s2, &y[10]), &y[15]), zero)
        }
        34 => {
            let rhs_arg = mul(&mul(&m(F, &y[1], &y[5]), &y[5]), &y[1]);
            (m(G, &m(H2, &y[1], &y[5]), &one), m(G, &rhs_arg, &one))
        }
        35 => (m(G, &m(H1, &y[14], &y[1]), &y[4]), m(H1, &neg(&y[14]), &m(G, &y[1], &y[4]))),
        _ => panic!("identities are numbered 1 to 35"),
    }
}

/// Evaluates identity `n` in an arbitrary algebra.
pub fn identity_sides<A: SAlgebra, M: CommutationMaps<A>>(n: usize, alg: &A, maps: &M, y: &[A::E]) -> (A::E, A::E) {
    sides(n, alg, maps, y)
}

type S = PairRing<PolyRing<Integers>>;

/// Checks (1)-(35) as polynomial identities in `y_i = (a_i, b_i)`.
pub fn check_identities_1_35<M: CommutationMaps<S> + Sync>(maps: &M) -> (S, Vec<IdentityRecord<Pair<Poly<BigInt>>>>) {
    let (s, init) = poly_initial(15);
    let mut y = vec![SAlgebra::zero(&s)];
    y.extend(init);
    let records = SPECS
        .par_iter()
        .map(|spec| {
            let (left, right) = sides(spec.number, &s, maps, &y);
            let verified = SAlgebra::is_zero(&s, &SAlgebra::sub(&s, &left, &right));
            IdentityRecord { label: format!("({})", spec.number), left, right, verified }
        })
        .collect();
    (s, records)
}
