use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::Ring;

/// The ring `Z/nZ` for `n >= 2`, elements kept in `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZMod {
    n: u64,
}

impl ZMod {
    pub fn new(n: u64) -> Self {
        assert!(n >= 2, "modulus must be at least 2");
        assert!(n < (1 << 31), "modulus too large for u64 products");
        ZMod { n }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// All residues `0..n`.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.n
    }

    /// All units, in increasing order.
    pub fn units(&self) -> Vec<u64> {
        (1..self.n).filter(|x| x.gcd(&self.n) == 1).collect()
    }
}

impl Ring for ZMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.n)).to_u64().expect("residue fits")
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.n as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.n
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        let e = (*a as i64).extended_gcd(&(self.n as i64));
        (e.gcd == 1).then(|| e.x.rem_euclid(self.n as i64) as u64)
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}
