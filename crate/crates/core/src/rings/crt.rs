use num_bigint::BigInt;
use num_integer::Integer;

use super::{RingDescriptor, RingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
}

impl PrimePower {
    pub fn modulus(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::IntegersMod(self.modulus())
    }
}

/// Factorisation of `n` into local factors `Z/p^e`, with the maps
/// between `Z/n` and the product ring.
#[derive(Debug, Clone)]
pub struct CrtSplit {
    n: u64,
    factors: Vec<PrimePower>,
}

/// Full prime factorisation by trial division; `n` is desk-scale.
pub fn crt_split(n: u64) -> CrtSplit {
    assert!(n >= 2, "crt_split requires n >= 2");
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            factors.push(PrimePower { p: d, e });
        }
        d += 1;
    }
    if m > 1 {
        factors.push(PrimePower { p: m, e: 1 });
    }
    CrtSplit { n, factors }
}

impl CrtSplit {
    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn rings(&self) -> Vec<RingDescriptor> {
        self.factors.iter().map(PrimePower::ring).collect()
    }

    pub fn project(&self, x: &RingElement) -> Vec<RingElement> {
        self.factors
            .iter()
            .map(|f| f.ring().from_int(x.numer().clone()))
            .collect()
    }

    pub fn reconstruct(&self, parts: &[RingElement]) -> RingElement {
        assert_eq!(parts.len(), self.factors.len());
        let n = BigInt::from(self.n);
        let mut acc = BigInt::from(0);
        for (f, part) in self.factors.iter().zip(parts) {
            let m = BigInt::from(f.modulus());
            let cofactor = &n / &m;
            // cofactor * (cofactor^-1 mod m) is 1 mod m and 0 mod the rest.
            let inv = cofactor.extended_gcd(&m).x.mod_floor(&m);
            acc += part.numer() * &cofactor * inv;
        }
        RingDescriptor::IntegersMod(self.n).from_int(acc)
    }
}
