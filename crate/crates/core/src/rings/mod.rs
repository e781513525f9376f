//! Exact arithmetic over the supported commutative base rings.
//!
//! Every element is stored as a reduced [`BigRational`]: integers carry
//! denominator 1, residues modulo `n` live in `[0, n)`, and p-local
//! elements keep a denominator coprime to `p`. Equality is therefore
//! structural once an element has been built through its descriptor.

mod crt;
mod quadratic;

pub use crt::{crt_split, CrtSplit, PrimePower};
pub use quadratic::{quadratic_roots_in_ring, rational_square_root, unit_square_root};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which concrete commutative ring the scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", try_from = "RawDescriptor", into = "RawDescriptor")]
pub enum RingDescriptor {
    Rationals,
    Integers,
    /// `Z/nZ` with `n >= 2`.
    IntegersMod(u64),
    /// The localisation `Z_(p)`: fractions whose denominator is prime to `p`.
    PLocal(u64),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum RawDescriptor {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Zn")]
    Zn { n: u64 },
    #[serde(rename = "Zp_local")]
    ZpLocal { p: u64 },
}

impl TryFrom<RawDescriptor> for RingDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        match raw {
            RawDescriptor::Q => Ok(RingDescriptor::Rationals),
            RawDescriptor::Z => Ok(RingDescriptor::Integers),
            RawDescriptor::Zn { n } => RingDescriptor::integers_mod(n),
            RawDescriptor::ZpLocal { p } => RingDescriptor::p_local(p),
        }
    }
}

impl From<RingDescriptor> for RawDescriptor {
    fn from(ring: RingDescriptor) -> Self {
        match ring {
            RingDescriptor::Rationals => RawDescriptor::Q,
            RingDescriptor::Integers => RawDescriptor::Z,
            RingDescriptor::IntegersMod(n) => RawDescriptor::Zn { n },
            RingDescriptor::PLocal(p) => RawDescriptor::ZpLocal { p },
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::IntegersMod(n) => write!(f, "Z/{n}"),
            RingDescriptor::PLocal(p) => write!(f, "Z_({p})"),
        }
    }
}

/// Short textual form accepted on the command line: `Q`, `Z`, `Zn:26`,
/// `Zp_local:2`.
impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_param = |rest: &str| {
            rest.parse::<u64>()
                .map_err(|_| Error::InvalidDescriptor(format!("bad parameter in `{s}`")))
        };
        match s {
            "Q" => Ok(RingDescriptor::Rationals),
            "Z" => Ok(RingDescriptor::Integers),
            _ => {
                if let Some(rest) = s.strip_prefix("Zn:") {
                    RingDescriptor::integers_mod(parse_param(rest)?)
                } else if let Some(rest) = s.strip_prefix("Zp_local:") {
                    RingDescriptor::p_local(parse_param(rest)?)
                } else {
                    Err(Error::InvalidDescriptor(format!("unknown ring `{s}`")))
                }
            }
        }
    }
}

/// An exact scalar, interpreted under exactly one [`RingDescriptor`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement(BigRational);

impl RingElement {
    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Product of the distinct primes dividing `n`.
pub(crate) fn radical(n: u64) -> u64 {
    crt_split(n).factors().iter().map(|f| f.p).product()
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

impl RingDescriptor {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDescriptor(format!(
                "Z/n requires n >= 2, got {n}"
            )));
        }
        Ok(RingDescriptor::IntegersMod(n))
    }

    pub fn p_local(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!(
                "Z_(p) requires a prime p, got {p}"
            )));
        }
        Ok(RingDescriptor::PLocal(p))
    }

    /// `Q` and `Z/p` for prime `p`.
    pub fn is_field(&self) -> bool {
        match *self {
            RingDescriptor::Rationals => true,
            RingDescriptor::IntegersMod(n) => is_prime(n),
            _ => false,
        }
    }

    /// Local in the sense of a unique maximal ideal. `Q` counts (J = 0).
    pub fn is_local(&self) -> bool {
        match *self {
            RingDescriptor::Rationals | RingDescriptor::PLocal(_) => true,
            RingDescriptor::Integers => false,
            RingDescriptor::IntegersMod(n) => crt_split(n).factors().len() == 1,
        }
    }

    /// Whether nilpotent matrices of size `k` always satisfy `A^k = 0`.
    pub fn is_reduced(&self) -> bool {
        match *self {
            RingDescriptor::IntegersMod(n) => radical(n) == n,
            _ => true,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            RingDescriptor::IntegersMod(n) => Some(n),
            _ => None,
        }
    }

    fn canon(&self, q: BigRational) -> RingElement {
        match *self {
            RingDescriptor::IntegersMod(n) => {
                debug_assert!(q.is_integer());
                RingElement(BigRational::from_integer(q.numer().mod_floor(&big(n))))
            }
            RingDescriptor::PLocal(p) => {
                debug_assert!(!q.denom().is_multiple_of(&big(p)));
                RingElement(q)
            }
            RingDescriptor::Integers => {
                debug_assert!(q.is_integer());
                RingElement(q)
            }
            RingDescriptor::Rationals => RingElement(q),
        }
    }

    /// Validating constructor.
    pub fn element(&self, value: BigRational) -> Result<RingElement> {
        match *self {
            RingDescriptor::Rationals => Ok(RingElement(value)),
            RingDescriptor::Integers | RingDescriptor::IntegersMod(_) => {
                if !value.is_integer() {
                    return Err(Error::InvalidElement(format!(
                        "{value} is not an element of {self}"
                    )));
                }
                Ok(self.canon(value))
            }
            RingDescriptor::PLocal(p) => {
                if value.denom().is_multiple_of(&big(p)) {
                    return Err(Error::InvalidElement(format!(
                        "{value} has denominator divisible by {p}"
                    )));
                }
                Ok(RingElement(value))
            }
        }
    }

    pub fn from_int(&self, v: impl Into<BigInt>) -> RingElement {
        self.canon(BigRational::from_integer(v.into()))
    }

    pub fn from_i64(&self, v: i64) -> RingElement {
        self.from_int(v)
    }

    /// Parses `"7"`, `"-3"` or `"5/3"`.
    pub fn parse(&self, s: &str) -> Result<RingElement> {
        let bad = || Error::InvalidElement(format!("cannot parse `{s}` as an element of {self}"));
        let s = s.trim();
        let value = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?),
        };
        self.element(value)
    }

    /// True if `x` is in canonical form for this ring.
    pub fn contains(&self, x: &RingElement) -> bool {
        match *self {
            RingDescriptor::Rationals => true,
            RingDescriptor::Integers => x.is_integer(),
            RingDescriptor::IntegersMod(n) => {
                x.is_integer() && !x.numer().is_negative() && x.numer() < &big(n)
            }
            RingDescriptor::PLocal(p) => !x.denom().is_multiple_of(&big(p)),
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement(BigRational::zero())
    }

    pub fn one(&self) -> RingElement {
        RingElement(BigRational::one())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.canon(&x.0 + &y.0)
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.canon(&x.0 - &y.0)
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.canon(&x.0 * &y.0)
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        self.canon(-&x.0)
    }

    pub fn pow(&self, x: &RingElement, mut e: u32) -> RingElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, x: &RingElement) -> bool {
        match *self {
            RingDescriptor::Rationals => !x.is_zero(),
            RingDescriptor::Integers => x.numer().abs().is_one(),
            RingDescriptor::IntegersMod(n) => x.numer().gcd(&big(n)).is_one(),
            RingDescriptor::PLocal(p) => {
                !x.is_zero() && !x.numer().is_multiple_of(&big(p))
            }
        }
    }

    /// Returns `y` with `x * y = 1`, or `None` when `x` is not a unit.
    pub fn try_invert(&self, x: &RingElement) -> Option<RingElement> {
        if !self.is_unit(x) {
            return None;
        }
        match *self {
            RingDescriptor::IntegersMod(n) => {
                let n = big(n);
                let e = x.numer().extended_gcd(&n);
                Some(self.canon(BigRational::from_integer(e.x)))
            }
            _ => Some(self.canon(x.0.recip())),
        }
    }

    /// Exact membership in the Jacobson radical.
    pub fn in_jacobson_radical(&self, x: &RingElement) -> bool {
        match *self {
            RingDescriptor::Rationals | RingDescriptor::Integers => x.is_zero(),
            RingDescriptor::IntegersMod(n) => x.numer().is_multiple_of(&big(radical(n))),
            RingDescriptor::PLocal(p) => x.numer().is_multiple_of(&big(p)),
        }
    }

    /// `x - c` lies in `J`, i.e. `x` is in the coset `c + J`.
    pub fn in_coset_of_radical(&self, x: &RingElement, c: i64) -> bool {
        self.in_jacobson_radical(&self.sub(x, &self.from_i64(c)))
    }

    /// `1 + x*y` is a unit for every `y`. All supported rings are commutative,
    /// where this is exactly membership in `J`.
    pub fn is_quasinilpotent_scalar(&self, x: &RingElement) -> bool {
        self.in_jacobson_radical(x)
    }

    /// `1 = -1` in this ring.
    pub fn has_characteristic_two(&self) -> bool {
        matches!(self, RingDescriptor::IntegersMod(2))
    }
}
