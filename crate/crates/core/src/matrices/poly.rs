use std::fmt;

use num_traits::Signed;

use super::SquareMatrix;
use crate::rings::{RingDescriptor, RingElement};

/// Univariate polynomial in `t`, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingDescriptor,
    coeffs: Vec<RingElement>,
}

impl Polynomial {
    pub fn new(ring: RingDescriptor, mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { ring, coeffs }
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        Polynomial { ring, coeffs: Vec::new() }
    }

    pub fn constant(ring: RingDescriptor, c: RingElement) -> Self {
        Self::new(ring, vec![c])
    }

    pub fn one(ring: RingDescriptor) -> Self {
        Self::constant(ring, ring.one())
    }

    /// `t - c`.
    pub fn linear_root(ring: RingDescriptor, c: &RingElement) -> Self {
        Self::new(ring, vec![ring.neg(c), ring.one()])
    }

    pub fn from_i64(ring: RingDescriptor, coeffs: &[i64]) -> Self {
        Self::new(ring, coeffs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RingElement> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(r, (0..n).map(|i| r.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let r = self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(r, (0..n).map(|i| r.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let r = self.ring;
        if self.is_zero() || other.is_zero() {
            return Self::zero(r);
        }
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(x, y));
            }
        }
        Self::new(r, out)
    }

    pub fn scale(&self, c: &RingElement) -> Self {
        Self::new(self.ring, self.coeffs.iter().map(|x| self.ring.mul(c, x)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.ring), |acc, _| acc.mul(self))
    }

    /// Division with remainder. Requires the divisor's leading coefficient
    /// to be a unit; returns `None` otherwise.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let r = self.ring;
        let lead_inv = r.try_invert(divisor.leading()?)?;
        let dd = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![r.zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = r.mul(rem.leading().unwrap(), &lead_inv);
            let shift = rd - dd;
            quot[shift] = c.clone();
            let mut sub = vec![r.zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|x| r.mul(&c, x)));
            rem = rem.sub(&Self::new(r, sub));
        }
        Some((Self::new(r, quot), rem))
    }

    /// Over a field: `(g, s, u)` with `s*self + u*other = g`, `g` monic gcd.
    pub fn extended_gcd(&self, other: &Self) -> Option<(Self, Self, Self)> {
        let r = self.ring;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(r), Self::zero(r));
        let (mut u0, mut u1) = (Self::zero(r), Self::one(r));
        while !r1.is_zero() {
            let (q, rem) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1));
            let u2 = u0.sub(&q.mul(&u1));
            (r0, r1) = (r1, rem);
            (s0, s1) = (s1, s2);
            (u0, u1) = (u1, u2);
        }
        if r0.is_zero() {
            return Some((r0, s0, u0));
        }
        let inv = r.try_invert(r0.leading().unwrap())?;
        Some((r0.scale(&inv), s0.scale(&inv), u0.scale(&inv)))
    }

    pub fn eval(&self, x: &RingElement) -> RingElement {
        let r = self.ring;
        self.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// Horner evaluation at a matrix.
    pub fn eval_matrix(&self, a: &SquareMatrix) -> SquareMatrix {
        let id = SquareMatrix::identity(a.ring(), a.dim());
        self.coeffs
            .iter()
            .rev()
            .fold(SquareMatrix::zero(a.ring(), a.dim()), |acc, c| &(&acc * a) + &id.scale(c))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.value().is_negative();
            let mag = if negative { self.ring.neg(c) } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit_coeff = mag == self.ring.one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit_coeff {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
