//! Dense square matrices over a [`RingDescriptor`], plus the ring-theoretic
//! predicates the inverse constructions rely on.

mod centralizer;
mod charpoly;
mod howell;
pub(crate) mod linear;
mod peirce;
mod poly;

pub use centralizer::{centralizer_generators, in_double_commutant, Centralizer};
pub use howell::{howell_form, kernel_generators_mod};
pub use peirce::{peirce_blocks, BlockView};
pub use poly::Polynomial;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rings::{CrtSplit, RingDescriptor, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    ring: RingDescriptor,
    dim: usize,
    entries: Vec<RingElement>,
}

impl SquareMatrix {
    pub fn zero(ring: RingDescriptor, dim: usize) -> Self {
        Self::from_fn(ring, dim, |_, _| ring.zero())
    }

    pub fn identity(ring: RingDescriptor, dim: usize) -> Self {
        Self::from_fn(ring, dim, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn from_fn(
        ring: RingDescriptor,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> RingElement,
    ) -> Self {
        assert!(dim >= 1, "matrices must have dimension >= 1");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { ring, dim, entries }
    }

    /// Builds a matrix from rows, checking shape and that every entry is
    /// canonical for `ring`.
    pub fn from_rows(ring: RingDescriptor, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Precondition("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            for x in row {
                if !ring.contains(&x) {
                    return Err(Error::InvalidElement(format!("{x} is not canonical in {ring}")));
                }
                entries.push(x);
            }
        }
        Ok(SquareMatrix { ring, dim, entries })
    }

    pub fn from_i64<const N: usize>(ring: RingDescriptor, rows: [[i64; N]; N]) -> Self {
        Self::from_fn(ring, N, |i, j| ring.from_i64(rows[i][j]))
    }

    pub fn diag(ring: RingDescriptor, values: &[i64]) -> Self {
        Self::from_fn(ring, values.len(), |i, j| {
            if i == j {
                ring.from_i64(values[i])
            } else {
                ring.zero()
            }
        })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingElement]> {
        self.entries.chunks(self.dim)
    }

    /// Reinterprets the entries under another ring (e.g. `Z -> Q`, `Z_(p) -> Q`).
    pub fn to_ring(&self, ring: RingDescriptor) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|x| ring.element(x.value().clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrix { ring, dim: self.dim, entries })
    }

    fn check_conformable(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::DescriptorMismatch { left: self.ring, right: other.ring });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_conformable(other)?;
        let r = self.ring;
        Ok(SquareMatrix {
            ring: r,
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| r.add(x, y)).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_conformable(other)?;
        let r = self.ring;
        Ok(SquareMatrix {
            ring: r,
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| r.sub(x, y)).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_conformable(other)?;
        let (r, n) = (self.ring, self.dim);
        Ok(Self::from_fn(r, n, |i, j| {
            let mut acc = r.zero();
            for l in 0..n {
                let x = self.get(i, l);
                if x.is_zero() {
                    continue;
                }
                acc = r.add(&acc, &r.mul(x, other.get(l, j)));
            }
            acc
        }))
    }

    pub fn scale(&self, c: &RingElement) -> Self {
        let r = self.ring;
        SquareMatrix {
            ring: r,
            dim: self.dim,
            entries: self.entries.iter().map(|x| r.mul(c, x)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.ring, self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring, self.dim)
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        (self * other) == (other * self)
    }

    pub fn trace(&self) -> RingElement {
        let r = self.ring;
        (0..self.dim).fold(r.zero(), |acc, i| r.add(&acc, self.get(i, i)))
    }

    /// Monic `det(tI - A)`, computed without divisions.
    pub fn char_poly(&self) -> Polynomial {
        charpoly::berkowitz(self)
    }

    /// Determinant as `(-1)^k` times the constant term of the characteristic polynomial.
    pub fn det(&self) -> RingElement {
        let c0 = self.char_poly().coeff(0);
        if self.dim.is_multiple_of(2) {
            c0
        } else {
            self.ring.neg(&c0)
        }
    }

    /// Adjugate from the characteristic polynomial:
    /// `adj(A) = (-1)^(k+1) (A^(k-1) + c_(k-1) A^(k-2) + ... + c_1 I)`.
    pub fn adjugate(&self) -> Self {
        let r = self.ring;
        let chi = self.char_poly();
        let mut acc = Self::zero(r, self.dim);
        for i in (1..=self.dim).rev() {
            acc = &(&acc * self) + &Self::identity(r, self.dim).scale(&chi.coeff(i));
        }
        if self.dim.is_multiple_of(2) {
            -&acc
        } else {
            acc
        }
    }

    /// Inverse exactly when the determinant is a unit of the base ring.
    pub fn try_inverse(&self) -> Option<Self> {
        let det_inv = self.ring.try_invert(&self.det())?;
        Some(self.adjugate().scale(&det_inv))
    }

    /// Exponent bound that certifies nilpotence: `k` over reduced rings,
    /// `k * max e` over `Z/n` with `n = prod p^e`.
    fn nilpotency_bound(&self) -> u32 {
        let k = self.dim as u32;
        match self.ring {
            RingDescriptor::IntegersMod(n) => {
                k * crate::rings::crt_split(n).factors().iter().map(|f| f.e).max().unwrap_or(1)
            }
            _ => k,
        }
    }

    pub fn nilpotency_index(&self) -> Option<u32> {
        let bound = self.nilpotency_bound();
        let mut power = self.clone();
        for m in 1..=bound {
            if power.is_zero() {
                return Some(m);
            }
            power = &power * self;
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.nilpotency_bound()).is_zero()
    }

    pub fn entries_in_radical(&self) -> bool {
        self.entries.iter().all(|x| self.ring.in_jacobson_radical(x))
    }

    /// Quasinilpotence in `M_k(R)`: nilpotent over `Q`/`Z`; nilpotent modulo
    /// `J(R)` (equivalently `A^k` has entries in `J`) over the residue and
    /// p-local rings.
    pub fn is_quasinilpotent(&self) -> bool {
        match self.ring {
            RingDescriptor::Rationals | RingDescriptor::Integers => self.is_nilpotent(),
            _ => {
                let verdict = self.pow(self.dim as u32).entries_in_radical();
                if self.dim == 2 {
                    debug_assert_eq!(verdict, (self * self).entries_in_radical());
                }
                verdict
            }
        }
    }

    pub fn project_crt(&self, split: &CrtSplit) -> Vec<SquareMatrix> {
        split
            .rings()
            .into_iter()
            .map(|r| Self::from_fn(r, self.dim, |i, j| r.from_int(self.get(i, j).numer().clone())))
            .collect()
    }

    pub fn reconstruct_crt(split: &CrtSplit, parts: &[SquareMatrix]) -> SquareMatrix {
        let ring = RingDescriptor::IntegersMod(split.modulus());
        let dim = parts[0].dim;
        Self::from_fn(ring, dim, |i, j| {
            let residues: Vec<RingElement> = parts.iter().map(|m| m.get(i, j).clone()).collect();
            split.reconstruct(&residues)
        })
    }

    /// Row-major string form used in reports and diagnostics.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "] over {}", self.ring)
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_add(rhs).expect("matrix addition")
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_sub(rhs).expect("matrix subtraction")
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_mul(rhs).expect("matrix multiplication")
    }
}

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;
    fn neg(self) -> SquareMatrix {
        let r = self.ring;
        SquareMatrix {
            ring: r,
            dim: self.dim,
            entries: self.entries.iter().map(|x| r.neg(x)).collect(),
        }
    }
}
