//! Definitional brute force over finite matrix rings `M_k(Z/n)`.
//!
//! Nothing here reuses the algebra of [`crate::matrices`]: elements are
//! indices, arithmetic is plain `u64` modular arithmetic, units are found by
//! search, and quasinilpotence is the literal "1 + ax is a unit for every x
//! commuting with a" test. That independence is the point.

mod properties;

pub use properties::{OracleProperty, PropertyRegistry, PropertyReport};

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrices::SquareMatrix;
use crate::rings::RingDescriptor;

pub const DEFAULT_BUDGET: u128 = 1_000_000;

const TABLE_LIMIT: u64 = 1024;

/// `M_k(Z/n)` with elements numbered `0..n^(k*k)` in base-`n` row-major order.
pub struct FiniteMatrixRing {
    n: u64,
    k: usize,
    size: u64,
    budget: u128,
    mul_table: OnceLock<Option<Vec<u32>>>,
    units: OnceLock<Vec<bool>>,
    qnil: OnceLock<Vec<bool>>,
    hirano: OnceLock<Vec<Option<u64>>>,
}

impl std::fmt::Debug for FiniteMatrixRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FiniteMatrixRing {
    pub fn new(n: u64, k: usize, budget: u128) -> Result<Self> {
        if n < 2 || k == 0 {
            return Err(Error::InvalidDescriptor(format!("M_{k}(Z/{n}) is not supported")));
        }
        let size = (n as u128).checked_pow((k * k) as u32).unwrap_or(u128::MAX);
        // Computing comm^2 of one element already touches |R|^2 pairs.
        let work = size.saturating_mul(size);
        if work > budget {
            return Err(Error::BudgetExceeded { size: work, budget });
        }
        Ok(FiniteMatrixRing {
            n,
            k,
            size: size as u64,
            budget,
            mul_table: OnceLock::new(),
            units: OnceLock::new(),
            qnil: OnceLock::new(),
            hirano: OnceLock::new(),
        })
    }

    pub fn from_descriptor(ring: RingDescriptor, k: usize, budget: u128) -> Result<Self> {
        match ring {
            RingDescriptor::IntegersMod(n) => Self::new(n, k, budget),
            other => Err(Error::Unsupported(format!("the oracle enumerates Z/n only, got {other}"))),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegersMod(self.n)
    }

    pub fn label(&self) -> String {
        if self.k == 1 {
            format!("Z/{}", self.n)
        } else {
            format!("M_{}(Z/{})", self.k, self.n)
        }
    }

    /// Fails unless enumerating `arity`-tuples fits the budget.
    pub fn check_arity(&self, arity: u32) -> Result<()> {
        let work = (self.size as u128).saturating_pow(arity.max(2));
        if work > self.budget {
            return Err(Error::BudgetExceeded { size: work, budget: self.budget });
        }
        Ok(())
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.size
    }

    pub fn decode(&self, x: u64) -> Vec<u64> {
        let mut v = vec![0; self.k * self.k];
        let mut x = x;
        for e in v.iter_mut() {
            *e = x % self.n;
            x /= self.n;
        }
        v
    }

    pub fn encode(&self, entries: &[u64]) -> u64 {
        entries.iter().rev().fold(0, |acc, &e| acc * self.n + e % self.n)
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        let mut v = vec![0; self.k * self.k];
        for i in 0..self.k {
            v[i * self.k + i] = 1;
        }
        self.encode(&v)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.decode(x), self.decode(y));
        self.encode(&a.iter().zip(&b).map(|(p, q)| (p + q) % self.n).collect::<Vec<_>>())
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.decode(x), self.decode(y));
        self.encode(&a.iter().zip(&b).map(|(p, q)| (p + self.n - q) % self.n).collect::<Vec<_>>())
    }

    fn mul_direct(&self, x: u64, y: u64) -> u64 {
        let (a, b, k, n) = (self.decode(x), self.decode(y), self.k, self.n);
        let mut c = vec![0u64; k * k];
        for i in 0..k {
            for j in 0..k {
                c[i * k + j] = (0..k).map(|l| a[i * k + l] * b[l * k + j] % n).sum::<u64>() % n;
            }
        }
        self.encode(&c)
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let table = self.mul_table.get_or_init(|| {
            (self.size <= TABLE_LIMIT).then(|| {
                let s = self.size;
                let mut t = Vec::with_capacity((s * s) as usize);
                for x in 0..s {
                    for y in 0..s {
                        t.push(self.mul_direct(x, y) as u32);
                    }
                }
                t
            })
        });
        match table {
            Some(t) => t[(x * self.size + y) as usize] as u64,
            None => self.mul_direct(x, y),
        }
    }

    pub fn pow(&self, x: u64, e: u32) -> u64 {
        (0..e).fold(self.one(), |acc, _| self.mul(acc, x))
    }

    pub fn commute(&self, x: u64, y: u64) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_idempotent(&self, x: u64) -> bool {
        self.mul(x, x) == x
    }

    /// Units by search: `x` is a unit iff some `z` has `xz = zx = 1`.
    pub fn is_unit(&self, x: u64) -> bool {
        self.units.get_or_init(|| {
            let one = self.one();
            let mut units = vec![false; self.size as usize];
            for a in self.elements() {
                if units[a as usize] {
                    continue;
                }
                if let Some(z) = self.elements().find(|&z| self.mul(a, z) == one && self.mul(z, a) == one) {
                    units[a as usize] = true;
                    units[z as usize] = true;
                }
            }
            units
        })[x as usize]
    }

    pub fn comm(&self, a: u64) -> Vec<u64> {
        self.elements().filter(|&x| self.commute(a, x)).collect()
    }

    /// Everything commuting with all of `comm(a)`.
    pub fn comm2(&self, a: u64) -> Vec<u64> {
        let c = self.comm(a);
        self.elements().filter(|&y| c.iter().all(|&x| self.commute(x, y))).collect()
    }

    /// `1 + ax` is a unit for every `x` in `comm(a)`.
    pub fn is_qnil(&self, a: u64) -> bool {
        self.qnil.get_or_init(|| {
            let one = self.one();
            self.elements()
                .map(|a| self.comm(a).into_iter().all(|x| self.is_unit(self.add(one, self.mul(a, x)))))
                .collect()
        })[a as usize]
    }

    fn unique(&self, hits: Vec<u64>) -> Result<Option<u64>> {
        match hits.as_slice() {
            [] => Ok(None),
            [b] => Ok(Some(*b)),
            [b, c, ..] => Err(Error::UniquenessViolation(*b as usize, *c as usize)),
        }
    }

    /// All three axioms evaluated literally.
    pub fn is_hirano_inverse(&self, a: u64, b: u64, comm2_a: &[u64]) -> bool {
        let a2 = self.mul(a, a);
        self.mul(self.mul(b, a), b) == b
            && comm2_a.contains(&b)
            && self.is_qnil(self.sub(a2, self.mul(a, b)))
    }

    pub fn brute_force_hirano(&self, a: u64) -> Result<Option<u64>> {
        let c2 = self.comm2(a);
        let hits = c2.iter().copied().filter(|&b| self.is_hirano_inverse(a, b, &c2)).collect();
        self.unique(hits)
    }

    pub fn brute_force_drazin(&self, a: u64) -> Result<Option<u64>> {
        let c2 = self.comm2(a);
        let a2 = self.mul(a, a);
        let hits = c2
            .iter()
            .copied()
            .filter(|&b| self.mul(self.mul(b, a), b) == b && self.is_qnil(self.sub(a, self.mul(a2, b))))
            .collect();
        self.unique(hits)
    }

    /// Hirano inverses of every element, in enumeration order.
    pub fn hirano_table(&self) -> Result<&[Option<u64>]> {
        if let Some(t) = self.hirano.get() {
            return Ok(t);
        }
        let t = self.elements().map(|a| self.brute_force_hirano(a)).collect::<Result<Vec<_>>>()?;
        Ok(self.hirano.get_or_init(|| t))
    }

    pub fn hirano_of(&self, a: u64) -> Result<Option<u64>> {
        Ok(self.hirano_table()?[a as usize])
    }

    pub fn to_matrix(&self, x: u64) -> SquareMatrix {
        let r = self.descriptor();
        let v = self.decode(x);
        SquareMatrix::from_fn(r, self.k, |i, j| r.from_int(v[i * self.k + j]))
    }

    pub fn from_matrix(&self, m: &SquareMatrix) -> u64 {
        let v: Vec<u64> = m
            .entries()
            .iter()
            .map(|x| num_traits::ToPrimitive::to_u64(x.numer()).expect("residue"))
            .collect();
        self.encode(&v)
    }

    pub fn describe(&self, x: u64) -> String {
        let v = self.decode(x);
        if self.k == 1 {
            return v[0].to_string();
        }
        let rows: Vec<String> = v
            .chunks(self.k)
            .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        format!("[{}]", rows.join(","))
    }
}
