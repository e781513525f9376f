//! Generalized Hirano inverses: certificates, constructions per base ring,
//! and the strategy registry that picks a construction at runtime.

mod integer;
mod local;
mod registry;
mod tripotent;
mod zn;

pub use integer::{classify_integer_2x2, hirano_integer, hirano_integer_2x2, IntegerCase};
pub use local::{classify_local_2x2, hirano_local, hirano_local_2x2, Case, Classification, LocalChecks};
pub use registry::{HiranoOutcome, HiranoStrategy, StrategyRegistry};
pub use tripotent::tripotent_decompose;
pub use zn::hirano_zn;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrices::{Centralizer, SquareMatrix};
use crate::spectral::{split_char_poly, spectral_idempotent};

/// The three defining axioms plus the derived commuting and Drazin checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub bab_eq_b: bool,
    pub in_comm2: bool,
    pub a2_minus_ab_qnil: bool,
    pub ab_eq_ba: bool,
    pub a_minus_a2b_qnil: bool,
}

impl AxiomReport {
    pub fn is_hirano(&self) -> bool {
        self.bab_eq_b && self.in_comm2 && self.a2_minus_ab_qnil
    }

    pub fn is_drazin(&self) -> bool {
        self.bab_eq_b && self.in_comm2 && self.a_minus_a2b_qnil
    }

    pub fn entries(&self) -> [(&'static str, bool); 5] {
        [
            ("bab_eq_b", self.bab_eq_b),
            ("in_comm2", self.in_comm2),
            ("a2_minus_ab_qnil", self.a2_minus_ab_qnil),
            ("ab_eq_ba", self.ab_eq_ba),
            ("a_minus_a2b_qnil", self.a_minus_a2b_qnil),
        ]
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.entries().into_iter().filter(|(_, ok)| !ok).map(|(k, _)| k).collect()
    }
}

pub fn verify_hirano_axioms(a: &SquareMatrix, b: &SquareMatrix) -> Result<AxiomReport> {
    let a2 = a.try_mul(a)?;
    let ab = a.try_mul(b)?;
    Ok(AxiomReport {
        bab_eq_b: &(b * a) * b == *b,
        in_comm2: Centralizer::of(a)?.double_commutant_contains(b),
        a2_minus_ab_qnil: (&a2 - &ab).is_quasinilpotent(),
        ab_eq_ba: ab == b * a,
        a_minus_a2b_qnil: (a - &(&a2 * b)).is_quasinilpotent(),
    })
}

/// Identities every genuine witness satisfies beyond the axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralChecks {
    pub ah_idempotent: bool,
    pub p_eq_a2h2: bool,
    pub a2_minus_p_qnil: bool,
    pub pi_idempotent: bool,
    pub h2_a2_h2_eq_h2: bool,
}

impl StructuralChecks {
    pub fn all(&self) -> bool {
        self.entries().iter().all(|(_, ok)| *ok)
    }

    pub fn entries(&self) -> [(&'static str, bool); 5] {
        [
            ("ah_idempotent", self.ah_idempotent),
            ("p_eq_a2h2", self.p_eq_a2h2),
            ("a2_minus_p_qnil", self.a2_minus_p_qnil),
            ("pi_idempotent", self.pi_idempotent),
            ("h2_a2_h2_eq_h2", self.h2_a2_h2_eq_h2),
        ]
    }
}

/// A certified generalized Hirano inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiranoWitness {
    pub a: SquareMatrix,
    pub h: SquareMatrix,
    /// The spectral idempotent `a^2 h^2`.
    pub p: SquareMatrix,
    pub qnil_part: SquareMatrix,
    /// `a^pi = I - a h`.
    pub pi: SquareMatrix,
    /// Equal to `h`; kept to make the Drazin identification explicit.
    pub drazin: SquareMatrix,
    pub axioms: AxiomReport,
    pub structure: StructuralChecks,
}

impl HiranoWitness {
    /// Checks every axiom and structural identity. Any failure is an
    /// [`Error::AxiomViolation`], never a quiet negative.
    pub fn certify(a: &SquareMatrix, h: SquareMatrix) -> Result<Self> {
        let axioms = verify_hirano_axioms(a, &h)?;
        let id = SquareMatrix::identity(a.ring(), a.dim());
        let a2 = a * a;
        let ah = a * &h;
        let h2 = &h * &h;
        let p = &a2 * &h2;
        let qnil_part = &a2 - &p;
        let pi = &id - &ah;
        let structure = StructuralChecks {
            ah_idempotent: ah.is_idempotent(),
            p_eq_a2h2: p == ah && p.is_idempotent(),
            a2_minus_p_qnil: qnil_part.is_quasinilpotent(),
            pi_idempotent: pi.is_idempotent(),
            h2_a2_h2_eq_h2: &(&h2 * &a2) * &h2 == h2,
        };
        if !axioms.is_hirano() || !axioms.is_drazin() || !axioms.ab_eq_ba || !structure.all() {
            let mut failed: Vec<&str> = axioms.failures();
            failed.extend(structure.entries().iter().filter(|(_, ok)| !ok).map(|(k, _)| *k));
            return Err(Error::AxiomViolation(format!(
                "candidate {h} for {a} fails: {}",
                failed.join(", ")
            )));
        }
        Ok(HiranoWitness {
            a: a.clone(),
            drazin: h.clone(),
            h,
            p,
            qnil_part,
            pi,
            axioms,
            structure,
        })
    }

    pub fn checks(&self) -> BTreeMap<&'static str, bool> {
        self.axioms.entries().into_iter().chain(self.structure.entries()).collect()
    }
}

/// The inverse via the default strategy registry, if it exists.
pub fn hirano(a: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    Ok(StrategyRegistry::default().solve(a)?.witness)
}

/// Builds `h = a (a^2 + I - p)^-1 p` from a spectral idempotent.
pub fn hirano_from_idempotent(a: &SquareMatrix, p: &SquareMatrix) -> Result<HiranoWitness> {
    let a2 = a.try_mul(a)?;
    a.try_add(p)?;
    if !p.is_idempotent() {
        return Err(Error::Precondition("p is not idempotent".into()));
    }
    if !p.commutes_with(a) {
        return Err(Error::Precondition("p does not commute with a".into()));
    }
    if !(&a2 - p).is_quasinilpotent() {
        return Err(Error::Precondition("a^2 - p is not quasinilpotent".into()));
    }
    let id = SquareMatrix::identity(a.ring(), a.dim());
    let shifted = &(&a2 + &id) - p;
    let inv = shifted
        .try_inverse()
        .ok_or_else(|| Error::Precondition("a^2 + I - p is not invertible".into()))?;
    HiranoWitness::certify(a, &(a * &inv) * p)
}

/// Over a field in any dimension: exists iff `chi(A^2) = t^r (t-1)^s`.
pub fn hirano_field(a: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    let ring = a.ring();
    if !ring.is_field() {
        return Err(Error::Unsupported(format!("hirano_field needs a field, got {ring}")));
    }
    let a2 = a * a;
    let chi = a2.char_poly();
    let (_, rest) = split_char_poly(&chi, &ring.zero());
    let (_, rest) = split_char_poly(&rest, &ring.one());
    if !rest.is_constant() {
        return Ok(None);
    }
    let p = spectral_idempotent(&a2, &ring.zero())?.projector;
    let witness = hirano_from_idempotent(a, &p)?;
    let drazin = crate::spectral::drazin_field(a)?;
    if drazin != witness.h {
        return Err(Error::AxiomViolation(format!(
            "Hirano inverse {} differs from Drazin inverse {drazin}",
            witness.h
        )));
    }
    Ok(Some(witness))
}
