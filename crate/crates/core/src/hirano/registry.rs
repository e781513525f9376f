use super::{
    hirano_field, hirano_integer, hirano_integer_2x2, hirano_local, hirano_local_2x2, hirano_zn, Classification,
    HiranoWitness,
};
use crate::error::{Error, Result};
use crate::matrices::SquareMatrix;
use crate::oracle::{FiniteMatrixRing, DEFAULT_BUDGET};
use crate::rings::RingDescriptor;

/// Result of running one strategy: a witness, or the reason there is none.
#[derive(Debug, Clone)]
pub struct HiranoOutcome {
    pub strategy: &'static str,
    pub case: String,
    pub failed: Option<String>,
    pub classification: Option<Classification>,
    pub witness: Option<HiranoWitness>,
}

impl HiranoOutcome {
    fn new(strategy: &'static str, case: impl Into<String>, witness: Option<HiranoWitness>, failed: &str) -> Self {
        let failed = witness.is_none().then(|| failed.to_string());
        HiranoOutcome { strategy, case: case.into(), failed, classification: None, witness }
    }

    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

pub trait HiranoStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn supports(&self, a: &SquareMatrix) -> bool;
    fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome>;
}

struct IntegerStrategy;

impl HiranoStrategy for IntegerStrategy {
    fn name(&self) -> &'static str {
        "integer"
    }

    fn supports(&self, a: &SquareMatrix) -> bool {
        a.ring() == RingDescriptor::Integers
    }

    fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome> {
        if a.dim() == 2 {
            let (case, w) = hirano_integer_2x2(a)?;
            Ok(HiranoOutcome::new(self.name(), case.name(), w, "no-integer-case-applies"))
        } else {
            let w = hirano_integer(a)?;
            Ok(HiranoOutcome::new(self.name(), "rational-then-integral", w, "no-integral-inverse"))
        }
    }
}

struct ZnStrategy;

impl HiranoStrategy for ZnStrategy {
    fn name(&self) -> &'static str {
        "zn"
    }

    fn supports(&self, a: &SquareMatrix) -> bool {
        matches!(a.ring(), RingDescriptor::IntegersMod(_)) && a.dim() <= 2
    }

    fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome> {
        if a.ring().is_local() && a.dim() == 2 {
            return LocalStrategy.solve(a).map(|o| HiranoOutcome { strategy: self.name(), ..o });
        }
        let w = hirano_zn(a)?;
        Ok(HiranoOutcome::new(self.name(), "crt", w, "local-component-without-inverse"))
    }
}

struct LocalStrategy;

impl HiranoStrategy for LocalStrategy {
    fn name(&self) -> &'static str {
        "local"
    }

    fn supports(&self, a: &SquareMatrix) -> bool {
        match a.ring() {
            RingDescriptor::Rationals => a.dim() == 2,
            r => r.is_local() && a.dim() <= 2,
        }
    }

    fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome> {
        if a.dim() == 1 {
            let w = hirano_local(a)?;
            return Ok(HiranoOutcome::new(self.name(), "scalar", w, "square-not-in-J-or-1+J"));
        }
        let (c, w) = hirano_local_2x2(a)?;
        let mut out = HiranoOutcome::new(self.name(), c.case.name(), w, c.case.failed().unwrap_or(""));
        out.classification = Some(c);
        Ok(out)
    }
}

struct FieldStrategy;

impl HiranoStrategy for FieldStrategy {
    fn name(&self) -> &'static str {
        "field"
    }

    fn supports(&self, a: &SquareMatrix) -> bool {
        a.ring().is_field()
    }

    fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome> {
        let w = hirano_field(a)?;
        Ok(HiranoOutcome::new(self.name(), "spectral", w, "square-has-eigenvalue-outside-0-1"))
    }
}

struct OracleStrategy {
    budget: u128,
}

impl HiranoStrategy for OracleStrategy {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn supports(&self, a: &SquareMatrix) -> bool {
        matches!(a.ring(), RingDescriptor::IntegersMod(_))
    }

    fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome> {
        let ring = FiniteMatrixRing::from_descriptor(a.ring(), a.dim(), self.budget)?;
        let w = match ring.brute_force_hirano(ring.from_matrix(a))? {
            Some(b) => Some(HiranoWitness::certify(a, ring.to_matrix(b))?),
            None => None,
        };
        Ok(HiranoOutcome::new(self.name(), "enumeration", w, "no-element-satisfies-axioms"))
    }
}

/// Named Hirano solvers, tried in registration order.
pub struct StrategyRegistry {
    strategies: Vec<Box<dyn HiranoStrategy>>,
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = StrategyRegistry::empty();
        r.register(Box::new(IntegerStrategy));
        r.register(Box::new(ZnStrategy));
        r.register(Box::new(LocalStrategy));
        r.register(Box::new(FieldStrategy));
        r.register(Box::new(OracleStrategy { budget: DEFAULT_BUDGET }));
        r
    }
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry { strategies: Vec::new() }
    }

    /// Replaces a strategy of the same name, otherwise appends.
    pub fn register(&mut self, s: Box<dyn HiranoStrategy>) {
        if let Some(slot) = self.strategies.iter_mut().find(|x| x.name() == s.name()) {
            *slot = s;
        } else {
            self.strategies.push(s);
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn HiranoStrategy> {
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn select(&self, a: &SquareMatrix) -> Result<&dyn HiranoStrategy> {
        self.strategies
            .iter()
            .find(|s| s.supports(a))
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::Unsupported(format!("no strategy handles {}x{} over {}", a.dim(), a.dim(), a.ring())))
    }

    pub fn solve(&self, a: &SquareMatrix) -> Result<HiranoOutcome> {
        self.select(a)?.solve(a)
    }

    pub fn solve_with(&self, name: &str, a: &SquareMatrix) -> Result<HiranoOutcome> {
        let s = self
            .get(name)
            .ok_or_else(|| Error::Unsupported(format!("unknown strategy `{name}`; known: {}", self.names().join(", "))))?;
        if !s.supports(a) {
            return Err(Error::Unsupported(format!(
                "strategy `{name}` does not handle {}x{} over {}",
                a.dim(),
                a.dim(),
                a.ring()
            )));
        }
        s.solve(a)
    }
}
