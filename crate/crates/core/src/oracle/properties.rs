use serde::Serialize;

use super::FiniteMatrixRing;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub ring: String,
    pub checked: u64,
    pub passed: u64,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn ok(&self) -> bool {
        self.checked == self.passed
    }
}

/// A statement checked exhaustively on a finite ring.
pub trait OracleProperty: Send + Sync {
    fn id(&self) -> &'static str;
    fn statement(&self) -> &'static str;
    /// How many ring elements one instance ranges over.
    fn arity(&self) -> u32;
    fn run(&self, ring: &FiniteMatrixRing, tally: &mut Tally) -> Result<()>;

    fn check(&self, ring: &FiniteMatrixRing) -> Result<PropertyReport> {
        ring.check_arity(self.arity())?;
        let mut tally = Tally::default();
        self.run(ring, &mut tally)?;
        Ok(PropertyReport {
            property: self.id().to_string(),
            ring: ring.label(),
            checked: tally.checked,
            passed: tally.passed,
            counterexample: tally.counterexample,
        })
    }
}

#[derive(Debug, Default)]
pub struct Tally {
    checked: u64,
    passed: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else if self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }
}

type Runner = fn(&FiniteMatrixRing, &mut Tally) -> Result<()>;

struct Property {
    id: &'static str,
    statement: &'static str,
    arity: u32,
    run: Runner,
}

impl OracleProperty for Property {
    fn id(&self) -> &'static str {
        self.id
    }
    fn statement(&self) -> &'static str {
        self.statement
    }
    fn arity(&self) -> u32 {
        self.arity
    }
    fn run(&self, ring: &FiniteMatrixRing, tally: &mut Tally) -> Result<()> {
        (self.run)(ring, tally)
    }
}

/// Properties by id, in registration order.
pub struct PropertyRegistry {
    entries: Vec<Box<dyn OracleProperty>>,
}

impl Default for PropertyRegistry {
    fn default() -> Self {
        let mut reg = PropertyRegistry { entries: Vec::new() };
        for p in builtin() {
            reg.register(Box::new(p));
        }
        reg
    }
}

impl PropertyRegistry {
    pub fn empty() -> Self {
        PropertyRegistry { entries: Vec::new() }
    }

    /// Later registrations with an existing id replace the earlier one.
    pub fn register(&mut self, p: Box<dyn OracleProperty>) {
        if let Some(slot) = self.entries.iter_mut().find(|e| e.id() == p.id()) {
            *slot = p;
        } else {
            self.entries.push(p);
        }
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.iter().map(|p| p.id()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&dyn OracleProperty> {
        self.entries.iter().find(|p| p.id() == id).map(|p| p.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn OracleProperty> {
        self.entries.iter().map(|p| p.as_ref())
    }

    pub fn check(&self, id: &str, ring: &FiniteMatrixRing) -> Result<PropertyReport> {
        self.get(id)
            .ok_or_else(|| Error::Unsupported(format!("unknown property `{id}`; known: {}", self.ids().join(", "))))?
            .check(ring)
    }
}

fn idempotents(r: &FiniteMatrixRing) -> Vec<u64> {
    r.elements().filter(|&e| r.is_idempotent(e)).collect()
}

fn pi(r: &FiniteMatrixRing, a: u64, h: u64) -> u64 {
    r.sub(r.one(), r.mul(a, h))
}

fn qnil_times_idempotent(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    let ids = idempotents(r);
    for a in r.elements().filter(|&a| r.is_qnil(a)) {
        for &e in ids.iter().filter(|&&e| r.commute(a, e)) {
            t.record(r.is_qnil(r.mul(a, e)), || format!("a={}, e={}", r.describe(a), r.describe(e)));
        }
    }
    Ok(())
}

fn hirano_is_drazin(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        if let Some(b) = r.hirano_of(a)? {
            let d = r.brute_force_drazin(a)?;
            t.record(d == Some(b), || format!("a={}", r.describe(a)));
        }
    }
    Ok(())
}

fn square_witness(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        let a2 = r.mul(a, a);
        let alt = r.comm2(a).into_iter().any(|b| {
            r.mul(r.mul(b, a2), b) == b && r.is_qnil(r.sub(a2, r.mul(a2, b)))
        });
        t.record(alt == r.hirano_of(a)?.is_some(), || format!("a={}", r.describe(a)));
    }
    Ok(())
}

fn idempotent_criterion(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    let ids = idempotents(r);
    for a in r.elements() {
        let c2 = r.comm2(a);
        let a2 = r.mul(a, a);
        let alt = ids.iter().any(|&p| c2.contains(&p) && r.is_qnil(r.sub(a2, p)));
        t.record(alt == r.hirano_of(a)?.is_some(), || format!("a={}", r.describe(a)));
    }
    Ok(())
}

fn ab_idempotent_criterion(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        let a2 = r.mul(a, a);
        let alt = r.comm2(a).into_iter().any(|b| {
            let ab = r.mul(a, b);
            r.is_idempotent(ab) && r.is_qnil(r.sub(a2, ab))
        });
        t.record(alt == r.hirano_of(a)?.is_some(), || format!("a={}", r.describe(a)));
    }
    Ok(())
}

fn unique_idempotent(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    let ids = idempotents(r);
    for a in r.elements() {
        if r.hirano_of(a)?.is_none() {
            continue;
        }
        let a2 = r.mul(a, a);
        let count = ids.iter().filter(|&&p| r.commute(p, a) && r.is_qnil(r.sub(a2, p))).count();
        t.record(count == 1, || format!("a={} has {count} idempotents", r.describe(a)));
    }
    Ok(())
}

fn commuting_qnil(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        for b in r.elements().filter(|&b| r.commute(a, b)) {
            let (qa, qb) = (r.is_qnil(a), r.is_qnil(b));
            if qa && qb {
                t.record(r.is_qnil(r.add(a, b)), || format!("sum: a={}, b={}", r.describe(a), r.describe(b)));
            }
            if qa || qb {
                t.record(r.is_qnil(r.mul(a, b)), || format!("product: a={}, b={}", r.describe(a), r.describe(b)));
            }
        }
    }
    Ok(())
}

fn cline_transfer(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        for b in r.elements() {
            let aba = r.mul(r.mul(a, b), a);
            for c in r.elements() {
                if r.mul(r.mul(a, c), a) != aba {
                    continue;
                }
                let ac = r.hirano_of(r.mul(a, c))?;
                let ba = r.hirano_of(r.mul(b, a))?;
                let ok = match (ac, ba) {
                    (None, None) => true,
                    (Some(d), Some(e)) => r.mul(r.mul(b, r.mul(d, d)), a) == e,
                    _ => false,
                };
                t.record(ok, || format!("a={}, b={}, c={}", r.describe(a), r.describe(b), r.describe(c)));
            }
        }
    }
    Ok(())
}

fn power_transfer(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        for b in r.elements() {
            let (ab, ba) = (r.mul(a, b), r.mul(b, a));
            for k in 1..=3 {
                if r.hirano_of(r.pow(ab, k))?.is_some() {
                    let ok = r.hirano_of(r.pow(ba, k))?.is_some();
                    t.record(ok, || format!("a={}, b={}, k={k}", r.describe(a), r.describe(b)));
                }
            }
        }
    }
    Ok(())
}

fn commuting_product(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        let Some(ah) = r.hirano_of(a)? else { continue };
        for b in r.elements().filter(|&b| r.commute(a, b)) {
            let Some(bh) = r.hirano_of(b)? else { continue };
            let ok = r.hirano_of(r.mul(a, b))? == Some(r.mul(ah, bh));
            t.record(ok, || format!("a={}, b={}", r.describe(a), r.describe(b)));
        }
    }
    Ok(())
}

fn power_rule(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        let Some(ah) = r.hirano_of(a)? else { continue };
        for n in 1..=4 {
            let ok = r.hirano_of(r.pow(a, n))? == Some(r.pow(ah, n));
            t.record(ok, || format!("a={}, n={n}", r.describe(a)));
        }
    }
    Ok(())
}

fn qnil_sum(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements().filter(|&a| r.is_qnil(a)) {
        for b in r.elements() {
            let Some(bh) = r.hirano_of(b)? else { continue };
            let bpi = pi(r, b, bh);
            let hyp = r.mul(a, bpi) == a && r.mul(r.mul(bpi, b), a) == r.mul(r.mul(bpi, a), b);
            if hyp {
                let ok = r.hirano_of(r.add(a, b))?.is_some();
                t.record(ok, || format!("a={}, b={}", r.describe(a), r.describe(b)));
            }
        }
    }
    Ok(())
}

fn additive_rule(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        let Some(ah) = r.hirano_of(a)? else { continue };
        let api = pi(r, a, ah);
        for b in r.elements() {
            let Some(bh) = r.hirano_of(b)? else { continue };
            let bpi = pi(r, b, bh);
            let hyp = r.mul(a, bpi) == a
                && r.mul(r.mul(bpi, b), api) == r.mul(bpi, b)
                && r.mul(r.mul(r.mul(bpi, api), b), a) == r.mul(r.mul(r.mul(bpi, api), a), b);
            if hyp {
                let ok = r.hirano_of(r.add(a, b))?.is_some();
                t.record(ok, || format!("a={}, b={}", r.describe(a), r.describe(b)));
            }
        }
    }
    Ok(())
}

fn orthogonal_rule(r: &FiniteMatrixRing, t: &mut Tally) -> Result<()> {
    for a in r.elements() {
        let Some(ah) = r.hirano_of(a)? else { continue };
        for b in r.elements() {
            if r.mul(a, b) != r.zero() || r.mul(b, a) != r.zero() {
                continue;
            }
            let Some(bh) = r.hirano_of(b)? else { continue };
            let ok = r.hirano_of(r.add(a, b))? == Some(r.add(ah, bh));
            t.record(ok, || format!("a={}, b={}", r.describe(a), r.describe(b)));
        }
    }
    Ok(())
}

fn builtin() -> Vec<Property> {
    vec![
        Property { id: "lem2.1", statement: "qnil a, idempotent e commuting with a: ae is qnil", arity: 2, run: qnil_times_idempotent },
        Property { id: "thm2.2", statement: "a Hirano inverse is also the Drazin inverse", arity: 1, run: hirano_is_drazin },
        Property { id: "lem2.4", statement: "Hirano invertible iff some b in comm2(a) has b = b a^2 b and a^2 - a^2 b qnil", arity: 1, run: square_witness },
        Property { id: "thm2.5", statement: "Hirano invertible iff an idempotent p in comm2(a) has a^2 - p qnil", arity: 1, run: idempotent_criterion },
        Property { id: "cor2.6", statement: "Hirano invertible iff some b in comm2(a) has ab idempotent and a^2 - ab qnil", arity: 1, run: ab_idempotent_criterion },
        Property { id: "prop2.7", statement: "exactly one commuting idempotent p with a^2 - p qnil", arity: 1, run: unique_idempotent },
        Property { id: "lem4.4", statement: "commuting qnil elements have qnil sum; a qnil factor makes the product qnil", arity: 2, run: commuting_qnil },
        Property { id: "thm4.1", statement: "aba = aca: ac invertible iff ba is, with (ba)^h = b((ac)^h)^2 a", arity: 3, run: cline_transfer },
        Property { id: "cor4.3", statement: "(ab)^k invertible implies (ba)^k invertible, k <= 3", arity: 2, run: power_transfer },
        Property { id: "thm4.5", statement: "commuting invertible a, b: (ab)^h = a^h b^h", arity: 2, run: commuting_product },
        Property { id: "cor4.6", statement: "(a^n)^h = (a^h)^n for n <= 4", arity: 1, run: power_rule },
        Property { id: "lem5.2", statement: "qnil a with a = a b^pi and b^pi b a = b^pi a b: a + b invertible", arity: 2, run: qnil_sum },
        Property { id: "thm5.3", statement: "additive hypotheses imply a + b invertible", arity: 2, run: additive_rule },
        Property { id: "cor5.5", statement: "ab = ba = 0: (a + b)^h = a^h + b^h", arity: 2, run: orthogonal_rule },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn every_property_holds_on_small_rings() {
        let reg = PropertyRegistry::default();
        for (n, k) in [(2u64, 1usize), (4, 1), (6, 1), (2, 2)] {
            let ring = FiniteMatrixRing::new(n, k, DEFAULT_BUDGET).unwrap();
            for id in reg.ids() {
                let rep = reg.check(id, &ring).unwrap();
                assert!(rep.ok(), "{rep:?}");
            }
        }
    }

    #[test]
    fn unknown_property() {
        let reg = PropertyRegistry::default();
        let ring = FiniteMatrixRing::new(5, 1, DEFAULT_BUDGET).unwrap();
        assert!(matches!(reg.check("nope", &ring), Err(Error::Unsupported(_))));
    }

    #[test]
    fn idempotent_criterion_over_z30() {
        let reg = PropertyRegistry::default();
        let ring = FiniteMatrixRing::new(30, 1, DEFAULT_BUDGET).unwrap();
        let rep = reg.check("thm2.5", &ring).unwrap();
        assert_eq!((rep.checked, rep.passed), (30, 30));
    }
}
