use std::collections::BTreeMap;
use std::fmt;

use super::HopfPresentation;
use crate::algebra::{FreePoly, TensorPoly, Word};
use crate::error::{Error, Result};
use crate::rewrite::Confluence;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

/// Result of [`HopfPresentation::validate`]: one entry per axiom family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub status: Confluence,
}

impl ValidationReport {
    /// No check failed. Skipped checks do not count against the report.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, CheckOutcome::Fail(_)))
    }

    /// Passed, with the antipode checks actually run.
    pub fn is_hopf(&self) -> bool {
        self.passed() && matches!(self.get("antipode"), Some(CheckOutcome::Pass))
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| matches!(c.outcome, CheckOutcome::Fail(_)))
    }
}

/// `CHECK <name> PASS|FAIL <detail>|SKIP <detail>`
impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            CheckOutcome::Pass => write!(f, "CHECK {} PASS", self.name),
            CheckOutcome::Fail(d) => write!(f, "CHECK {} FAIL {d}", self.name),
            CheckOutcome::Skipped(d) => write!(f, "CHECK {} SKIP {d}", self.name),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        match self.status {
            Confluence::Full => writeln!(f, "verified: exact"),
            Confluence::UpToDegree(d) => writeln!(f, "verified: up to degree {d}"),
        }
    }
}

type Triple = BTreeMap<(Word, Word, Word), Scalar>;

fn add_triple(t: &mut Triple, key: (Word, Word, Word), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = t.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Runs a per-item check and keeps the first failure.
fn first_failure<I>(items: I, mut check: impl FnMut(I::Item) -> Result<Option<String>>) -> Result<CheckOutcome>
where
    I: IntoIterator,
{
    for item in items {
        if let Some(detail) = check(item)? {
            return Ok(CheckOutcome::Fail(detail));
        }
    }
    Ok(CheckOutcome::Pass)
}

impl HopfPresentation {
    /// Degree bound the validation suite needs: twice the largest relation
    /// degree or total degree of a comultiplication entry.
    pub fn required_validation_bound(&self) -> usize {
        let rel = self.relations.iter().filter_map(FreePoly::degree).max().unwrap_or(0);
        let del = self.delta.iter().filter_map(TensorPoly::degree).max().unwrap_or(0);
        2 * rel.max(del)
    }

    /// `(Δ⊗id)Δ(g)` and `(id⊗Δ)Δ(g)` as normalized triple tensors.
    fn coassociativity_sides(&self, p: &FreePoly) -> Result<(Triple, Triple)> {
        let delta = self.delta_of(p)?;
        let mut left = Triple::new();
        let mut right = Triple::new();
        for (u, v, c) in delta.terms() {
            for (a, b, d) in self.delta_of(&FreePoly::word(&self.sig, u.clone()))?.terms() {
                add_triple(&mut left, (a.clone(), b.clone(), v.clone()), c.mul(d));
            }
            for (a, b, d) in self.delta_of(&FreePoly::word(&self.sig, v.clone()))?.terms() {
                add_triple(&mut right, (u.clone(), a.clone(), b.clone()), c.mul(d));
            }
        }
        Ok((left, right))
    }

    /// `(ε⊗id)Δ(p)` and `(id⊗ε)Δ(p)`.
    pub fn counit_sides(&self, p: &FreePoly) -> Result<(FreePoly, FreePoly)> {
        let delta = self.delta_of(p)?;
        let mut left = FreePoly::zero(&self.sig);
        let mut right = FreePoly::zero(&self.sig);
        for (u, v, c) in delta.terms() {
            let eu = self.eps_of(&FreePoly::word(&self.sig, u.clone()))?;
            let ev = self.eps_of(&FreePoly::word(&self.sig, v.clone()))?;
            left.add_term(v.clone(), &c.mul(&eu));
            right.add_term(u.clone(), &c.mul(&ev));
        }
        Ok((self.normal_form(&left)?, self.normal_form(&right)?))
    }

    pub fn is_coassociative_on(&self, p: &FreePoly) -> Result<bool> {
        let (l, r) = self.coassociativity_sides(p)?;
        Ok(l == r)
    }

    /// The bialgebra and Hopf axioms checked on generators and relations,
    /// all modulo the rewriting system.
    ///
    /// Generators suffice: `Δ`, `ε` are algebra maps and `S` an
    /// anti-algebra map by construction, and the convolution identities are
    /// closed under products (if they hold for `h` and `k` they hold for `hk`).
    pub fn validate(&self) -> Result<ValidationReport> {
        let required = self.required_validation_bound();
        if required > self.degree_bound() {
            return Err(Error::DegreeOverflow { bound: self.degree_bound(), required });
        }
        let sig = self.sig.clone();
        let gens: Vec<u32> = (0..sig.len() as u32).collect();
        let name = |g: u32| sig.name(g).to_string();
        let mut checks = Vec::new();

        let relations = first_failure(&self.relations, |r| {
            let nf = self.normal_form(r)?;
            Ok((!nf.is_zero()).then(|| format!("relation {r} reduces to {nf}")))
        })?;
        checks.push(Check { name: "relations", outcome: relations });

        let coassoc = first_failure(gens.iter().copied(), |g| {
            let (l, r) = self.coassociativity_sides(&self.generator(g))?;
            Ok((l != r).then(|| format!("generator {}: (Delta (x) id)Delta != (id (x) Delta)Delta", name(g))))
        })?;
        checks.push(Check { name: "coassociativity", outcome: coassoc });

        let counit = first_failure(gens.iter().copied(), |g| {
            let x = self.normal_form(&self.generator(g))?;
            let (l, r) = self.counit_sides(&x)?;
            Ok(if l != x {
                Some(format!("generator {}: (eps (x) id)Delta({}) = {l}, expected {x}", name(g), name(g)))
            } else if r != x {
                Some(format!("generator {}: (id (x) eps)Delta({}) = {r}, expected {x}", name(g), name(g)))
            } else {
                None
            })
        })?;
        checks.push(Check { name: "counit", outcome: counit });

        let coideal = first_failure(&self.relations, |r| {
            let e = self.eps_of(r)?;
            if !e.is_zero() {
                return Ok(Some(format!("relation {r}: eps = {e}, expected 0")));
            }
            let d = self.delta_of(r)?;
            Ok((!d.is_zero()).then(|| format!("relation {r}: Delta reduces to {d}, expected 0")))
        })?;
        checks.push(Check { name: "coideal", outcome: coideal });

        if self.is_hopf() {
            let hopf_ideal = first_failure(&self.relations, |r| {
                let s = self.s_of(r)?;
                Ok((!s.is_zero()).then(|| format!("relation {r}: S reduces to {s}, expected 0")))
            })?;
            checks.push(Check { name: "hopf-ideal", outcome: hopf_ideal });
            let antipode = first_failure(gens.iter().copied(), |g| {
                let x = self.generator(g);
                let expected = FreePoly::constant(&sig, self.eps_of(&x)?);
                let (right, left) = self.antipode_convolutions(&x)?;
                Ok(if right != expected {
                    Some(format!("generator {}: m(id (x) S)Delta = {right}, expected {expected}", name(g)))
                } else if left != expected {
                    Some(format!("generator {}: m(S (x) id)Delta = {left}, expected {expected}", name(g)))
                } else {
                    None
                })
            })?;
            checks.push(Check { name: "antipode", outcome: antipode });
        } else {
            for name in ["hopf-ideal", "antipode"] {
                checks.push(Check {
                    name,
                    outcome: CheckOutcome::Skipped("no antipode table".to_string()),
                });
            }
        }
        Ok(ValidationReport { checks, status: self.status() })
    }
}
