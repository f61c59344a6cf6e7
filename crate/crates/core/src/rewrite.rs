//! Two-sided ideals of the free algebra via degree-truncated noncommutative
//! completion, normal forms, and normal-word bases of the quotient.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{same_ring, FreePoly, Signature, TensorPoly, Word};
use crate::error::{AlgebraError, Error, Result};

/// `lead => tail`, with every word of `tail` smaller than `lead`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub tail: FreePoly,
}

/// Whether completion resolved every overlap or stopped at the degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Confluence {
    Full,
    UpToDegree(usize),
}

impl fmt::Display for Confluence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Confluence::Full => write!(f, "full"),
            Confluence::UpToDegree(d) => write!(f, "up-to-degree {d}"),
        }
    }
}

/// Answer to an ideal-membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    /// The normal form is nonzero. Definitive only under [`Confluence::Full`].
    NoUpToD(Confluence),
}

/// An overlap ambiguity: `word` is covered by `left`'s lead at position 0 and
/// by `right`'s lead at position `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: Word,
    pub left: usize,
    pub right: usize,
    pub offset: usize,
}

/// An inter-reduced, monic rewriting system for a two-sided ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    sig: Arc<Signature>,
    rules: Vec<Rule>,
    bound: usize,
    status: Confluence,
    /// Rule indices keyed by the first letter of their lead.
    by_first: Vec<Vec<usize>>,
    /// A rule with empty lead: the ideal is the whole algebra.
    collapsed: bool,
}

impl RewriteSystem {
    /// Completes `relations` into a rewriting system, resolving every overlap
    /// whose word has length at most `bound`.
    pub fn complete(sig: &Arc<Signature>, relations: &[FreePoly], bound: usize) -> Result<Self> {
        for r in relations {
            if !same_ring(r.signature(), sig) {
                return Err(AlgebraError::RingMismatch.into());
            }
            match r.degree() {
                None => return Err(Error::ZeroRelation),
                Some(d) if d > bound => return Err(Error::DegreeOverflow { bound, required: d }),
                Some(_) => {}
            }
        }
        let mut sys = RewriteSystem {
            sig: sig.clone(),
            rules: Vec::new(),
            bound,
            status: Confluence::Full,
            by_first: vec![Vec::new(); sig.len()],
            collapsed: false,
        };
        let mut pending: Vec<FreePoly> = relations.to_vec();
        loop {
            sys.absorb(&mut pending);
            let mut deferred = false;
            for amb in sys.ambiguities_unbounded() {
                if amb.word.len() > bound {
                    deferred = true;
                    continue;
                }
                let s = sys.s_polynomial(&amb);
                let r = sys.reduce(s);
                if !r.is_zero() {
                    pending.push(r);
                }
            }
            if pending.is_empty() {
                sys.status = if deferred { Confluence::UpToDegree(bound) } else { Confluence::Full };
                return Ok(sys);
            }
        }
    }

    /// Adds the pending polynomials as rules, keeping the system inter-reduced.
    fn absorb(&mut self, pending: &mut Vec<FreePoly>) {
        // Smallest leading word first keeps the intermediate systems small.
        pending.sort_by(|a, b| b.leading().map(|l| l.0).cmp(&a.leading().map(|l| l.0)));
        while let Some(p) = pending.pop() {
            let r = self.reduce(p);
            let Some((lead, lc)) = r.leading() else { continue };
            let lead = lead.clone();
            let inv = lc.inverse().expect("leading coefficient is nonzero");
            let mut tail = r.scale(&inv.neg());
            tail.add_term(lead.clone(), &self.sig.one());
            let rule = Rule { lead, tail };

            let (keep, evicted): (Vec<Rule>, Vec<Rule>) =
                std::mem::take(&mut self.rules).into_iter().partition(|old| !old.lead.contains(&rule.lead));
            for old in evicted {
                let mut back = FreePoly::word(&self.sig, old.lead.clone());
                back = &back - &old.tail;
                pending.push(back);
            }
            self.rules = keep;
            self.rules.push(rule);
            self.reindex();
            let tails: Vec<FreePoly> = self.rules.iter().map(|r| self.reduce(r.tail.clone())).collect();
            for (rule, tail) in self.rules.iter_mut().zip(tails) {
                rule.tail = tail;
            }
            pending.sort_by(|a, b| b.leading().map(|l| l.0).cmp(&a.leading().map(|l| l.0)));
        }
    }

    fn reindex(&mut self) {
        self.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        self.collapsed = self.rules.iter().any(|r| r.lead.is_unit());
        self.by_first = vec![Vec::new(); self.sig.len()];
        for (i, r) in self.rules.iter().enumerate() {
            if let Some(&g) = r.lead.letters().first() {
                self.by_first[g as usize].push(i);
            }
        }
    }

    fn ambiguities_unbounded(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                let (la, lb) = (a.lead.letters(), b.lead.letters());
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] == lb[..k] {
                        out.push(Ambiguity {
                            word: a.lead.concat(&b.lead.slice(k..lb.len())),
                            left: i,
                            right: j,
                            offset: la.len() - k,
                        });
                    }
                }
            }
        }
        out
    }

    /// Overlap ambiguities whose word has length at most `max_len`.
    pub fn ambiguities(&self, max_len: usize) -> Vec<Ambiguity> {
        self.ambiguities_unbounded().into_iter().filter(|a| a.word.len() <= max_len).collect()
    }

    /// The difference of the two one-step rewrites of an ambiguity word.
    fn s_polynomial(&self, amb: &Ambiguity) -> FreePoly {
        let (left, right) = self.one_step_pair(amb);
        &left - &right
    }

    fn one_step_pair(&self, amb: &Ambiguity) -> (FreePoly, FreePoly) {
        let a = &self.rules[amb.left];
        let b = &self.rules[amb.right];
        let after_a = FreePoly::word(&self.sig, amb.word.slice(a.lead.len()..amb.word.len()));
        let before_b = FreePoly::word(&self.sig, amb.word.slice(0..amb.offset));
        (&a.tail * &after_a, &before_b * &b.tail)
    }

    /// Normal forms of both one-step rewrites of an ambiguity. Equal results
    /// witness local confluence at that overlap.
    pub fn resolve(&self, amb: &Ambiguity) -> (FreePoly, FreePoly) {
        let (l, r) = self.one_step_pair(amb);
        (self.reduce(l), self.reduce(r))
    }

    fn find_reducer(&self, w: &Word) -> Option<(usize, usize)> {
        if self.collapsed {
            return Some((0, 0));
        }
        let letters = w.letters();
        for pos in 0..letters.len() {
            for &i in &self.by_first[letters[pos] as usize] {
                if letters[pos..].starts_with(self.rules[i].lead.letters()) {
                    return Some((pos, i));
                }
            }
        }
        None
    }

    /// Rewrites the largest reducible term at its leftmost redex until no
    /// term is reducible. No degree check.
    fn reduce(&self, mut work: FreePoly) -> FreePoly {
        let mut out = FreePoly::zero(&self.sig);
        while let Some((w, c)) = work.pop_leading() {
            match self.find_reducer(&w) {
                None => out.add_term(w, &c),
                Some((pos, i)) => {
                    let rule = &self.rules[i];
                    let prefix = w.slice(0..pos);
                    let suffix = w.slice(pos + rule.lead.len()..w.len());
                    for (t, d) in rule.tail.terms() {
                        work.add_term(prefix.concat(t).concat(&suffix), &c.mul(d));
                    }
                }
            }
        }
        out
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        match self.status {
            Confluence::UpToDegree(bound) if degree > bound => {
                Err(Error::DegreeOverflow { bound, required: degree })
            }
            _ => Ok(()),
        }
    }

    /// Canonical representative of `p` modulo the ideal.
    ///
    /// Inputs above the degree bound are rejected unless the system is fully
    /// confluent, in which case normal forms are exact in every degree.
    pub fn normal_form(&self, p: &FreePoly) -> Result<FreePoly> {
        if !same_ring(p.signature(), &self.sig) {
            return Err(AlgebraError::RingMismatch.into());
        }
        self.check_degree(p.degree().unwrap_or(0))?;
        Ok(self.reduce(p.clone()))
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<FreePoly> {
        self.check_degree(w.len())?;
        Ok(self.reduce(FreePoly::word(&self.sig, w.clone())))
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_reducer(w).is_none()
    }

    /// Normal form in `(T/I) ⊗ (T/I)`, leg by leg. Zero exactly when the
    /// input lies in `I⊗T + T⊗I`.
    pub fn tensor_normal_form(&self, t: &TensorPoly) -> Result<TensorPoly> {
        if !same_ring(t.signature(), &self.sig) {
            return Err(AlgebraError::RingMismatch.into());
        }
        self.check_degree(t.leg_degree().unwrap_or(0))?;
        let mut cache: HashMap<Word, FreePoly> = HashMap::new();
        let mut nf = |w: &Word| -> FreePoly {
            cache
                .entry(w.clone())
                .or_insert_with(|| self.reduce(FreePoly::word(&self.sig, w.clone())))
                .clone()
        };
        let mut out = TensorPoly::zero(&self.sig);
        for (u, v, c) in t.terms() {
            let (left, right) = (nf(u), nf(v));
            for (a, x) in left.terms() {
                for (b, y) in right.terms() {
                    out.add_term(a.clone(), b.clone(), &c.mul(&x.mul(y)));
                }
            }
        }
        Ok(out)
    }

    /// All irreducible words of length at most `d`, in word order.
    pub fn basis_up_to_degree(&self, d: usize) -> Result<Vec<Word>> {
        self.check_degree(d)?;
        let mut out = Vec::new();
        if self.collapsed {
            return Ok(out);
        }
        let mut layer = vec![Word::unit()];
        out.push(Word::unit());
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.sig.len() as u32 {
                    let candidate = w.concat(&Word::letter(g));
                    // Every proper factor is already irreducible, so only
                    // suffixes can carry a new redex.
                    let letters = candidate.letters();
                    let reducible = self.rules.iter().any(|r| letters.ends_with(r.lead.letters()));
                    if !reducible {
                        next.push(candidate);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok(out)
    }

    pub fn ideal_contains(&self, p: &FreePoly) -> Result<Membership> {
        Ok(if self.normal_form(p)?.is_zero() {
            Membership::Yes
        } else {
            Membership::NoUpToD(self.status)
        })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn status(&self) -> Confluence {
        self.status
    }

    pub fn is_fully_confluent(&self) -> bool {
        self.status == Confluence::Full
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }
}

impl fmt::Display for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{} => {}", r.lead.render(&self.sig), r.tail)?;
        }
        writeln!(f, "confluent: {}", self.status)
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RewriteSystem {{\n{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::Field;

    fn system(names: &[&str], rels: &[&str], bound: usize) -> RewriteSystem {
        let sig = Signature::new(names.iter().copied(), Field::Rational).unwrap();
        let rels: Vec<FreePoly> = rels.iter().map(|r| parse_poly(&sig, r).unwrap()).collect();
        RewriteSystem::complete(&sig, &rels, bound).unwrap()
    }

    fn p(sys: &RewriteSystem, text: &str) -> FreePoly {
        parse_poly(sys.signature(), text).unwrap()
    }

    #[test]
    fn involution() {
        let sys = system(&["g"], &["g*g - 1"], 4);
        assert_eq!(sys.to_string(), "g*g => 1\nconfluent: full\n");
        assert_eq!(sys.normal_form(&p(&sys, "g*g*g")).unwrap(), p(&sys, "g"));
        assert_eq!(sys.ideal_contains(&p(&sys, "g*g - 1")).unwrap(), Membership::Yes);
        assert_eq!(
            sys.ideal_contains(&p(&sys, "g")).unwrap(),
            Membership::NoUpToD(Confluence::Full)
        );
    }

    #[test]
    fn commutation_rule() {
        let sys = system(&["a", "b"], &["b*a - a*b"], 4);
        assert_eq!(sys.to_string(), "b*a => a*b\nconfluent: full\n");
        assert_eq!(sys.normal_form(&p(&sys, "b*b*a")).unwrap(), p(&sys, "a*b*b"));
    }

    #[test]
    fn sweedler_relations() {
        let sys = system(&["g", "x"], &["g*g - 1", "x*x", "x*g + g*x"], 4);
        assert_eq!(sys.to_string(), "g*g => 1\nx*g => -g*x\nx*x => 0\nconfluent: full\n");
        assert!(sys.normal_form(&p(&sys, "x*g*x*g")).unwrap().is_zero());
        assert_eq!(sys.ideal_contains(&p(&sys, "x*g + g*x")).unwrap(), Membership::Yes);
        let basis: Vec<String> =
            sys.basis_up_to_degree(3).unwrap().iter().map(|w| w.render(sys.signature())).collect();
        assert_eq!(basis, ["1", "g", "x", "g*x"]);
    }

    #[test]
    fn bases() {
        let z3 = system(&["g"], &["g^3 - 1"], 4);
        assert_eq!(z3.basis_up_to_degree(3).unwrap().len(), 3);
        let free = system(&["x", "y"], &[], 4);
        assert_eq!(free.basis_up_to_degree(2).unwrap().len(), 7);
    }

    #[test]
    fn completion_derives_inverse_rule() {
        let sys = system(&["g", "h"], &["g*h - 1", "h*g - 1", "g*g - 1"], 8);
        assert_eq!(sys.to_string(), "h => g\ng*g => 1\nconfluent: full\n");
    }

    #[test]
    fn unit_relation_collapses() {
        let sys = system(&["g"], &["g*g - 1", "g - 1", "2"], 4);
        assert!(sys.normal_form(&p(&sys, "g + 3")).unwrap().is_zero());
        assert!(sys.basis_up_to_degree(3).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        let sig = Signature::new(["g"], Field::Rational).unwrap();
        let zero = FreePoly::zero(&sig);
        assert_eq!(RewriteSystem::complete(&sig, &[zero], 4), Err(Error::ZeroRelation));
        let big = parse_poly(&sig, "g^5").unwrap();
        assert_eq!(
            RewriteSystem::complete(&sig, &[big], 4),
            Err(Error::DegreeOverflow { bound: 4, required: 5 })
        );
    }

    #[test]
    fn truncated_systems_report_status_and_overflow() {
        // x*y*x - y*x*y (braid-like) does not complete finitely in deglex.
        let sys = system(&["x", "y"], &["y*x*y - x*y*x"], 6);
        assert_eq!(sys.status(), Confluence::UpToDegree(6));
        let long = p(&sys, "x^7");
        assert!(matches!(sys.normal_form(&long), Err(Error::DegreeOverflow { .. })));
        for amb in sys.ambiguities(6) {
            let (l, r) = sys.resolve(&amb);
            assert_eq!(l, r);
        }
    }
}
