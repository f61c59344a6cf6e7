//! Bialgebras and Hopf algebras given by generators, relations and
//! generator tables for the comultiplication, counit and antipode.
//!
//! The multiplication is concatenation modulo the relations and the unit is
//! the empty word. `Δ` and `ε` extend multiplicatively from their tables, `S`
//! extends anti-multiplicatively. Every derived value is returned in normal
//! form with respect to the presentation's rewriting system.

mod format;
mod map;
mod validate;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use format::{parse_presentation, print_map_section, print_presentation, MapFile, ParseOptions};
pub use map::HopfMap;
pub use validate::{Check, CheckOutcome, ValidationReport};

use crate::algebra::{apply_counit, same_ring, FreePoly, Signature, TensorPoly, Word};
use crate::error::{AlgebraError, Error, Result};
use crate::rewrite::{Confluence, RewriteSystem};
use crate::scalar::Scalar;

/// A finitely presented bialgebra, or Hopf algebra when an antipode table is
/// present.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfPresentation {
    sig: Arc<Signature>,
    relations: Vec<FreePoly>,
    delta: Vec<TensorPoly>,
    counit: Vec<Scalar>,
    antipode: Option<Vec<FreePoly>>,
    rewrite: RewriteSystem,
    /// `Δ(g)` in tensor normal form.
    delta_nf: Vec<TensorPoly>,
    /// `S(g)` in normal form.
    antipode_nf: Option<Vec<FreePoly>>,
}

/// `2·(max relation degree) + 4`
pub fn default_degree_bound(relations: &[FreePoly]) -> usize {
    2 * relations.iter().filter_map(FreePoly::degree).max().unwrap_or(0) + 4
}

impl HopfPresentation {
    /// Builds and completes a presentation. Tables are indexed by generator.
    pub fn new(
        sig: &Arc<Signature>,
        relations: Vec<FreePoly>,
        delta: Vec<TensorPoly>,
        counit: Vec<Scalar>,
        antipode: Option<Vec<FreePoly>>,
        degree_bound: Option<usize>,
    ) -> Result<Self> {
        let n = sig.len();
        for (table, len) in [("delta", delta.len()), ("counit", counit.len())]
            .into_iter()
            .chain(antipode.as_ref().map(|s| ("antipode", s.len())))
        {
            if len < n {
                return Err(Error::IncompleteTable(format!(
                    "{table}: no entry for generator `{}`",
                    sig.name(len as u32)
                )));
            }
            if len > n {
                return Err(Error::IncompleteTable(format!("{table}: {len} entries for {n} generators")));
            }
        }
        let foreign = relations.iter().any(|r| !same_ring(r.signature(), sig))
            || delta.iter().any(|t| !same_ring(t.signature(), sig))
            || counit.iter().any(|c| c.field() != sig.field())
            || antipode.iter().flatten().any(|s| !same_ring(s.signature(), sig));
        if foreign {
            return Err(AlgebraError::RingMismatch.into());
        }
        let bound = degree_bound.unwrap_or_else(|| default_degree_bound(&relations));
        let rewrite = RewriteSystem::complete(sig, &relations, bound)?;
        let delta_nf = delta.iter().map(|t| rewrite.tensor_normal_form(t)).collect::<Result<Vec<_>>>()?;
        let antipode_nf = antipode
            .as_ref()
            .map(|s| s.iter().map(|p| rewrite.normal_form(p)).collect::<Result<Vec<_>>>())
            .transpose()?;
        Ok(HopfPresentation {
            sig: sig.clone(),
            relations,
            delta,
            counit,
            antipode,
            rewrite,
            delta_nf,
            antipode_nf,
        })
    }

    /// The same data recompleted with another degree bound.
    pub fn with_degree_bound(&self, bound: usize) -> Result<Self> {
        Self::new(
            &self.sig,
            self.relations.clone(),
            self.delta.clone(),
            self.counit.clone(),
            self.antipode.clone(),
            Some(bound),
        )
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn relations(&self) -> &[FreePoly] {
        &self.relations
    }

    pub fn delta_table(&self) -> &[TensorPoly] {
        &self.delta
    }

    pub fn counit_table(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_table(&self) -> Option<&[FreePoly]> {
        self.antipode.as_deref()
    }

    pub fn is_hopf(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rewrite
    }

    pub fn degree_bound(&self) -> usize {
        self.rewrite.bound()
    }

    pub fn status(&self) -> Confluence {
        self.rewrite.status()
    }

    pub fn generator(&self, g: u32) -> FreePoly {
        FreePoly::generator(&self.sig, g)
    }

    pub fn normal_form(&self, p: &FreePoly) -> Result<FreePoly> {
        self.rewrite.normal_form(p)
    }

    pub fn tensor_normal_form(&self, t: &TensorPoly) -> Result<TensorPoly> {
        self.rewrite.tensor_normal_form(t)
    }

    pub fn basis_up_to_degree(&self, d: usize) -> Result<Vec<Word>> {
        self.rewrite.basis_up_to_degree(d)
    }

    /// `nf(a·b)`
    pub fn mul(&self, a: &FreePoly, b: &FreePoly) -> Result<FreePoly> {
        self.normal_form(&a.try_mul(b)?)
    }

    fn check_input(&self, p: &FreePoly) -> Result<()> {
        if same_ring(p.signature(), &self.sig) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch.into())
        }
    }

    /// `Δ(p)` in `(T/I) ⊗ (T/I)`, normalizing after every factor.
    pub fn delta_of(&self, p: &FreePoly) -> Result<TensorPoly> {
        self.check_input(p)?;
        let mut out = TensorPoly::zero(&self.sig);
        for (w, c) in p.terms() {
            let mut acc = TensorPoly::one(&self.sig);
            for &g in w.letters() {
                acc = self.tensor_normal_form(&acc.try_mul(&self.delta_nf[g as usize])?)?;
            }
            out = out.try_add(&acc.scale(c))?;
        }
        Ok(out)
    }

    pub fn eps_of(&self, p: &FreePoly) -> Result<Scalar> {
        self.check_input(p)?;
        Ok(apply_counit(&self.counit, p)?)
    }

    /// `S(p)`, extended anti-multiplicatively: `S(g1…gn) = S(gn)…S(g1)`.
    pub fn s_of(&self, p: &FreePoly) -> Result<FreePoly> {
        self.check_input(p)?;
        let table = self.antipode_nf.as_ref().ok_or(Error::MissingAntipode)?;
        let mut out = FreePoly::zero(&self.sig);
        for (w, c) in p.terms() {
            let mut acc = FreePoly::one(&self.sig);
            for &g in w.letters() {
                acc = self.mul(&table[g as usize], &acc)?;
            }
            out = &out + &acc.scale(c);
        }
        Ok(out)
    }

    /// Both convolutions `m(id⊗S)Δ(p)` and `m(S⊗id)Δ(p)`, in normal form.
    pub fn antipode_convolutions(&self, p: &FreePoly) -> Result<(FreePoly, FreePoly)> {
        if !self.is_hopf() {
            return Err(Error::MissingAntipode);
        }
        if let Confluence::UpToDegree(bound) = self.status() {
            let required = 2 * p.degree().unwrap_or(0);
            if required > bound {
                return Err(Error::DegreeOverflow { bound, required });
            }
        }
        let delta = self.delta_of(p)?;
        let mut right = FreePoly::zero(&self.sig);
        let mut left = FreePoly::zero(&self.sig);
        let mut s_cache: BTreeMap<Word, FreePoly> = BTreeMap::new();
        for (u, v, c) in delta.terms() {
            for w in [u, v] {
                if !s_cache.contains_key(w) {
                    let s = self.s_of(&FreePoly::word(&self.sig, w.clone()))?;
                    s_cache.insert(w.clone(), s);
                }
            }
            let (pu, pv) = (FreePoly::word(&self.sig, u.clone()), FreePoly::word(&self.sig, v.clone()));
            right = &right + &self.mul(&pu, &s_cache[v])?.scale(c);
            left = &left + &self.mul(&s_cache[u], &pv)?.scale(c);
        }
        Ok((right, left))
    }

    /// True iff `m(id⊗S)Δ(p) = ε(p)·1 = m(S⊗id)Δ(p)` in the quotient.
    pub fn antipode_axiom_check(&self, p: &FreePoly) -> Result<bool> {
        let (right, left) = self.antipode_convolutions(p)?;
        let expected = FreePoly::constant(&self.sig, self.eps_of(p)?);
        Ok(right == expected && left == expected)
    }

    /// Basis words `w` of length at most `d` with `Δ(w) = w⊗w` and `ε(w) = 1`.
    pub fn grouplikes(&self, d: usize) -> Result<Vec<Word>> {
        if let Confluence::UpToDegree(bound) = self.status() {
            if 2 * d > bound {
                return Err(Error::DegreeOverflow { bound, required: 2 * d });
            }
        }
        let mut out = Vec::new();
        for w in self.basis_up_to_degree(d)? {
            let p = FreePoly::word(&self.sig, w.clone());
            if !self.eps_of(&p)?.is_one() {
                continue;
            }
            let square = TensorPoly::product(&p, &p)?;
            let delta = self.delta_of(&p)?;
            if self.tensor_normal_form(&delta.try_sub(&square)?)?.is_zero() {
                out.push(w);
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for HopfPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format::print_presentation(self))
    }
}

impl std::fmt::Display for HopfPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format::print_presentation(self))
    }
}
