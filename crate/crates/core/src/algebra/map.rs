use std::sync::Arc;

use super::{same_ring, FreePoly, Signature, TensorPoly, Word};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// How a generator table extends to words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapMode {
    /// `φ(uv) = φ(u)φ(v)`
    Homomorphic,
    /// `φ(uv) = φ(v)φ(u)`, i.e. an algebra map into the opposite algebra.
    AntiHomomorphic,
}

impl MapMode {
    pub fn compose(self, inner: MapMode) -> MapMode {
        if self == inner {
            MapMode::Homomorphic
        } else {
            MapMode::AntiHomomorphic
        }
    }
}

/// A map of free algebras determined by its values on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMap {
    source: Arc<Signature>,
    target: Arc<Signature>,
    images: Vec<FreePoly>,
    mode: MapMode,
}

impl GenMap {
    pub fn new(
        source: &Arc<Signature>,
        target: &Arc<Signature>,
        images: Vec<FreePoly>,
        mode: MapMode,
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.len() {
            return Err(AlgebraError::ImageCount { expected: source.len(), found: images.len() });
        }
        if source.field() != target.field() {
            return Err(AlgebraError::RingMismatch);
        }
        if images.iter().any(|p| !same_ring(p.signature(), target)) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(GenMap { source: source.clone(), target: target.clone(), images, mode })
    }

    pub fn identity(sig: &Arc<Signature>) -> Self {
        let images = (0..sig.len() as u32).map(|g| FreePoly::generator(sig, g)).collect();
        GenMap { source: sig.clone(), target: sig.clone(), images, mode: MapMode::Homomorphic }
    }

    pub fn source(&self) -> &Arc<Signature> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Signature> {
        &self.target
    }

    pub fn mode(&self) -> MapMode {
        self.mode
    }

    pub fn images(&self) -> &[FreePoly] {
        &self.images
    }

    pub fn image(&self, g: u32) -> &FreePoly {
        &self.images[g as usize]
    }

    /// Linear extension over words, multiplicative or anti-multiplicative
    /// according to the mode. The unit maps to the unit.
    pub fn apply(&self, p: &FreePoly) -> Result<FreePoly, AlgebraError> {
        if !same_ring(p.signature(), &self.source) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut out = FreePoly::zero(&self.target);
        for (w, c) in p.terms() {
            let image = self.apply_word(w);
            for (v, a) in image.terms() {
                out.add_term(v.clone(), &a.mul(c));
            }
        }
        Ok(out)
    }

    pub fn apply_word(&self, w: &Word) -> FreePoly {
        let mut acc = FreePoly::one(&self.target);
        for &g in w.letters() {
            let img = &self.images[g as usize];
            acc = match self.mode {
                MapMode::Homomorphic => &acc * img,
                MapMode::AntiHomomorphic => img * &acc,
            };
        }
        acc
    }

    /// `self ∘ inner`, defined on `inner`'s source.
    pub fn compose(&self, inner: &GenMap) -> Result<GenMap, AlgebraError> {
        if !same_ring(inner.target(), &self.source) {
            return Err(AlgebraError::RingMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|p| self.apply(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GenMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
            mode: self.mode.compose(inner.mode),
        })
    }
}

/// Multiplicative extension of a comultiplication table: `Δ(g1…gn) = Δ(g1)⋯Δ(gn)`.
pub fn apply_tensor_map(table: &[TensorPoly], p: &FreePoly) -> Result<TensorPoly, AlgebraError> {
    let sig = p.signature();
    let mut out = TensorPoly::zero(sig);
    for (w, c) in p.terms() {
        let mut acc = TensorPoly::one(sig);
        for &g in w.letters() {
            let entry = table
                .get(g as usize)
                .ok_or_else(|| AlgebraError::MissingEntry(sig.name(g).to_string()))?;
            acc = acc.try_mul(entry)?;
        }
        out = out.try_add(&acc.scale(c))?;
    }
    Ok(out)
}

/// Multiplicative extension of a counit table: `ε(g1…gn) = ∏ ε(gi)`.
pub fn apply_counit(table: &[Scalar], p: &FreePoly) -> Result<Scalar, AlgebraError> {
    let sig = p.signature();
    let mut total = sig.zero();
    for (w, c) in p.terms() {
        let mut acc = c.clone();
        for &g in w.letters() {
            let e = table
                .get(g as usize)
                .ok_or_else(|| AlgebraError::MissingEntry(sig.name(g).to_string()))?;
            acc = acc.mul(e);
        }
        total += &acc;
    }
    Ok(total)
}
