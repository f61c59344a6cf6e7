use std::sync::Arc;

use super::HopfPresentation;
use crate::algebra::{same_ring, FreePoly, GenMap, MapMode, TensorPoly};
use crate::error::{AlgebraError, Error, Result};

/// A candidate bialgebra map between presentations, given on generators.
///
/// Construction only checks shapes; [`HopfMap::check_hopf_map`] decides
/// whether the data actually defines a (Hopf) bialgebra map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfMap {
    source: Arc<HopfPresentation>,
    target: Arc<HopfPresentation>,
    map: GenMap,
    /// Generator images in target normal form.
    images_nf: Vec<FreePoly>,
}

impl HopfMap {
    pub fn new(
        source: &Arc<HopfPresentation>,
        target: &Arc<HopfPresentation>,
        images: Vec<FreePoly>,
    ) -> Result<Self> {
        if source.signature().field() != target.signature().field() {
            return Err(Error::FieldMismatch(
                source.signature().field().to_string(),
                target.signature().field().to_string(),
            ));
        }
        let map = GenMap::new(source.signature(), target.signature(), images, MapMode::Homomorphic)?;
        let images_nf = map.images().iter().map(|p| target.normal_form(p)).collect::<Result<Vec<_>>>()?;
        Ok(HopfMap { source: source.clone(), target: target.clone(), map, images_nf })
    }

    pub fn identity(p: &Arc<HopfPresentation>) -> Self {
        Self::new(p, p, GenMap::identity(p.signature()).images().to_vec())
            .expect("identity images live in the presentation's own ring")
    }

    pub fn source(&self) -> &Arc<HopfPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HopfPresentation> {
        &self.target
    }

    pub fn gen_map(&self) -> &GenMap {
        &self.map
    }

    pub fn image(&self, g: u32) -> &FreePoly {
        self.map.image(g)
    }

    /// Generator images in target normal form.
    pub fn images_nf(&self) -> &[FreePoly] {
        &self.images_nf
    }

    /// Same source and target, and equal generator images in the target.
    pub fn agrees_with(&self, other: &HopfMap) -> bool {
        same_ring(self.source.signature(), other.source.signature())
            && same_ring(self.target.signature(), other.target.signature())
            && self.images_nf == other.images_nf
    }

    /// `φ(p)` in target normal form, normalizing after every factor.
    pub fn apply(&self, p: &FreePoly) -> Result<FreePoly> {
        if !same_ring(p.signature(), self.source.signature()) {
            return Err(AlgebraError::RingMismatch.into());
        }
        let sig = self.target.signature();
        let mut out = FreePoly::zero(sig);
        for (w, c) in p.terms() {
            let mut acc = FreePoly::one(sig);
            for &g in w.letters() {
                acc = self.target.mul(&acc, &self.images_nf[g as usize])?;
            }
            out = &out + &acc.scale(c);
        }
        Ok(out)
    }

    /// `(φ⊗φ)(t)` in target tensor normal form.
    pub fn apply_tensor(&self, t: &TensorPoly) -> Result<TensorPoly> {
        let sig = self.target.signature();
        let mut out = TensorPoly::zero(sig);
        for (u, v, c) in t.terms() {
            let fu = self.apply(&FreePoly::word(self.source.signature(), u.clone()))?;
            let fv = self.apply(&FreePoly::word(self.source.signature(), v.clone()))?;
            out = out.try_add(&TensorPoly::product(&fu, &fv)?.scale(c))?;
        }
        self.target.tensor_normal_form(&out)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &HopfMap) -> Result<HopfMap> {
        if !same_ring(inner.target.signature(), self.source.signature()) {
            return Err(Error::MapMismatch("inner map does not land in the outer map's source".into()));
        }
        let images = inner.images_nf.iter().map(|p| self.apply(p)).collect::<Result<Vec<_>>>()?;
        HopfMap::new(&inner.source, &self.target, images)
    }

    /// Every way the data fails to be a bialgebra (or Hopf) map; empty when
    /// it is one.
    pub fn defects(&self) -> Result<Vec<String>> {
        let src = &self.source;
        let tgt = &self.target;
        let mut out = Vec::new();
        for r in src.relations() {
            let image = self.apply(r)?;
            if !image.is_zero() {
                out.push(format!("relation {r} maps to {image}, not into the target ideal"));
            }
        }
        for g in 0..src.signature().len() as u32 {
            let name = src.signature().name(g);
            let x = src.generator(g);
            let fx = &self.images_nf[g as usize];
            let lhs = tgt.delta_of(fx)?;
            let rhs = self.apply_tensor(&src.delta_of(&x)?)?;
            if lhs != rhs {
                out.push(format!("generator {name}: Delta(f({name})) = {lhs}, (f (x) f)Delta({name}) = {rhs}"));
            }
            let (e_img, e_src) = (tgt.eps_of(fx)?, src.eps_of(&x)?);
            if e_img != e_src {
                out.push(format!("generator {name}: eps(f({name})) = {e_img}, eps({name}) = {e_src}"));
            }
            if src.is_hopf() && tgt.is_hopf() {
                let s_img = tgt.s_of(fx)?;
                let img_s = self.apply(&src.s_of(&x)?)?;
                if s_img != img_s {
                    out.push(format!("generator {name}: S(f({name})) = {s_img}, f(S({name})) = {img_s}"));
                }
            }
        }
        Ok(out)
    }

    /// True iff relations map into the target ideal and `Δ`, `ε` (and `S`
    /// when both sides have one) commute with the map on generators.
    pub fn check_hopf_map(&self) -> Result<bool> {
        Ok(self.defects()?.is_empty())
    }
}
