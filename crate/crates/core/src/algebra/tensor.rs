use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::poly::write_signed_term;
use super::{same_ring, FreePoly, Signature, Word};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// An element of `T(V) ⊗ T(V)`: a linear combination of word pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    sig: Arc<Signature>,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        TensorPoly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1`
    pub fn one(sig: &Arc<Signature>) -> Self {
        let mut t = Self::zero(sig);
        t.add_term(Word::unit(), Word::unit(), &sig.one());
        t
    }

    /// `p ⊗ q`, expanded bilinearly.
    pub fn product(p: &FreePoly, q: &FreePoly) -> Result<Self, AlgebraError> {
        if !same_ring(p.signature(), q.signature()) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut t = Self::zero(p.signature());
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                t.add_term(u.clone(), v.clone(), &a.mul(b));
            }
        }
        Ok(t)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Scalar)> + '_ {
        self.terms.iter().map(|((u, v), c)| (u, v, c))
    }

    /// Largest total degree `|u| + |v|` over the terms.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|(u, v)| u.len() + v.len()).max()
    }

    /// Largest single-leg degree.
    pub fn leg_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(u, v)| u.len().max(v.len())).max()
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &TensorPoly) -> Result<TensorPoly, AlgebraError> {
        if !same_ring(&self.sig, &other.sig) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TensorPoly) -> Result<TensorPoly, AlgebraError> {
        self.try_add(&other.scale(&self.sig.one().neg()))
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn try_mul(&self, other: &TensorPoly) -> Result<TensorPoly, AlgebraError> {
        if !same_ring(&self.sig, &other.sig) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut out = TensorPoly::zero(&self.sig);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), &x.mul(y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut out = TensorPoly::zero(&self.sig);
        for ((u, v), a) in &self.terms {
            out.add_term(u.clone(), v.clone(), &a.mul(c));
        }
        out
    }

    /// The flip `u⊗v ↦ v⊗u`.
    pub fn swap(&self) -> TensorPoly {
        let mut out = TensorPoly::zero(&self.sig);
        for ((u, v), c) in &self.terms {
            out.add_term(v.clone(), u.clone(), c);
        }
        out
    }

    pub fn rename(&self, target: &Arc<Signature>, rename: &[u32]) -> TensorPoly {
        let map = |w: &Word| Word::from(w.letters().iter().map(|&g| rename[g as usize]).collect::<Vec<_>>());
        let mut out = TensorPoly::zero(target);
        for ((u, v), c) in &self.terms {
            out.add_term(map(u), map(v), c);
        }
        out
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((u, v), c)) in self.terms.iter().enumerate() {
            // The coefficient attaches to the left leg; a unit left leg keeps
            // an explicit `1` so the separator always has an operand.
            let body = format!("{} (#) {}", u.render(&self.sig), v.render(&self.sig));
            if u.is_unit() {
                let magnitude = if c.is_negative() { c.neg() } else { c.clone() };
                let sign = match (i == 0, c.is_negative()) {
                    (true, true) => "-",
                    (true, false) => "",
                    (false, true) => " - ",
                    (false, false) => " + ",
                };
                write!(f, "{sign}{magnitude} (#) {}", v.render(&self.sig))?;
            } else {
                write_signed_term(f, i == 0, c, &body, false)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn swap_is_involutive() {
        let sig = Signature::new(["g", "x"], Field::Rational).unwrap();
        let x = FreePoly::generator(&sig, 1);
        let g = FreePoly::generator(&sig, 0);
        let t = TensorPoly::product(&x, &FreePoly::one(&sig))
            .unwrap()
            .try_add(&TensorPoly::product(&g, &x).unwrap())
            .unwrap();
        assert_eq!(t.swap().swap(), t);
        assert_ne!(t.swap(), t);
    }
}
