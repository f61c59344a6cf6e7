use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{same_ring, Signature, Word};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// A noncommutative polynomial: a finite linear combination of words.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements of the free algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct FreePoly {
    sig: Arc<Signature>,
    terms: BTreeMap<Word, Scalar>,
}

impl FreePoly {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        FreePoly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Arc<Signature>) -> Self {
        Self::monomial(sig, Word::unit(), sig.one())
    }

    pub fn constant(sig: &Arc<Signature>, c: Scalar) -> Self {
        Self::monomial(sig, Word::unit(), c)
    }

    pub fn monomial(sig: &Arc<Signature>, word: Word, c: Scalar) -> Self {
        let mut p = Self::zero(sig);
        p.add_term(word, &c);
        p
    }

    pub fn word(sig: &Arc<Signature>, word: Word) -> Self {
        Self::monomial(sig, word, sig.one())
    }

    pub fn generator(sig: &Arc<Signature>, g: u32) -> Self {
        Self::word(sig, Word::letter(g))
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

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.sig.zero())
    }

    /// Largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.last_key_value()
    }

    /// Length of the longest word; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Adds `c·w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    fn check(&self, other: &FreePoly) -> Result<(), AlgebraError> {
        if same_ring(&self.sig, &other.sig) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &FreePoly) -> Result<FreePoly, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &FreePoly) -> Result<FreePoly, AlgebraError> {
        self.try_add(&other.neg())
    }

    /// Noncommutative product: concatenation on words, bilinear on sums.
    pub fn try_mul(&self, other: &FreePoly) -> Result<FreePoly, AlgebraError> {
        self.check(other)?;
        let mut out = FreePoly::zero(&self.sig);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero(&self.sig);
        }
        FreePoly {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a.neg())).collect(),
        }
    }

    /// The same coefficients reinterpreted over another signature with the
    /// same field; generator `i` becomes `rename[i]`.
    pub fn rename(&self, target: &Arc<Signature>, rename: &[u32]) -> FreePoly {
        let mut out = FreePoly::zero(target);
        for (w, c) in &self.terms {
            let letters: Vec<u32> = w.letters().iter().map(|&g| rename[g as usize]).collect();
            out.add_term(Word::from(letters), c);
        }
        out
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            write_signed_term(f, i == 0, c, &w.render(&self.sig), w.is_unit())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreePoly({self})")
    }
}

/// Writes `± c*body` with the conventions shared by polynomials and tensors.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Scalar,
    body: &str,
    body_is_unit: bool,
) -> fmt::Result {
    let (negative, magnitude) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if magnitude.is_one() {
        write!(f, "{body}")
    } else if body_is_unit {
        write!(f, "{magnitude}")
    } else {
        write!(f, "{magnitude}*{body}")
    }
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        self.try_mul(rhs).expect("ring mismatch in polynomial product")
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        FreePoly::neg(self)
    }
}
