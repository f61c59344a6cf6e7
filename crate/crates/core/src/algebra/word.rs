use std::cmp::Ordering;
use std::fmt::Write as _;

use super::Signature;

/// A monomial of the free algebra: a sequence of generator indices.
///
/// The empty word is the unit. Words are ordered degree-lexicographically,
/// comparing generators by declaration index within a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<u32>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(g: u32) -> Self {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Position of the leftmost occurrence of `needle` as a factor.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        if needle.0.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - needle.0.len()).find(|&i| self.0[i..].starts_with(&needle.0))
    }

    pub fn contains(&self, needle: &Word) -> bool {
        self.find(needle).is_some()
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// `*`-separated generator names, or `1` for the unit.
    pub fn render(&self, sig: &Signature) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, &g) in self.0.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            let _ = write!(out, "{}", sig.name(g));
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::from_letters(vec![1]);
        let b = Word::from_letters(vec![0, 0]);
        let c = Word::from_letters(vec![0, 1]);
        assert!(Word::unit() < a);
        assert!(a < b, "shorter words come first");
        assert!(b < c);
    }

    #[test]
    fn factor_search() {
        let w = Word::from_letters(vec![0, 1, 0, 1]);
        assert_eq!(w.find(&Word::from_letters(vec![1, 0])), Some(1));
        assert_eq!(w.find(&Word::from_letters(vec![1, 1])), None);
        assert_eq!(w.find(&Word::unit()), Some(0));
    }
}
