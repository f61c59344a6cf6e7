//! The free (tensor) algebra on a finite alphabet: words, noncommutative
//! polynomials, elements of `T(V) ⊗ T(V)`, and maps defined on generators.

mod map;
mod poly;
mod tensor;
mod word;

use std::sync::Arc;

pub use map::{apply_counit, apply_tensor_map, GenMap, MapMode};
pub use poly::FreePoly;
pub use tensor::TensorPoly;
pub use word::Word;

use crate::error::AlgebraError;
use crate::scalar::{Field, Scalar};

/// An ordered generator alphabet together with the base field.
///
/// Generator order is the declaration order; it drives the degree-lexicographic
/// word order used everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    names: Vec<String>,
    field: Field,
}

impl Signature {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        field: Field,
    ) -> Result<Arc<Self>, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(AlgebraError::UnknownGenerator(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(AlgebraError::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Arc::new(Signature { names, field }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: u32) -> &str {
        &self.names[index as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn zero(&self) -> Scalar {
        self.field.zero()
    }

    pub fn one(&self) -> Scalar {
        self.field.one()
    }

    /// Same alphabet in a different field.
    pub fn with_field(&self, field: Field) -> Arc<Self> {
        Arc::new(Signature { names: self.names.clone(), field })
    }
}

pub(crate) fn same_ring(a: &Arc<Signature>, b: &Arc<Signature>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Generator names: a letter or `_`, then letters, digits, `_`, `'` or `@`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(is_identifier_continue)
}

pub(crate) fn is_identifier_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\'' || c == '@'
}
