//! Finitely presented bialgebras and Hopf algebras over exact fields.
//!
//! Elements live in the free algebra on a finite alphabet; quotients are
//! handled by degree-truncated noncommutative rewriting. On top of that the
//! crate validates bialgebra and Hopf structure generator by generator, builds
//! coproducts and coequalizers of Hopf algebras together with their induced
//! maps, and cross-checks everything against finite-dimensional
//! structure-constant tables.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod findim;
pub mod parse;
pub mod presentation;
pub mod rewrite;
pub mod scalar;
pub mod stdlib;

pub use constructions::{coequalizer, coproduct, induced_from_cocone, induced_from_coeq, Coequalizer, CoproductLabeling};
pub use algebra::{FreePoly, GenMap, MapMode, Signature, TensorPoly, Word};
pub use presentation::{HopfMap, HopfPresentation, ValidationReport};
pub use rewrite::{Confluence, Membership, RewriteSystem};
pub use findim::{solve_antipode, AntipodeSolution, Matrix, StructureTable};
pub use error::{AlgebraError, Error, ParseError, Result};
pub use scalar::{Field, Scalar};
