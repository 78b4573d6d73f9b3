//! Exact computations with centers, radicals, socles and Reynolds ideals of
//! finite-dimensional associative algebras over finite fields and the rationals.

// Structure-constant code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod expr;
pub mod field;
pub mod linalg;
pub mod paperlab;
pub mod substructures;
pub mod symform;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use field::{Elem, Field, FieldScalar};
pub use linalg::{Matrix, Subspace};
