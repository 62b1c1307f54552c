//! Projective Reed-Muller codes and their local decoders.

pub mod codes;
pub mod error;
pub mod field;
pub mod harness;
pub mod localdec;
pub mod polynomial;
pub mod projspace;
pub mod rscodec;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
