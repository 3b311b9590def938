//! Exact arithmetic in `Q` and in the real fields `Q(2cos(π/m))` used for
//! non-crystallographic root systems, plus the linear algebra built on it.

mod field;
pub mod linalg;
pub mod poly;
mod scalar;

pub use field::{minpoly_2cos, Field, FieldKind, FieldSpec, MAX_COS_ORDER};
pub use linalg::{kernel, proportional, Matrix, Vector};
pub use scalar::{field_arith, ArithOp, Scalar};
