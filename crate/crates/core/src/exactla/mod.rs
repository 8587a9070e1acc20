//! Exact linear algebra over GF(p) and the rationals.

mod field;
mod matrix;
mod poly;
mod subspace;

pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use matrix::{canonical_rows, Matrix, Rref};
pub use poly::{minimal_polynomial, proper_factor, Poly};
pub use subspace::{subspace_ops, Subspace, SubspaceReport};
