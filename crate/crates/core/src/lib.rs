//! Exact computations with modules over bound quiver algebras, Galois
//! coverings by graded presentations, finitely presented functors and
//! repetitive categories.

pub mod covering;
pub mod error;
pub mod exactla;
pub mod functcat;
pub mod labels;
pub mod modcat;
pub mod par;
pub mod quiver;
pub mod repetitive;
pub mod report;
pub mod suite;

pub use error::{FoveaError, Result};
pub use exactla::{Field, Matrix, Scalar};
pub use par::Exec;
