//! Bound quivers, path bases and graded presentations of coverings.

mod bound;
mod paths;
mod voltage;

pub use bound::{
    longest_path, parse_bound_quiver, parse_quiver_file, Arrow, BoundQuiver, Path, QuiverFile,
    Relation,
};
pub(crate) use paths::unit;
pub use paths::{
    check_admissible, is_convex, is_convex_indices, path_basis, path_basis_with_cap,
    AdmissibilityReport, HomSpace, PathBasis, DEFAULT_PATH_CAP,
};
pub use voltage::{lift_cyclic, lift_window, window_arrows, VoltageQuiver, Window};
