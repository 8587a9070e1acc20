//! Modules over bound quiver algebras: homs, decomposition, radicals and
//! almost split maps.

mod algebra;
mod almost;
mod ar;
mod decompose;
mod enumerate;
mod hom;
mod module;

pub use algebra::{Algebra, DEFAULT_SEED};
pub use almost::{
    factors_through, irr_space, right_almost_split, IrrSpace, RadTable, RightAlmostSplit,
};
pub use ar::{
    almost_split_sequence, injective_vertex, projective_cover, projective_vertex, syzygy, tau,
    tau_inverse, top_generators, transpose, yoneda_map, yoneda_matrix, AlmostSplitSequence,
    ProjectiveCover,
};
pub use decompose::{
    are_isomorphic, decompose, is_indecomposable, iso_witness, isomorphic_indecomposables,
    Decomposition, Summand,
};
pub use enumerate::{enumerate_indecomposables, Enumeration, DEFAULT_COUNT_CAP, DEFAULT_DIM_CAP};
pub use hom::{hom_coordinates, hom_dim, hom_space, map_factor, radical_hom, Factorization};
pub(crate) use module::same_base;
pub use module::{direct_sum, matrix_text, parse_matrix, ModMap, Module};
