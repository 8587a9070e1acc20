//! Finitely presented functors on module categories, their transfer along
//! the covering and along convex subcategories, and finite length.

mod cover;
mod functor;
mod kg;
mod restrict;

pub use cover::{
    epi_certificate, fp_hom_cover, functor_length_cover, phi_epi_cover, phi_hom_identity,
    psi_evaluate, simple_functor_cover, trim_functor, twist_changes_profile, twisted_eval_sum,
    window_indecomposables, CoverLength, EpiCover, LayeredFunctor,
};
pub use functor::{fp_hom, simple_functor, Evaluation, FpFunctor, FunctorMap, LengthCertificate};
pub use kg::{complete_list, kg_level0_base, kg_level0_pair, Caps, KG_ZERO, UNDECIDABLE};
pub use restrict::Restriction;
