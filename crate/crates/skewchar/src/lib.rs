//! Littlewood-Richardson combinatorics for skew characters of symmetric groups.
//!
//! The crate computes LR coefficients and full skew-character decompositions by
//! lattice-word tableau enumeration, classifies multiplicity-free skew characters
//! structurally, relates skew characters to Schubert products in a rectangle, and
//! exhaustively checks which multiplicity-free skew characters coincide.
//!
//! Everything is an immutable value and every operation is a pure function, so
//! all types can be shared and sent between threads freely. With the default
//! `parallel` feature the exhaustive verification fans out over diagrams via
//! rayon; without it the same code runs sequentially and produces the identical
//! report.

pub mod equality;
mod error;
pub mod lr;
pub mod mf;
pub mod partition;
pub mod schubert;
pub mod skew;

pub use equality::{
    canonical_form, characters_equal, enumerate_basic_skew_diagrams, necessary_conditions_check,
    predict_equal_mf, predict_equal_mf_checked, staircase_conjugate_equal, trivially_equal,
    verify_main_theorem, verify_main_theorem_seq, Bounds, CanonicalForm, EqualityClass,
    VerificationReport,
};
pub use error::Error;
pub use lr::{
    enumerate_lr_tableaux, induction_product, is_lattice_word, lr_coefficient, lr_product,
    schur_monomials, skew_character, skew_character_is_mf, skew_schur_monomials, syt_count,
    syt_count_partition, Decomposition, LrTableau,
};
pub use mf::{classify_mf, is_multiplicity_free, MfReason, MfVerdict};
pub use partition::{
    partitions_in_box, partitions_of_weight, partitions_of_weight_bounded, Partition,
};
pub use schubert::{complement_in_box, duality_check, star_product, BoxSpec};
pub use skew::{PathStats, SkewDiagram};

pub type Result<T> = std::result::Result<T, Error>;
