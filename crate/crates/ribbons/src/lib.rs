//! Schur supports of ribbon diagrams.
//!
//! A ribbon is a connected skew shape with no 2x2 block, determined by a
//! composition of row lengths. This crate computes the Schur support of a
//! skew shape by enumerating Littlewood-Richardson tableaux, swaps adjacent
//! ribbon row lengths with the box-ball R-matrix, decides the
//! strict-triangle sufficient condition and the `N_j` necessary condition
//! for a ribbon to keep its support under every permutation of its row
//! lengths, constructs explicit witness tableaux separating supports, and
//! brute-force checks the conjectured classification on small ribbons.
//!
//! Shapes and fillings are immutable values; every operation is a pure
//! function, so everything here is safe to share across threads.

mod conditions;
mod deadline;
mod error;
mod lr;
mod oracle;
mod partition;
mod ribbon;
mod rmatrix;
mod skew;
mod tableau;
mod weight;
mod word;

pub use conditions::{
    build_witness, check_conjecture, compute_nj, satisfies_necessary, satisfies_sufficient,
    weak_necessary, ConditionReport, ConjectureCheck, ConjectureOutcome, JRecord,
    WitnessCertificate,
};
pub use deadline::Deadline;
pub use error::{Error, Result};
pub use lr::{
    contains_content, contains_content_within, enumerate_lr_tableaux, has_full_equivalence_class,
    has_full_equivalence_class_within, lr_coefficient, support, support_difference,
    support_within, supports_equal, LrCount, LrTableaux, SupportSet,
};
pub use oracle::{support_oracle, support_oracle_with_limit, DEFAULT_ORACLE_LIMIT};
pub use partition::{partitions_of, Partition};
pub use ribbon::{Composition, RibbonShape};
pub use rmatrix::{box_ball_pairing, rmatrix_swap, swap_to_lr, BoxBallState};
pub use skew::SkewShape;
pub use tableau::Tableau;
pub use weight::Weight;
pub use word::{is_yamanouchi, Word};
