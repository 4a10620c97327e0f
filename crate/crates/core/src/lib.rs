//! Mapping classes of punctured surfaces that extend over a handlebody with
//! trivial arcs, computed through their action on free groups.
//!
//! Mapping classes of the genus-`g` surface with `2n` punctures are stored as
//! automorphisms of the free fundamental group together with the induced
//! puncture permutation. On top of that sit the generator catalog, the
//! projections to signed permutations, the Hilden map into motion groups of
//! unlinks, and presentations and homology of generalized plat closures.

pub mod catalog;
pub mod endo;
pub mod error;
mod frame;
pub mod generators;
pub mod motion;
pub mod plat;
pub mod projections;
pub mod snf;
pub mod surface;
pub mod word;

pub use catalog::{evaluate, generator, relation_suite, RelationReport};
pub use endo::{FreeAutomorphism, FreeEndomorphism};
pub use error::{Error, Result};
pub use generators::{GeneratorName, GeneratorWord};
pub use motion::{goldsmith, hilden_map, order_probe, MotionAutomorphism, MotionGenerator};
pub use plat::{
    abelianization, coset_equivalence_check, plat_presentation, tietze_simplify, GroupPresentation, PSI_S3,
};
pub use projections::{is_pure, kernel_omega_necessary, puncture_perm, signed_decompose, SignedPermutation};
pub use snf::{smith_normal_form, AbelianGroup, IntegerMatrix, SnfResult};
pub use surface::{make_config, MappingClassElement, PuncturePermutation, SurfaceConfig, ValidationReport};
pub use word::{Alphabet, FreeWord, Symbol};

/// Exact integer matrices used for homology.
pub type BigMatrix = IntegerMatrix<num_bigint::BigInt>;
/// Smith normal form over arbitrary-precision integers.
pub type BigSnf = SnfResult<num_bigint::BigInt>;
/// Small integer matrices, such as the action on surface homology.
pub type SmallMatrix = IntegerMatrix<i64>;
