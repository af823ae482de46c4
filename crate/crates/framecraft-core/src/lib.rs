//! Frame theory for unitary representations of finite groups: Fourier and
//! Zak transforms, bracket maps, frame bounds, invariant-subspace
//! classification, and frame synthesis.

pub mod bracket;
pub mod error;
pub mod fourier;
pub mod frame;
pub mod group;
pub mod io;
pub mod linalg;
pub mod multigen;
pub mod repr;
pub mod synth;
pub mod tol;
pub mod zak;

pub use bracket::{
    bracket, cyclic_isometry_image, embed_into_regular_model, is_cyclic, matrix_element,
    BracketValue, CyclicityReport, RegularModelEmbedding, RepVector,
};
pub use error::{Error, Result};
pub use frame::{
    canonical_dual, canonical_tight, frame_bounds_single, frame_operator, gramian_blocks,
    gramian_oracle, isotypical_frame_check, two_transitive_tightness, FrameReport, GramianBlocks,
    IsotypicalCheck, TwoTransitiveReport,
};
pub use fourier::{
    fourier, inverse_fourier, is_positive_type, FourierCoefficients, GroupFunction,
    PositiveTypeReport,
};
pub use group::{
    CosetDecomposition, FiniteGroup, GroupAction, GroupSpec, SubgroupEmbedding,
};
pub use linalg::{C64, CMat, CVec};
pub use multigen::{
    assemble_rep, canonical_decomposition_general, multigen_frame_bounds, multigen_from_vectors,
    multigen_gramian_oracle, multigen_isotypical_check, riesz_row_bounds, GeneralComponent,
    MultiGenIsotypical, MultiGenSpec, RieszReport, RieszRow,
};
pub use repr::{
    builtin_irrep_table, validate_irrep_table, validate_rep_matrices, Character, DihedralBasis,
    IrrepTable, RepReport, TableReport, UnitaryRep,
};
pub use synth::{
    admits_k_frame, harmonic_frame, parseval_generator, permutation_frame_generator, FrameMatrix,
    IrrepMultiplicity, KFrameVerdict, RankSelection,
};
pub use tol::Tolerances;
pub use zak::{
    canonical_decomposition, fiber_singular_values, generated_range_function, inverse_zak,
    membership, translates_frame_bounds, translates_gramian_oracle, zak, IrreducibleComponent,
    LtwoG, MembershipReport, RangeFunction, ZakCoefficients,
};
