//! Construction and verification of type-II Z-complementary code sets.
//!
//! The pipeline: take a (K,K,N) complete complementary code, Kronecker
//! each code with a unimodular seed of length P, and get a type-II
//! (K,K,NP-P+1,NP)-ZCCS. Barker seeds keep the out-of-zone correlations
//! small, Barker row weights control the column PMEPR, and orthogonal
//! families multiply the set size. Everything claimed about a constructed
//! set is checked, exactly on binary/quaternary alphabets and within an
//! explicit epsilon elsewhere.

pub mod analysis;
pub mod ccc;
pub mod code;
pub mod construct;
pub mod corr;
pub mod document;
pub mod error;
pub mod kernels;
pub mod seq;

pub use analysis::{
    column_pmepr_report, length_coverage, out_of_zone_profile, pmepr_bound, pmepr_bound_exact,
    pmepr_numeric, row_pmepr_report, set_size_bound_check, verify_zccs, SetClass,
    ZccsVerification, DEFAULT_OVERSAMPLING,
};
pub use ccc::{ccc_dft, ccc_table1, verify_ccc, CccSet, CccVerification};
pub use code::{code_accs, CodeMatrix, CodeSet, SetKind, SetParams};
pub use construct::{
    barker_weight, build_zccs, build_zcp, build_zcs, expand_set, ExternalInputs, FamilySpec,
    SeedSpec, SourceSpec, ZccsRecipe,
};
pub use corr::{
    accs, correlation_profile, fft_correlation_profile, profile_auto, CorrValue,
    CorrelationProfile, FFT_LENGTH_THRESHOLD,
};
pub use document::{parse_sign_matrix, render_sign_matrix, Provenance, SetDocument};
pub use error::{Error, Result};
pub use kernels::{
    barker, barker_transform, check_orthogonal_family, composite_barker, gcp,
    gcp_length_supported, hadamard, is_barker, tail_conditions, BarkerSequence, BarkerTransform,
    GolayPair, OrthogonalFamily, TailReport,
};
pub use seq::PhaseSequence;

/// Exact rational bounds in reports are `num_rational::Ratio<i64>`.
pub use num_rational::Ratio;
