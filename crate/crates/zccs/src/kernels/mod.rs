//! Seed-sequence kernels: Barker sequences, Golay complementary pairs,
//! Hadamard families, and the end-shift tail predicates on seeds.

mod barker;
mod golay;
mod hadamard;
mod tail;

pub use barker::{
    barker, barker_lengths, barker_transform, composite_barker, is_barker, BarkerSequence,
    BarkerTransform,
};
pub use golay::{gcp, gcp_length_supported, search_binary_kernel, GolayPair};
pub use hadamard::{check_orthogonal_family, hadamard, OrthogonalFamily};
pub use tail::{tail_conditions, TailReport};
