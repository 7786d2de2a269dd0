//! Complex basic belief assignments (CBBAs) and the EDM evidential distance.
//!
//! A CBBA assigns a complex-valued mass to each non-empty subset of a frame
//! of discernment; the masses sum to `1+0i` and each modulus lies in `[0, 1]`.
//! Classical basic belief assignments are the real-valued special case. The
//! EDM distance compares two CBBAs through a Jaccard-weighted quadratic form
//! normalized by the summed mass moduli of both bodies of evidence; on real
//! inputs it coincides with the Jousselme distance.
//!
//! Module map:
//! - [`complex`]: the complex scalar field (rectangular and polar views).
//! - [`frame`]: frames of discernment, bit-encoded subsets, Jaccard index.
//! - [`cbba`]: validated CBBAs, complex belief/plausibility, degeneracy test.
//! - [`distance`]: the EDM distance in its three forms, similarity matrices,
//!   the Jousselme distance, pairwise distance matrices.
//! - [`document`]: the JSON file format and its validation pipeline.
//! - [`example1`], [`sweep`]: the two-element parametric family and CSV sweeps.
//! - [`oracle`]: full-power-set brute-force evaluation for cross-checking.
//! - [`generate`]: seeded random CBBAs for property suites.

pub mod cbba;
pub mod complex;
pub mod distance;
pub mod document;
pub mod example1;
pub mod frame;
pub mod generate;
pub mod oracle;
pub mod sweep;

pub use cbba::{Cbba, ValidationReport, Violation, ViolationCode};
pub use complex::Complex;
pub use distance::{
    distance_matrix, edm_distance, edm_distance_scalar_form, jousselme_distance, DistanceError,
    DistanceForm, SimilarityMatrix,
};
pub use document::{
    parse_cbba_file, parse_cbba_str, to_document, CbbaDocument, LoadError, MassRecord,
};
pub use example1::{build_example1, Theta};
pub use frame::{Frame, FrameError, SubsetMask};
pub use generate::{random_cbba, GenerateError};
pub use oracle::{brute_force_distance, OracleError};
pub use sweep::{format_significant, run_sweep, SweepError, SweepSpec, SweepTable};
