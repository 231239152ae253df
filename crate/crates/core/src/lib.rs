//! Geometry descriptors for supersingular loci of unitary Shimura varieties
//! `GU(V)` with `dim V = m <= 4`, at an odd prime that splits completely in
//! the totally real field and stays unramified in the CM field.
//!
//! The crate is split along the way the computation is assembled:
//!
//! * [`model`] holds the input data (places, signatures, the prime) and the
//!   validation rules every other module relies on.
//! * [`local_geometry`] is the row table describing each local Rapoport-Zink
//!   factor: emptiness, dimension, component variety and incidence constants.
//! * [`decomposition`] multiplies local factors into the geometry of the full
//!   Rapoport-Zink space and of the supersingular locus, and counts
//!   intersecting components.
//! * [`oracle`] rebuilds the incidence constants that finite geometry can see
//!   by brute force over `GF(p^2)` and diffs them against the table.
//!
//! All counts are exact [`BigUint`](num_bigint::BigUint)s. The crate is
//! `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod count;
pub mod decomposition;
pub mod local_geometry;
pub mod model;
pub mod oracle;

pub use count::Count;
pub use decomposition::{
    neighbor_count_per_class, neighbor_count_per_pattern, rz_geometry, shimura_ss_geometry,
    ClassEntry, ComponentProfile, DecompositionError, GlobalGeometry, GlobalStatus,
    IntersectionClass, IntersectionPattern, ReportLevel,
};
pub use local_geometry::{
    local_factor_geometry, quasi_isogeny_height, ComponentVariety, IncidenceFormula, LocalGeometry,
    LocalStatus, LocalTable, Relation,
};
pub use model::{
    localize_signatures, validate_spec, GlobalSpec, PlaceSpec, PolarizationIndex,
    SignatureMatching, SignaturePair, SpecViolation, SplittingType,
};
