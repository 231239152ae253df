//! Brute-force finite hermitian geometry over `GF(p^2)`.
//!
//! Over `GF(p^2)` the Fermat equation `sum x_i^{p+1} = 0` is the isotropy
//! condition of the standard hermitian form, so its rational points and the
//! lines it contains are finite objects that can be enumerated outright.
//! [`verify::verify_counts`] compares those enumerations with the incidence
//! constants of the local table.

use core::fmt;

pub mod field;
pub mod projective;
pub mod verify;

pub use field::{Fp2, FqSquared};
pub use projective::{
    count_projective_points, fermat_point_count, for_each_line, for_each_projective_point,
    hermitian_form, line_census, line_census_part, lines_on_fermat_surface, FermatForm, LineCensus,
    ProjectiveLine, ProjectivePoint,
};
pub use verify::{
    verify_against, verify_counts, verify_counts_with_table, Check, CheckKind, VerificationReport,
    DEFAULT_MAX_P,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    NotAnOddPrime { p: u64 },
    BoundExceeded { p: u64, max_p: u64 },
    UnsupportedVars { vars: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotAnOddPrime { p } => write!(f, "NotAnOddPrime: {p} is not an odd prime"),
            OracleError::BoundExceeded { p, max_p } => write!(
                f,
                "BoundExceeded: p = {p} is above the enumeration bound {max_p} (raise it with --max-p)"
            ),
            OracleError::UnsupportedVars { vars } => {
                write!(f, "UnsupportedVars: Fermat hypersurfaces are built in 3 or 4 variables, not {vars}")
            }
        }
    }
}
