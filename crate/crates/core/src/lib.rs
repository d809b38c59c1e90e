//! Exact integer-shifted Stirling numbers and the moment conversions
//! built on them.
//!
//! The first-kind numbers c_{i,j,k} are the coefficients of the shifted
//! falling factorial (x-k)_i; the second-kind numbers b_{i,j,k} invert
//! them. Everything is computed over arbitrary-precision rationals:
//! tables, generating functions, the identity checker that cross-checks
//! the whole catalog of relations, and the moment maps (ordinary /
//! factorial / central) for Poisson and discrete phase-type laws.

pub mod error;
pub mod identity;
pub mod matrix;
pub mod moments;
pub mod msn;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod stirling;

pub use error::{Error, Result};
pub use identity::{
    admissible_ks, verify_all, verify_identity, IdentityFailure, IdentityName, IdentityReport,
    CATALOG,
};
pub use matrix::Matrix;
pub use moments::{
    central_from_factorial, central_from_ordinary, convert, factorial_from_central,
    factorial_from_ordinary, ordinary_from_central, ordinary_from_factorial, poisson_moments,
    tail_moment_bound, truncated_moment, MomentKind, MomentVector, PhaseType, TruncatedPmf,
};
pub use msn::{msn1_def, msn1_egf, msn1_ogf, msn2_def, Msn1Table, Msn2Table};
pub use poly::Polynomial;
pub use scalar::{format_rational, parse_rational, Integer, Rational};
pub use series::PowerSeries;
pub use stirling::{harmonic, RStirlingFirst, StirlingFirst, StirlingSecond};
