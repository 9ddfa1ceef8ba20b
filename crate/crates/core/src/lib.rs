//! Exact computation and verification of Eulerian polynomials of Coxeter
//! types A, B, and D, together with their restricted (fixed last entry) and
//! half (fixed last-entry sign) variants.
//!
//! Everything is computed twice: once by brute-force enumeration of the
//! underlying permutation family and once through closed forms and
//! recurrences. The [`verify`] module compares the routes by exact
//! big-integer coefficient equality, and [`bijections`] implements the maps
//! underlying the identities as invertible transformations.

pub mod bijections;
pub mod comb;
pub mod enumerate;
pub mod eulerian;
pub mod poly;
pub mod verify;
pub mod word;

pub use enumerate::{FamilyKind, FamilySpec, Sign};
pub use eulerian::{Context, EnumCaps, EulerianError};
pub use poly::IntPolynomial;
pub use verify::{run_all, run_identity, Report, Status};
pub use word::{GroundSet, Word};
