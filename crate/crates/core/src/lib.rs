//! Exact construction and verification of Poisson-type algebras and their
//! nonabelian-split refinements.
//!
//! All arithmetic is over exact rationals and every identity is checked on
//! every tuple of basis elements. A failed identity yields the
//! lexicographically smallest failing tuple with both sides evaluated.

pub mod cocycles;
pub mod deformations;
pub mod error;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod operators;
pub mod product;
pub mod report;
pub mod scalar;
pub mod structures;

pub use error::{Error, Result};
pub use linalg::{Matrix, Space, Subspace, Vector};
pub use product::{Product, Symmetry};
pub use report::{Counterexample, IdentityResult, Status, VerificationReport};
pub use scalar::Scalar;
pub use structures::{verify_structure, Kind, Presentation, Slot};
