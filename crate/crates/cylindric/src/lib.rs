//! Exact combinatorics of cylindric partitions and tableaux.
//!
//! The crate computes cylindric Schur functions in two independent ways
//! (tableau enumeration and a periodic Jacobi-Trudi sum), checks the affine
//! bounded Littlewood identities as exact polynomial identities in the
//! elementary symmetric functions, and implements the lattice-path, matching
//! and growth-diagram bijections that connect cylindric standard Young
//! tableaux with vacillating tableaux and noncrossing-nonnesting matchings.
//!
//! All arithmetic is over arbitrary-precision integers (or rationals where a
//! formula demands division); nothing uses floating point.

pub mod epoly;
pub mod error;
pub mod growth;
pub mod littlewood;
pub mod partitions;
pub mod paths_h1;
pub mod tableaux;
pub mod updown;
pub mod walks_matchings;

pub use epoly::{EPoly, Matrix, Ring, XPoly};
pub use error::{Error, Result};
pub use partitions::{Partition, Width};
