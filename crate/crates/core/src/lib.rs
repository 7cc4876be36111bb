//! Multiplicity sequences of homogeneous ideals.
//!
//! The crate computes the bigraded multiplicity sequence `c_0, ..., c_d` of an
//! ideal in a standard graded ring `k[x]/A`, derived invariants (height,
//! analytic spread, j-multiplicity, Hilbert–Samuel multiplicity), decides
//! integral dependence of nested ideals by comparing sequences, and computes
//! Stückrad–Vogel intersection degrees.

pub mod blowup;
pub mod dependence;
pub mod error;
pub mod groebner;
pub mod io;
pub mod kernel;
pub mod multseq;
pub mod sv;

pub use error::{Error, Result};
