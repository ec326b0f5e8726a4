//! Exact-computation engines for group actions on the binary Cantor set and
//! on finite point sets: clopen-set combinatorics, symmetric-group search,
//! prefix-exchange homeomorphisms, and the reconstruction of the space from
//! the algebraic structure of a group acting on it.
//!
//! Everything in this crate is exact: points are eventually periodic words,
//! sets are canonical prefix antichains, and group elements are finite
//! tables, so every verdict is a structural comparison rather than an
//! approximation.

pub mod clopen;
pub mod error;
pub mod homeo;
pub mod perm;
pub mod rubin;

pub use error::{Error, Result};
