//! Exact finite-group engine: symmetric-group arithmetic and the fully
//! quantified algebraic-disjointness decision procedure.
//!
//! Conventions, fixed once for the whole workspace:
//! - products compose right-to-left, `(a·b)(x) = a(b(x))`;
//! - the commutator is `[a,b] = a·b·a⁻¹·b⁻¹`, so `[a,b] = a·(b a⁻¹ b⁻¹)`;
//! - conjugation is `a^b = b⁻¹·a·b`.

mod algdisj;
mod perm;

pub use algdisj::{is_alg_disjoint, AlgDisjointReport, MAX_EXHAUSTIVE_DEGREE};
pub use perm::{Perm, SymmetricGroup};
