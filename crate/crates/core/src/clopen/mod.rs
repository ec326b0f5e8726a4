//! Exact combinatorics of the binary Cantor space: points as eventually
//! periodic words, clopen sets as canonical prefix antichains, and their
//! Boolean algebra.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to use from any number of threads.

mod point;
mod set;
mod word;

pub use point::CanonicalPoint;
pub use set::ClopenSet;
pub use word::{lex_cmp, Word};
