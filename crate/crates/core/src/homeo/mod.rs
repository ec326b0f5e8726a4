//! Exact engine for prefix-exchange homeomorphisms of the binary Cantor set:
//! composition, supports, regular supports, and membership in the groups
//! `G_U` of elements supported inside a clopen set.
//!
//! Product and commutator conventions match the `perm` module; conjugation is
//! `a^b = b⁻¹·a·b`, under which supports transform as
//! `supp(a^b) = b⁻¹(supp(a))`.

mod map;
mod parse;
mod support;

pub use map::{PrefixMap, DEFAULT_TABLE_BUDGET};
pub use parse::{parse_map_file, render_map_file};
pub use support::SupportDescription;
