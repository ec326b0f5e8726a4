//! The reconstruction pipeline: constructive witnesses tying algebraic
//! disjointness to disjoint supports, the sampled centralizer
//! characterization of the groups `G_U`, the truncated poset of regular
//! supports, ultrafilter convergence and orbit coverage, assembly of the
//! reconstructed space with its equivariance checks, and the exact verifier
//! for the first-digit-flip construction.

mod appendix;
mod ball;
mod coverage;
mod gens;
mod poset;
mod profile;
mod reconstruct;
mod search;
mod witness;

pub use appendix::{appendix_verify, AppendixChecks, AppendixReport};
pub use ball::{BallEntry, WordBall, DEFAULT_BALL_BUDGET};
pub use coverage::{orbit_coverage, orbit_coverage_with_ball, CoverageOutcome, CoverageWitness};
pub use gens::GeneratorSet;
pub use poset::{PosetRd, MAX_ENUMERABLE_DEPTH, MAX_POSET_DEPTH};
pub use profile::{
    converges_in, searrow_profile, searrow_profile_cylinders, ProfileBasis, SearrowProfile,
    UltrafilterChain,
};
pub use reconstruct::{reconstruct, ReconstructedSpace};
pub use search::{cylinders_inside, search_cylinder, DEFAULT_SEARCH_DEPTH_CAP};
pub use witness::{
    bounded_alg_disjoint_probe, construct_f1_f2, construct_noncommuting_g12, construct_refuter,
    disjoint_supports, gu_inclusion_witness, gu_membership_via_sf, order_witness,
    random_element_in, random_nontrivial_in, random_tree_pair_in, sample_sf, F1F2Witness,
    InclusionAnswer, NonCommutingWitness, ProbeEntry, ProbeReport, RefuterWitness, SfMembership,
    WitnessSource,
};
