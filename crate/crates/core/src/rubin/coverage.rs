use super::ball::WordBall;
use super::gens::GeneratorSet;
use super::poset::{PosetRd, MAX_ENUMERABLE_DEPTH};
use crate::clopen::{CanonicalPoint, ClopenSet, Word};
use crate::error::{Error, Result};

/// One covered target: an element `W` of the truncated poset below the
/// chosen cylinder, together with a ball element `h ∈ G_U` with `h(p) ∈ W`
/// (equivalently `h⁻¹(W)` belongs to the point's ultrafilter).
#[derive(Clone, Debug)]
pub struct CoverageWitness {
    pub target: ClopenSet,
    pub mover: crate::homeo::PrefixMap,
}

/// Outcome of the bounded orbit-coverage search.
#[derive(Clone, Debug)]
pub struct CoverageOutcome {
    /// True iff some cylinder `V ⊆ U` had every poset element below it (at
    /// the truncation depth) witnessed. A false result is evidence within
    /// the reported bounds, not a proof.
    pub covered: bool,
    pub chosen_cylinder: Option<Word>,
    /// Witness map for the chosen cylinder, in enumeration order of targets.
    pub witnesses: Vec<CoverageWitness>,
    pub ball_size: usize,
    pub ball_truncated: bool,
}

/// Decides, within bounds, whether the orbit of the point's ultrafilter
/// under `G_U` contains all of the truncated poset below some cylinder
/// `V ⊆ U`. Candidate cylinders are tried shortlex-first; for each target
/// `W` the word ball is scanned in enumeration order and the first mover
/// `h ∈ G_U` with `h(p) ∈ W` is recorded.
pub fn orbit_coverage(
    p: &CanonicalPoint,
    u: &ClopenSet,
    gens: &GeneratorSet,
    radius: u32,
    depth: usize,
    ball_budget: usize,
) -> Result<CoverageOutcome> {
    let ball = WordBall::build(gens, radius, ball_budget);
    orbit_coverage_with_ball(p, u, &ball, depth)
}

/// Same search against a prebuilt ball, so batches can share enumeration.
pub fn orbit_coverage_with_ball(
    p: &CanonicalPoint,
    u: &ClopenSet,
    ball: &WordBall,
    depth: usize,
) -> Result<CoverageOutcome> {
    if depth > MAX_ENUMERABLE_DEPTH {
        return Err(Error::DepthRange { depth, min: 1, max: MAX_ENUMERABLE_DEPTH });
    }
    let poset = PosetRd::new(depth)?;
    if !poset.contains(u) {
        return Err(Error::Precondition(format!(
            "{u} is not an element of the depth-{depth} poset"
        )));
    }

    // Ball elements lying in G_U, with their images of p precomputed.
    let movers: Vec<(usize, CanonicalPoint)> = ball
        .supported_in(u)
        .into_iter()
        .map(|i| {
            let q = ball.entries[i].map.apply(p);
            (i, q)
        })
        .collect();

    // Candidate cylinders V ⊆ U, whole-space first when U is everything.
    let mut candidates: Vec<Word> = Vec::new();
    for len in 0..=depth {
        for w in super::search::cylinders_inside(u, len) {
            candidates.push(w);
        }
    }

    for v in candidates {
        let leaves = v.extensions(depth - v.len());
        let mut witnesses = Vec::new();
        let mut all_found = true;
        for mask in 1u32..(1u32 << leaves.len()) {
            let target = ClopenSet::from_words(
                leaves
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, w)| w.clone())
                    .collect(),
            );
            match movers.iter().find(|(_, q)| target.contains_point(q)) {
                Some((i, _)) => witnesses.push(CoverageWitness {
                    target,
                    mover: ball.entries[*i].map.clone(),
                }),
                None => {
                    all_found = false;
                    break;
                }
            }
        }
        if all_found {
            return Ok(CoverageOutcome {
                covered: true,
                chosen_cylinder: Some(v),
                witnesses,
                ball_size: ball.len(),
                ball_truncated: ball.truncated,
            });
        }
    }

    Ok(CoverageOutcome {
        covered: false,
        chosen_cylinder: None,
        witnesses: Vec::new(),
        ball_size: ball.len(),
        ball_truncated: ball.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rubin::profile::converges_in;

    fn pt(s: &str) -> CanonicalPoint {
        CanonicalPoint::parse(s).unwrap()
    }

    fn cs(s: &str) -> ClopenSet {
        ClopenSet::parse(s).unwrap()
    }

    #[test]
    fn whole_space_coverage_of_origin() {
        let out = orbit_coverage(&pt("(0)"), &cs("{e}"), GeneratorSet::v_standard(), 6, 2, 50_000)
            .unwrap();
        assert!(out.covered);
        // Every witness checks out: mover in G_U and moved point in target.
        for w in &out.witnesses {
            assert!(w.mover.is_in_gu(&cs("{e}")));
            assert!(w.target.contains_point(&w.mover.apply(&pt("(0)"))));
        }
        assert_eq!(out.witnesses.len(), 15);
    }

    #[test]
    fn point_outside_u_is_never_covered() {
        // Every element of G_U fixes the complement of U pointwise, so no
        // mover can bring an outside point in.
        let out = orbit_coverage(&pt("(1)"), &cs("{0}"), GeneratorSet::v_standard(), 4, 2, 20_000)
            .unwrap();
        assert!(!out.covered);
        assert!(!converges_in(&pt("(1)"), &cs("{0}")));
    }

    #[test]
    fn deep_cylinder_with_identity_witness() {
        // U a single depth-2 cylinder containing p: V = U, W = U, h = id.
        let out = orbit_coverage(&pt("01(0)"), &cs("{01}"), GeneratorSet::v_standard(), 2, 2, 10_000)
            .unwrap();
        assert!(out.covered);
        assert_eq!(out.chosen_cylinder.as_ref().unwrap().to_string(), "01");
        assert_eq!(out.witnesses.len(), 1);
        assert!(out.witnesses[0].mover.is_identity());
    }

    #[test]
    fn depth_cap_enforced() {
        let err = orbit_coverage(&pt("(0)"), &cs("{e}"), GeneratorSet::v_standard(), 2, 5, 1000);
        assert!(matches!(err, Err(Error::DepthRange { .. })));
    }
}
