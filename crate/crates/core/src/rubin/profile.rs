use super::poset::PosetRd;
use crate::clopen::{CanonicalPoint, ClopenSet};
use crate::error::Result;

/// Whether the principal ultrafilter of basis sets containing `p` converges
/// inside `u`. The basis sets are clopen, hence equal to their closures, so
/// this is exactly membership of the limit point.
pub fn converges_in(p: &CanonicalPoint, u: &ClopenSet) -> bool {
    u.contains_point(p)
}

/// The nested cylinders of a point down to a given depth: a concrete
/// prefilter generating the unique ultrafilter of basis sets containing the
/// limit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UltrafilterChain {
    pub limit: CanonicalPoint,
    pub depth: usize,
    /// `chain[k]` is the cylinder of the first `k` symbols; each element
    /// contains the next and all contain the limit.
    pub chain: Vec<ClopenSet>,
}

impl UltrafilterChain {
    pub fn new(p: &CanonicalPoint, depth: usize) -> Self {
        let chain: Vec<ClopenSet> =
            (0..=depth).map(|k| ClopenSet::cylinder(&p.prefix(k))).collect();
        for pair in chain.windows(2) {
            debug_assert!(pair[0].includes(&pair[1]));
        }
        UltrafilterChain { limit: p.clone(), depth, chain }
    }

    /// Whether `u` belongs to the generated ultrafilter: true iff `u`
    /// contains the limit.
    pub fn member(&self, u: &ClopenSet) -> bool {
        u.contains_point(&self.limit)
    }
}

/// Which slice of the truncated poset a profile was computed over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProfileBasis {
    /// Every element of the depth-`d` poset (enumerable for `d ≤ 4`).
    FullPoset,
    /// Only the cylinder elements, i.e. the prefixes of the point.
    Cylinders,
}

/// The set of depth-`d` poset elements `U` with `F ⇘ U` for the ultrafilter
/// of a point: the key of the point's equivalence class in the
/// reconstructed space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearrowProfile {
    pub depth: usize,
    pub basis: ProfileBasis,
    /// Sorted, deduplicated hits.
    pub hits: Vec<ClopenSet>,
}

impl SearrowProfile {
    /// Upward closure under inclusion within the listed universe.
    pub fn is_upward_closed_in(&self, universe: &[ClopenSet]) -> bool {
        self.hits.iter().all(|u| {
            universe
                .iter()
                .filter(|v| v.includes(u))
                .all(|v| self.hits.binary_search(v).is_ok())
        })
    }
}

/// The full profile of a point at depth `d ≤ 4`: all poset elements
/// containing the point.
pub fn searrow_profile(p: &CanonicalPoint, depth: usize) -> Result<SearrowProfile> {
    let poset = PosetRd::new(depth)?;
    let mut hits: Vec<ClopenSet> = poset
        .elements()?
        .into_iter()
        .filter(|u| converges_in(p, u))
        .collect();
    hits.sort();
    Ok(SearrowProfile { depth, basis: ProfileBasis::FullPoset, hits })
}

/// The profile restricted to cylinder elements, available at any supported
/// depth: exactly the prefixes of the point up to length `d`.
pub fn searrow_profile_cylinders(p: &CanonicalPoint, depth: usize) -> Result<SearrowProfile> {
    PosetRd::new(depth)?;
    let mut hits: Vec<ClopenSet> =
        (0..=depth).map(|k| ClopenSet::cylinder(&p.prefix(k))).collect();
    hits.sort();
    Ok(SearrowProfile { depth, basis: ProfileBasis::Cylinders, hits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> CanonicalPoint {
        CanonicalPoint::parse(s).unwrap()
    }

    fn cs(s: &str) -> ClopenSet {
        ClopenSet::parse(s).unwrap()
    }

    #[test]
    fn convergence_examples() {
        assert!(converges_in(&pt("(0)"), &cs("{0}")));
        assert!(!converges_in(&pt("(0)"), &cs("{1}")));
        assert!(converges_in(&pt("01(0)"), &cs("{01}")));
    }

    #[test]
    fn chain_generates_membership_by_limit() {
        let p = pt("01(10)");
        let chain = UltrafilterChain::new(&p, 4);
        assert_eq!(chain.chain.len(), 5);
        assert_eq!(chain.chain[0], ClopenSet::whole());
        assert!(chain.member(&cs("{01}")));
        assert!(!chain.member(&cs("{00}")));
        for u in &chain.chain {
            assert!(chain.member(u));
        }
    }

    #[test]
    fn profile_at_depth_one() {
        let prof = searrow_profile(&pt("(0)"), 1).unwrap();
        assert_eq!(prof.hits, vec![cs("{e}"), cs("{0}")]);
    }

    #[test]
    fn whole_space_always_hit() {
        for s in ["(0)", "(1)", "10(01)"] {
            let prof = searrow_profile(&pt(s), 2).unwrap();
            assert!(prof.hits.binary_search(&cs("{e}")).is_ok());
        }
    }

    #[test]
    fn profile_scans_membership() {
        // 10(1) expands to 10111…; its hits at depth 2 are exactly the
        // poset elements containing the cylinder [10].
        let prof = searrow_profile(&pt("10(1)"), 2).unwrap();
        let poset = PosetRd::new(2).unwrap();
        let expected: Vec<ClopenSet> = {
            let mut v: Vec<ClopenSet> = poset
                .elements()
                .unwrap()
                .into_iter()
                .filter(|u| u.includes(&cs("{10}")))
                .collect();
            v.sort();
            v
        };
        assert_eq!(prof.hits, expected);
        assert_eq!(prof.hits.len(), 8);
    }

    #[test]
    fn profiles_are_upward_closed() {
        let poset = PosetRd::new(2).unwrap();
        let universe = poset.elements().unwrap();
        for s in ["(0)", "(10)", "11(0)"] {
            let prof = searrow_profile(&pt(s), 2).unwrap();
            assert!(prof.is_upward_closed_in(&universe));
        }
    }

    #[test]
    fn cylinder_profile_is_the_prefix_chain() {
        let prof = searrow_profile_cylinders(&pt("(01)"), 6).unwrap();
        assert_eq!(prof.hits.len(), 7);
        assert!(prof.hits.binary_search(&cs("{010101}")).is_ok());
    }
}
