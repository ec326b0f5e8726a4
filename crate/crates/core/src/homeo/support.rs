use super::map::PrefixMap;
use crate::clopen::{CanonicalPoint, ClopenSet};

/// The support of a prefix-exchange map, described exactly.
///
/// `hull` is the union of the source cylinders of all non-identity cells.
/// Each cell whose source and target are comparable but distinct fixes
/// exactly one point inside its cylinder (the solution of the tail equation
/// `x = s·x`); incomparable cells fix nothing. The support is the hull minus
/// those finitely many fixed points, so the closure of the support is the
/// hull and the interior of that closure is again the hull: the hull is the
/// regular support.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportDescription {
    pub hull: ClopenSet,
    pub exceptional_fixed_points: Vec<CanonicalPoint>,
}

impl SupportDescription {
    /// Whether the point is moved by the map described.
    pub fn contains(&self, p: &CanonicalPoint) -> bool {
        self.hull.contains_point(p) && !self.exceptional_fixed_points.contains(p)
    }
}

impl PrefixMap {
    /// The exact support description of a reduced table.
    pub fn support(&self) -> SupportDescription {
        let mut hull_words = Vec::new();
        let mut fixed = Vec::new();
        for (s, t) in self.cells() {
            if s == t {
                continue;
            }
            hull_words.push(s.clone());
            let tail = if s.is_prefix_of(t) {
                Some(t.strip_prefix(s).expect("prefix checked"))
            } else if t.is_prefix_of(s) {
                Some(s.strip_prefix(t).expect("prefix checked"))
            } else {
                None
            };
            if let Some(tail) = tail {
                // The unique fixed point s·tail^∞ of the comparable cell.
                let p = CanonicalPoint::new(s.clone(), tail).expect("tail nonempty");
                debug_assert_eq!(self.apply(&p), p);
                fixed.push(p);
            }
        }
        fixed.sort();
        fixed.dedup();
        SupportDescription {
            hull: ClopenSet::from_words(hull_words),
            exceptional_fixed_points: fixed,
        }
    }

    /// The regular support: the interior of the closure of the support,
    /// which for prefix-exchange maps is exactly the hull of the support.
    pub fn rsupp(&self) -> ClopenSet {
        self.support().hull
    }

    /// Whether the map is supported inside `u`, i.e. lies in `G_u`. For
    /// clopen `u` this is equivalent to `rsupp ⊆ u`.
    pub fn is_in_gu(&self, u: &ClopenSet) -> bool {
        u.includes(&self.rsupp())
    }

    /// Whether the map fixes every point of `c`.
    pub fn is_identity_on(&self, c: &ClopenSet) -> bool {
        self.rsupp().is_disjoint(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clopen::{ClopenSet, Word};

    fn pm(s: &str) -> PrefixMap {
        s.parse().unwrap()
    }

    fn cs(s: &str) -> ClopenSet {
        ClopenSet::parse(s).unwrap()
    }

    fn pt(s: &str) -> CanonicalPoint {
        CanonicalPoint::parse(s).unwrap()
    }

    #[test]
    fn flip_moves_everything() {
        let d = PrefixMap::first_digit_flip().support();
        assert_eq!(d.hull, cs("{e}"));
        assert!(d.exceptional_fixed_points.is_empty());
    }

    #[test]
    fn identity_has_empty_hull() {
        let d = PrefixMap::identity().support();
        assert_eq!(d.hull, cs("{}"));
        assert!(d.exceptional_fixed_points.is_empty());
    }

    #[test]
    fn comparable_cells_fix_endpoints() {
        let d = pm("{0->00,10->01,11->1}").support();
        assert_eq!(d.hull, cs("{e}"));
        assert_eq!(d.exceptional_fixed_points, vec![pt("(0)"), pt("(1)")]);
        assert!(!d.contains(&pt("(0)")));
        assert!(d.contains(&pt("01(0)")));
    }

    #[test]
    fn rsupp_examples() {
        assert_eq!(PrefixMap::identity().rsupp(), cs("{}"));
        assert_eq!(pm("{00->01,01->00,1->1}").rsupp(), cs("{0}"));
        assert_eq!(PrefixMap::first_digit_flip().rsupp(), cs("{e}"));
    }

    #[test]
    fn rsupp_matches_cylinder_enumeration_oracle() {
        // A depth-4 cylinder meets the support iff it lies inside the hull:
        // check by sampling three points per depth-4 cylinder.
        let g = pm("{00->01,01->00,1->1}");
        let d = g.support();
        for w in Word::all_of_len(4) {
            let samples = [
                CanonicalPoint::cylinder_endpoint(&w),
                CanonicalPoint::new(w.clone(), Word::parse("1").unwrap()).unwrap(),
                CanonicalPoint::new(w.clone(), Word::parse("01").unwrap()).unwrap(),
            ];
            let moved = samples.iter().any(|p| g.apply(p) != *p);
            let inside = d.hull.includes(&ClopenSet::cylinder(&w));
            assert_eq!(moved, inside, "cylinder {w}");
        }
    }

    #[test]
    fn gu_membership() {
        let u = cs("{0}");
        assert!(PrefixMap::identity().is_in_gu(&u));
        assert!(!PrefixMap::first_digit_flip().is_in_gu(&u));
        assert!(pm("{00->01,01->00,1->1}").is_in_gu(&u));
    }
}
