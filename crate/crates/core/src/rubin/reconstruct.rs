use super::gens::GeneratorSet;
use super::poset::MAX_ENUMERABLE_DEPTH;
use super::profile::{searrow_profile, searrow_profile_cylinders, SearrowProfile};
use crate::clopen::{CanonicalPoint, ClopenSet, Word};
use crate::error::{Error, Result};

/// The reconstructed space at a truncation depth: equivalence classes of
/// point ultrafilters keyed by their profiles, one representative point per
/// depth-`d` cylinder, and the induced action of each generator as a
/// permutation of classes.
#[derive(Clone, Debug)]
pub struct ReconstructedSpace {
    pub depth: usize,
    pub classes: Vec<SearrowProfile>,
    /// Representative points (the left endpoints of the depth-`d`
    /// cylinders) with their class indices; a bijection onto the classes.
    pub point_map: Vec<(CanonicalPoint, usize)>,
    /// Per generator name, the permutation of class indices it induces.
    pub action_table: Vec<(String, Vec<usize>)>,
}

impl ReconstructedSpace {
    /// The class of an arbitrary point, by recomputing its profile.
    pub fn class_of(&self, p: &CanonicalPoint) -> Result<usize> {
        let prof = profile_at(p, self.depth)?;
        self.classes
            .iter()
            .position(|c| *c == prof)
            .ok_or_else(|| Error::Precondition(format!("point {p} matches no class")))
    }
}

fn profile_at(p: &CanonicalPoint, depth: usize) -> Result<SearrowProfile> {
    if depth <= MAX_ENUMERABLE_DEPTH {
        searrow_profile(p, depth)
    } else {
        searrow_profile_cylinders(p, depth)
    }
}

/// Builds the reconstructed space at the given depth. Profiles are computed
/// over the full poset for `depth ≤ 4` and over the cylinder elements
/// beyond; membership in a depth-bounded set depends only on the first
/// `depth` digits of a point, so both keys separate exactly the depth-`d`
/// cylinders.
///
/// A generator acts on the class set only if it maps every depth-`d`
/// cylinder into a single depth-`d` cylinder, which for a prefix-exchange
/// table means it preserves cylinder lengths at this depth. Generators that
/// stretch or shrink cylinders shallower than `d` (such as the classical
/// Thompson generators) spread single classes over several classes, so no
/// class permutation exists for them at a finite truncation; they are
/// rejected with a precondition error naming the offending generator.
///
/// Asserts, while building: classes are in bijection with the depth-`d`
/// cylinders, every generator's class map is a bijection, and the
/// point-to-class map is equivariant both on the representatives and on an
/// independent second point of every cylinder.
pub fn reconstruct(depth: usize, gens: &GeneratorSet) -> Result<ReconstructedSpace> {
    let cylinders = Word::all_of_len(depth);
    let reps: Vec<CanonicalPoint> =
        cylinders.iter().map(CanonicalPoint::cylinder_endpoint).collect();

    let mut classes: Vec<SearrowProfile> = Vec::new();
    let mut point_map: Vec<(CanonicalPoint, usize)> = Vec::new();
    for p in &reps {
        let prof = profile_at(p, depth)?;
        let idx = match classes.iter().position(|c| *c == prof) {
            Some(i) => i,
            None => {
                classes.push(prof);
                classes.len() - 1
            }
        };
        point_map.push((p.clone(), idx));
    }
    assert_eq!(
        classes.len(),
        cylinders.len(),
        "profiles must separate the depth-{depth} cylinders"
    );

    let mut action_table = Vec::new();
    for (name, g) in gens.entries() {
        let mut action = Vec::with_capacity(cylinders.len());
        for (i, w) in cylinders.iter().enumerate() {
            let image = g.image_clopen(&ClopenSet::cylinder(w));
            let target = single_class_of(&image, depth).ok_or_else(|| {
                Error::Precondition(format!(
                    "generator {name} maps cylinder {w} across several depth-{depth} \
                     classes ({image}), so it induces no action on the class set"
                ))
            })?;
            // The image cylinder's class index equals the image profile of
            // the representative.
            let expected = profile_at(&g.apply(&reps[i]), depth)?;
            let class = classes
                .iter()
                .position(|c| *c == expected)
                .expect("image profile matches the class of its cylinder");
            assert_eq!(
                cylinders[class], target,
                "structural image and representative image must agree"
            );
            action.push(class);
        }
        let mut sorted = action.clone();
        sorted.sort_unstable();
        if sorted != (0..cylinders.len()).collect::<Vec<_>>() {
            return Err(Error::Precondition(format!(
                "generator {name} does not act bijectively on the depth-{depth} classes"
            )));
        }
        action_table.push((name.clone(), action));
    }

    let space = ReconstructedSpace { depth, classes, point_map, action_table };

    // Equivariance on a second, independent point of each cylinder.
    for (i, w) in cylinders.iter().enumerate() {
        let alt = CanonicalPoint::new(w.clone(), Word::from_bits(&[1, 0]))
            .expect("period nonempty");
        assert_eq!(space.point_map[i].1, space.class_of(&alt)?);
        for (name, g) in gens.entries() {
            let action = &space.action_table.iter().find(|(n, _)| n == name).unwrap().1;
            assert_eq!(
                space.class_of(&g.apply(&alt))?,
                action[space.class_of(&alt)?],
                "equivariance for generator {name} at cylinder {w}"
            );
        }
    }

    Ok(space)
}

/// The depth-`d` word whose cylinder contains the whole set, if one exists.
fn single_class_of(image: &ClopenSet, depth: usize) -> Option<Word> {
    let first = image.prefixes().first()?;
    if first.len() < depth {
        return None;
    }
    let class = first.prefix(depth);
    image
        .prefixes()
        .iter()
        .all(|p| p.len() >= depth && class.is_prefix_of(p))
        .then_some(class)
}
