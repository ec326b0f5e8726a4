use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::homeo::{parse_map_file, PrefixMap};

/// A named finite generating set of prefix-exchange maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    entries: Vec<(String, PrefixMap)>,
}

static V_STANDARD: LazyLock<GeneratorSet> = LazyLock::new(|| {
    let text = include_str!("../../data/v_standard.maps");
    GeneratorSet::from_file_text(text).expect("bundled generator file is valid")
});

static SPINE_SWAPS: LazyLock<GeneratorSet> = LazyLock::new(|| {
    let entries = (0..8)
        .map(|k| {
            let node = crate::clopen::Word::from_bits(&vec![0u8; k]);
            (format!("s{k}"), crate::homeo::PrefixMap::child_swap(&node))
        })
        .collect();
    GeneratorSet::new(entries).expect("spine swaps are valid generators")
});

impl GeneratorSet {
    /// Validates that the set is nonempty, has distinct names, and contains
    /// no identity element.
    pub fn new(entries: Vec<(String, PrefixMap)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition("generator set is empty".into()));
        }
        for (i, (name, map)) in entries.iter().enumerate() {
            if map.is_identity() {
                return Err(Error::Precondition(format!(
                    "generator {name:?} is the identity"
                )));
            }
            if entries[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::Precondition(format!("duplicate generator name {name:?}")));
            }
        }
        Ok(GeneratorSet { entries })
    }

    pub fn from_file_text(text: &str) -> Result<Self> {
        GeneratorSet::new(parse_map_file(text)?)
    }

    /// The bundled four-element generating set of Thompson's group V.
    pub fn v_standard() -> &'static GeneratorSet {
        &V_STANDARD
    }

    /// Child swaps at the nodes `ε, 0, 00, …, 0^7`. Every element preserves
    /// cylinder lengths, so the family acts on the class set of every
    /// truncation depth up to 8, and it acts transitively on the depth-`d`
    /// cylinders for each such depth.
    pub fn spine_swaps() -> &'static GeneratorSet {
        &SPINE_SWAPS
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(String, PrefixMap)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&PrefixMap> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    /// Generators followed by their inverses (`<name>'`), the alphabet used
    /// for word-ball enumeration.
    pub fn letters(&self) -> Vec<(String, PrefixMap)> {
        let mut out = self.entries.clone();
        for (name, map) in &self.entries {
            out.push((format!("{name}'"), map.inverse()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_set_is_valid() {
        let gens = GeneratorSet::v_standard();
        assert_eq!(gens.len(), 4);
        let names: Vec<&str> = gens.entries().iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["a", "b", "c", "pi0"]);
        for (_, g) in gens.entries() {
            assert!(!g.is_identity());
        }
        // b is a inside the right half: conjugating by the rotation-like
        // structure is not asserted here, but orders are: a and b are
        // infinite order, c has order 3, pi0 order 2.
        assert_eq!(gens.get("c").unwrap().order_bounded(8, 256).unwrap(), Some(3));
        assert_eq!(gens.get("pi0").unwrap().order_bounded(8, 256).unwrap(), Some(2));
        assert_eq!(gens.get("a").unwrap().order_bounded(32, 4096).unwrap(), None);
    }

    #[test]
    fn identity_generator_rejected() {
        let err = GeneratorSet::new(vec![("e".into(), PrefixMap::identity())]);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn letters_include_inverses() {
        let gens = GeneratorSet::v_standard();
        let letters = gens.letters();
        assert_eq!(letters.len(), 8);
        assert_eq!(letters[4].0, "a'");
        assert!(letters[4].1.compose(gens.get("a").unwrap()).is_identity());
    }
}
