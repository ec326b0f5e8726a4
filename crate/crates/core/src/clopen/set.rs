use std::fmt;

use super::point::CanonicalPoint;
use super::word::{lex_cmp, Word};
use crate::error::{Error, Result};

/// A clopen subset of the binary Cantor set, stored as the canonical finite
/// antichain of prefixes: no prefix extends another, no two sibling words
/// `u0`, `u1` are both present (they merge to `u`), and the list is sorted
/// shortlex. `{}` is the empty set and `{e}` the whole space.
///
/// Canonical form makes set equality a structural comparison.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClopenSet {
    prefixes: Vec<Word>,
}

impl ClopenSet {
    pub fn empty() -> Self {
        ClopenSet { prefixes: Vec::new() }
    }

    pub fn whole() -> Self {
        ClopenSet { prefixes: vec![Word::empty()] }
    }

    pub fn cylinder(w: &Word) -> Self {
        ClopenSet { prefixes: vec![w.clone()] }
    }

    /// Builds the set covering exactly the given cylinders, canonicalized.
    pub fn from_words(words: Vec<Word>) -> Self {
        ClopenSet { prefixes: normalize(words) }
    }

    pub fn prefixes(&self) -> &[Word] {
        &self.prefixes
    }

    pub fn is_empty(&self) -> bool {
        self.prefixes.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.prefixes.len() == 1 && self.prefixes[0].is_empty()
    }

    pub fn max_prefix_len(&self) -> usize {
        self.prefixes.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn union(&self, other: &ClopenSet) -> ClopenSet {
        let mut words = self.prefixes.clone();
        words.extend(other.prefixes.iter().cloned());
        ClopenSet::from_words(words)
    }

    pub fn intersection(&self, other: &ClopenSet) -> ClopenSet {
        let mut words = Vec::new();
        for a in &self.prefixes {
            for b in &other.prefixes {
                if a.is_prefix_of(b) {
                    words.push(b.clone());
                } else if b.is_prefix_of(a) {
                    words.push(a.clone());
                }
            }
        }
        ClopenSet::from_words(words)
    }

    pub fn complement(&self) -> ClopenSet {
        ClopenSet::from_words(complement_words(&self.prefixes, &Word::empty()))
    }

    pub fn difference(&self, other: &ClopenSet) -> ClopenSet {
        self.intersection(&other.complement())
    }

    /// Whether `other ⊆ self`. Because both sides are canonical, this holds
    /// iff every prefix of `other` extends some prefix of `self`.
    pub fn includes(&self, other: &ClopenSet) -> bool {
        other
            .prefixes
            .iter()
            .all(|b| self.prefixes.iter().any(|a| a.is_prefix_of(b)))
    }

    pub fn is_disjoint(&self, other: &ClopenSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Whether the point lies in the set.
    pub fn contains_point(&self, p: &CanonicalPoint) -> bool {
        self.prefixes.iter().any(|w| p.starts_with(w))
    }

    /// All length-`depth` words whose cylinders lie inside the set. Errors if
    /// some stored prefix is longer than `depth`.
    pub fn cylinders_at_depth(&self, depth: usize) -> Result<Vec<Word>> {
        for w in &self.prefixes {
            if w.len() > depth {
                return Err(Error::DepthTooShallow { prefix: w.clone(), depth });
            }
        }
        let mut out = Vec::new();
        for w in &self.prefixes {
            out.extend(w.extensions(depth - w.len()));
        }
        out.sort();
        Ok(out)
    }

    /// How many depth-`depth` cylinders the set covers; the dyadic mass of
    /// the set scaled by 2^depth.
    pub fn mass_at_depth(&self, depth: usize) -> Result<u64> {
        for w in &self.prefixes {
            if w.len() > depth {
                return Err(Error::DepthTooShallow { prefix: w.clone(), depth });
            }
        }
        Ok(self
            .prefixes
            .iter()
            .map(|w| 1u64 << (depth - w.len()))
            .sum())
    }

    /// Parses `{00,1}`, `{}` (empty), `{e}` (whole space).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("clopen set {s:?} must be brace-delimited"),
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(ClopenSet::empty());
        }
        let words = inner
            .split(',')
            .map(Word::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(ClopenSet::from_words(words))
    }
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.prefixes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonicalizes a list of cylinder names: drop words covered by a shorter
/// one, merge sibling pairs upward to fixpoint, sort shortlex.
fn normalize(mut words: Vec<Word>) -> Vec<Word> {
    words.sort_by(lex_cmp);
    words.dedup();
    loop {
        // Absorb: in lex order a covering prefix immediately precedes the
        // words it covers, so one linear pass suffices.
        let mut absorbed: Vec<Word> = Vec::with_capacity(words.len());
        for w in words {
            match absorbed.last() {
                Some(last) if last.is_prefix_of(&w) => {}
                _ => absorbed.push(w),
            }
        }
        // Merge sibling pairs; merging can cascade upward, so treat the
        // result like a stack.
        let mut merged: Vec<Word> = Vec::with_capacity(absorbed.len());
        for w in absorbed {
            merged.push(w);
            while merged.len() >= 2 {
                let a = &merged[merged.len() - 2];
                let b = &merged[merged.len() - 1];
                let siblings = a.last() == Some(0)
                    && b.last() == Some(1)
                    && a.len() == b.len()
                    && a.bits()[..a.len() - 1] == b.bits()[..b.len() - 1];
                if !siblings {
                    break;
                }
                let mut parent = merged.pop().unwrap();
                merged.pop();
                parent.pop();
                merged.push(parent);
            }
        }
        // Repeat until the antichain condition holds; in lex order a
        // violation can only appear between neighbours.
        let stable = merged
            .windows(2)
            .all(|p| !p[0].is_prefix_of(&p[1]));
        words = merged;
        if stable {
            break;
        }
    }
    words.sort();
    words
}

/// Complement of a canonical antichain, computed by splitting on the first
/// bit. `at` is only used to keep recursion bounded in debug assertions.
fn complement_words(words: &[Word], at: &Word) -> Vec<Word> {
    if words.is_empty() {
        return vec![at.clone()];
    }
    if words.iter().any(|w| w.len() == at.len()) {
        // The whole subtree is covered (canonical: it is the only word here).
        return Vec::new();
    }
    let mut out = Vec::new();
    for bit in [0u8, 1u8] {
        let sub: Vec<Word> = words
            .iter()
            .filter(|w| w.bit(at.len()) == bit)
            .cloned()
            .collect();
        out.extend(complement_words(&sub, &at.child(bit)));
    }
    out
}
