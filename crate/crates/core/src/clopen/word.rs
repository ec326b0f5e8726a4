use std::fmt;

use crate::error::{Error, Result};

/// A finite binary word. Names the cylinder of all infinite sequences
/// extending it; the empty word names the whole space.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { bits: Vec::new() }
    }

    /// Builds a word from bits, each of which must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Word { bits: bits.to_vec() }
    }

    /// Parses `0`/`1` digits; `e` or the empty string denote the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::empty());
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("non-binary symbol {c:?} in word {s:?}"),
                    })
                }
            }
        }
        Ok(Word { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn first(&self) -> Option<u8> {
        self.bits.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.bits.last().copied()
    }

    pub fn push(&mut self, bit: u8) {
        debug_assert!(bit <= 1);
        self.bits.push(bit);
    }

    pub fn pop(&mut self) -> Option<u8> {
        self.bits.pop()
    }

    /// The word followed by one extra bit.
    pub fn child(&self, bit: u8) -> Word {
        let mut w = self.clone();
        w.push(bit);
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Word { bits }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.bits.len() >= self.bits.len() && other.bits[..self.bits.len()] == self.bits[..]
    }

    /// `self` with `prefix` removed from the front, when it is a prefix.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if prefix.is_prefix_of(self) {
            Some(Word { bits: self.bits[prefix.bits.len()..].to_vec() })
        } else {
            None
        }
    }

    pub fn comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word { bits: self.bits[..len].to_vec() }
    }

    /// Moves the last bit to the front.
    pub fn rotate_right(&mut self) {
        if let Some(b) = self.bits.pop() {
            self.bits.insert(0, b);
        }
    }

    /// All words of the given length, in lexicographic order.
    pub fn all_of_len(len: usize) -> Vec<Word> {
        assert!(len < usize::BITS as usize);
        (0..1usize << len)
            .map(|m| {
                let bits = (0..len).map(|i| ((m >> (len - 1 - i)) & 1) as u8).collect();
                Word { bits }
            })
            .collect()
    }

    /// All extensions of `self` by `extra` bits, in lexicographic order.
    pub fn extensions(&self, extra: usize) -> Vec<Word> {
        Word::all_of_len(extra).into_iter().map(|t| self.concat(&t)).collect()
    }
}

/// Shortlex: shorter words first, ties broken lexicographically.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits
            .len()
            .cmp(&other.bits.len())
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Plain lexicographic order on bits; prefixes sort before their extensions.
pub fn lex_cmp(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.bits().cmp(b.bits())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "e");
        }
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

// Words read better as digit strings than as bit vectors.
impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
