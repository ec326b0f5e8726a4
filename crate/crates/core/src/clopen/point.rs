use std::fmt;

use super::word::Word;
use crate::error::{Error, Result};

/// An eventually periodic infinite binary word `u·v^∞`, stored in its unique
/// minimal form. These points are dense in the Cantor set, closed under every
/// prefix-exchange map, and have decidable equality.
///
/// Canonical form means:
/// - the period is primitive (not a proper power of a shorter word), and
/// - the preperiod is as short as possible, which holds exactly when its last
///   symbol differs from the period's last symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPoint {
    preperiod: Word,
    period: Word,
}

impl CanonicalPoint {
    /// Canonicalizes `preperiod·period^∞`. The period must be nonempty.
    pub fn new(preperiod: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut pre = preperiod;
        let mut per = primitive_root(&period);
        // The preperiod is reducible iff its last symbol equals the symbol one
        // period earlier, i.e. the period's last symbol.
        while !pre.is_empty() && pre.last() == per.last() {
            pre.pop();
            per.rotate_right();
        }
        Ok(CanonicalPoint { preperiod: pre, period: per })
    }

    /// The point `w·0^∞`, the left endpoint of the cylinder named by `w`.
    pub fn cylinder_endpoint(w: &Word) -> Self {
        CanonicalPoint::new(w.clone(), Word::from_bits(&[0])).expect("period nonempty")
    }

    pub fn zeros() -> Self {
        CanonicalPoint::cylinder_endpoint(&Word::empty())
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The i-th symbol of the infinite expansion.
    pub fn bit(&self, i: usize) -> u8 {
        if i < self.preperiod.len() {
            self.preperiod.bit(i)
        } else {
            self.period.bit((i - self.preperiod.len()) % self.period.len())
        }
    }

    /// The first `len` symbols of the expansion.
    pub fn prefix(&self, len: usize) -> Word {
        let mut w = Word::empty();
        for i in 0..len {
            w.push(self.bit(i));
        }
        w
    }

    pub fn starts_with(&self, w: &Word) -> bool {
        (0..w.len()).all(|i| self.bit(i) == w.bit(i))
    }

    /// Drops the first `k` symbols.
    pub fn shift(&self, k: usize) -> Self {
        if k <= self.preperiod.len() {
            let pre = Word::from_bits(&self.preperiod.bits()[k..]);
            CanonicalPoint::new(pre, self.period.clone()).expect("period nonempty")
        } else {
            let r = (k - self.preperiod.len()) % self.period.len();
            let mut bits = self.period.bits()[r..].to_vec();
            bits.extend_from_slice(&self.period.bits()[..r]);
            CanonicalPoint::new(Word::empty(), Word::from_bits(&bits)).expect("period nonempty")
        }
    }

    /// The point `w·self`.
    pub fn with_prefix(&self, w: &Word) -> Self {
        CanonicalPoint::new(w.concat(&self.preperiod), self.period.clone())
            .expect("period nonempty")
    }

    /// Parses `u(v)`, e.g. `01(10)`; the preperiod may be absent, e.g. `(0)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("point {s:?} must have the form u(v)"),
        })?;
        if !s.ends_with(')') {
            return Err(Error::Parse { line: 0, msg: format!("point {s:?} must end with ')'") });
        }
        let pre = Word::parse(&s[..open])?;
        let per = Word::parse(&s[open + 1..s.len() - 1])?;
        CanonicalPoint::new(pre, per)
    }
}

impl fmt::Display for CanonicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.preperiod.is_empty() {
            write!(f, "({})", self.period)
        } else {
            write!(f, "{}({})", self.preperiod, self.period)
        }
    }
}

impl fmt::Debug for CanonicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The shortest word whose repetition gives `w`.
fn primitive_root(w: &Word) -> Word {
    let n = w.len();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        if (d..n).all(|i| w.bit(i) == w.bit(i - d)) {
            return w.prefix(d);
        }
    }
    unreachable!("every word is a power of itself")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> CanonicalPoint {
        CanonicalPoint::parse(s).unwrap()
    }

    /// Independent oracle: two eventually periodic words are equal iff their
    /// expansions agree up to the combined preperiods plus twice the lcm of
    /// the periods.
    fn expansions_agree(a: &CanonicalPoint, b: &CanonicalPoint) -> bool {
        let lcm = {
            let (m, n) = (a.period().len(), b.period().len());
            let gcd = |mut x: usize, mut y: usize| {
                while y != 0 {
                    (x, y) = (y, x % y);
                }
                x
            };
            m / gcd(m, n) * n
        };
        let bound = a.preperiod().len() + b.preperiod().len() + 2 * lcm;
        (0..bound).all(|i| a.bit(i) == b.bit(i))
    }

    #[test]
    fn absorbs_preperiod_and_primitivizes() {
        let p = CanonicalPoint::new(Word::parse("01").unwrap(), Word::parse("0101").unwrap())
            .unwrap();
        assert_eq!(p.to_string(), "(01)");
    }

    #[test]
    fn already_canonical() {
        let p = CanonicalPoint::new(Word::empty(), Word::parse("0").unwrap()).unwrap();
        assert_eq!(p.to_string(), "(0)");
    }

    #[test]
    fn rotates_period_into_preperiod() {
        // 0110·(10)^∞ = 01·(10)^∞, confirmed by the expansion oracle.
        let raw = CanonicalPoint::new(Word::parse("0110").unwrap(), Word::parse("10").unwrap())
            .unwrap();
        let expected = pt("01(10)");
        assert!(expansions_agree(&raw, &expected));
        assert_eq!(raw, expected);
    }

    #[test]
    fn empty_period_rejected() {
        assert_eq!(
            CanonicalPoint::new(Word::empty(), Word::empty()),
            Err(Error::EmptyPeriod)
        );
    }

    #[test]
    fn canonicalization_idempotent() {
        let p = pt("0110(10)");
        let again = CanonicalPoint::new(p.preperiod().clone(), p.period().clone()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn shift_drops_symbols() {
        let p = pt("01(10)");
        assert_eq!(p.shift(1), pt("1(10)"));
        assert_eq!(p.shift(2), pt("(10)"));
        assert_eq!(p.shift(3), pt("(01)"));
        assert_eq!(p.shift(17), pt("(01)"));
    }

    #[test]
    fn display_round_trip() {
        for s in ["(0)", "(01)", "1(0)", "01(10)"] {
            assert_eq!(pt(s).to_string(), s);
        }
    }
}
