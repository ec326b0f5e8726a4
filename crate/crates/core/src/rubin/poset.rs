use crate::clopen::{ClopenSet, Word};
use crate::error::{Error, Result};
use crate::homeo::PrefixMap;

/// Largest supported truncation depth.
pub const MAX_POSET_DEPTH: usize = 8;
/// Largest depth at which the poset is fully enumerated; beyond this only
/// membership queries and realizers are available (the element count is
/// doubly exponential in the depth).
pub const MAX_ENUMERABLE_DEPTH: usize = 4;

/// The truncation at depth `d` of the poset of regular supports: all
/// nonempty clopen sets whose canonical prefixes have length at most `d`,
/// ordered by inclusion. The poset is closed under nonempty intersection,
/// and every element is realized as the regular support of a concrete
/// prefix-exchange element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PosetRd {
    depth: usize,
}

impl PosetRd {
    pub fn new(depth: usize) -> Result<Self> {
        if depth < 1 || depth > MAX_POSET_DEPTH {
            return Err(Error::DepthRange { depth, min: 1, max: MAX_POSET_DEPTH });
        }
        Ok(PosetRd { depth })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn contains(&self, u: &ClopenSet) -> bool {
        !u.is_empty() && u.max_prefix_len() <= self.depth
    }

    /// Inclusion order.
    pub fn le(&self, a: &ClopenSet, b: &ClopenSet) -> bool {
        b.includes(a)
    }

    /// All elements, enumerated as the nonempty subsets of the depth-`d`
    /// cylinders in subset-mask order. Only available up to depth 4
    /// (the count is `2^(2^d) - 1`).
    pub fn elements(&self) -> Result<Vec<ClopenSet>> {
        if self.depth > MAX_ENUMERABLE_DEPTH {
            return Err(Error::DepthRange { depth: self.depth, min: 1, max: MAX_ENUMERABLE_DEPTH });
        }
        let cylinders = Word::all_of_len(self.depth);
        let mut out = Vec::with_capacity((1usize << cylinders.len()) - 1);
        for mask in 1u32..(1u32 << cylinders.len()) {
            let words: Vec<Word> = cylinders
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, w)| w.clone())
                .collect();
            out.push(ClopenSet::from_words(words));
        }
        Ok(out)
    }

    /// `2^(2^d) - 1` in decimal.
    pub fn element_count_decimal(&self) -> String {
        // Repeated doubling of a little-endian decimal digit vector.
        let mut digits = vec![1u8];
        for _ in 0..(1u64 << self.depth) {
            let mut carry = 0;
            for d in digits.iter_mut() {
                let v = *d * 2 + carry;
                *d = v % 10;
                carry = v / 10;
            }
            if carry > 0 {
                digits.push(carry);
            }
        }
        // Subtract one; the leading digit is a power of two, never zero after.
        let mut i = 0;
        while digits[i] == 0 {
            digits[i] = 9;
            i += 1;
        }
        digits[i] -= 1;
        if *digits.last().unwrap() == 0 && digits.len() > 1 {
            digits.pop();
        }
        digits.iter().rev().map(|d| char::from(b'0' + d)).collect()
    }

    /// A concrete element whose regular support is exactly `u`: the child
    /// swap of every prefix of `u`. Witnesses that the truncated poset
    /// consists of genuine regular supports.
    pub fn realizer(&self, u: &ClopenSet) -> Result<PrefixMap> {
        if !self.contains(u) {
            return Err(Error::Precondition(format!(
                "{u} is not an element of the depth-{} poset",
                self.depth
            )));
        }
        Ok(PrefixMap::child_swap_set(u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> ClopenSet {
        ClopenSet::parse(s).unwrap()
    }

    #[test]
    fn depth_one_has_three_elements() {
        let poset = PosetRd::new(1).unwrap();
        let els = poset.elements().unwrap();
        let shown: Vec<String> = els.iter().map(|u| u.to_string()).collect();
        assert_eq!(shown, ["{0}", "{1}", "{e}"]);
        assert!(poset.le(&cs("{0}"), &cs("{e}")));
        assert!(poset.le(&cs("{1}"), &cs("{e}")));
        assert!(!poset.le(&cs("{0}"), &cs("{1}")));
    }

    #[test]
    fn depth_two_has_fifteen_elements() {
        let poset = PosetRd::new(2).unwrap();
        assert_eq!(poset.elements().unwrap().len(), 15);
        assert_eq!(poset.element_count_decimal(), "15");
    }

    #[test]
    fn counts_without_enumerating() {
        assert_eq!(PosetRd::new(3).unwrap().element_count_decimal(), "255");
        assert_eq!(PosetRd::new(4).unwrap().element_count_decimal(), "65535");
        assert_eq!(
            PosetRd::new(5).unwrap().element_count_decimal(),
            "4294967295"
        );
        assert_eq!(
            PosetRd::new(8).unwrap().element_count_decimal(),
            "115792089237316195423570985008687907853269984665640564039457584007913129639935"
        );
    }

    #[test]
    fn depth_bounds_enforced() {
        assert!(PosetRd::new(0).is_err());
        assert!(PosetRd::new(9).is_err());
        assert!(PosetRd::new(5).unwrap().elements().is_err());
    }

    #[test]
    fn membership() {
        let poset = PosetRd::new(2).unwrap();
        assert!(poset.contains(&cs("{01,1}")));
        assert!(!poset.contains(&cs("{010}")));
        assert!(!poset.contains(&cs("{}")));
    }

    #[test]
    fn realizer_has_exact_support() {
        let poset = PosetRd::new(2).unwrap();
        for u in poset.elements().unwrap() {
            let g = poset.realizer(&u).unwrap();
            assert_eq!(g.rsupp(), u);
            assert_eq!(g.order_bounded(4, 256).unwrap(), Some(2));
        }
        assert_eq!(
            poset.realizer(&cs("{0}")).unwrap(),
            PrefixMap::child_swap(&crate::clopen::Word::parse("0").unwrap())
        );
    }

    #[test]
    fn closed_under_nonempty_intersection() {
        let poset = PosetRd::new(2).unwrap();
        let els = poset.elements().unwrap();
        for a in &els {
            for b in &els {
                let c = a.intersection(b);
                if !c.is_empty() {
                    assert!(poset.contains(&c));
                }
            }
        }
    }
}
