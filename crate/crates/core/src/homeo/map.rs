use crate::clopen::{lex_cmp, CanonicalPoint, ClopenSet, Word};
use crate::error::{CodeSide, Error, Result};

/// Default cap on table size during power computation.
pub const DEFAULT_TABLE_BUDGET: usize = 4096;

/// A homeomorphism of the binary Cantor set given by a finite table of
/// prefix replacements `u_i·w ↦ v_i·w`, where the source prefixes and the
/// target prefixes each form a complete prefix code. This class contains
/// Thompson's group V and is closed under composition and inverse.
///
/// Tables are kept reduced (sibling cell pairs merged) and sorted by source,
/// so equality of maps is structural equality of tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrefixMap {
    cells: Vec<(Word, Word)>,
}

impl PrefixMap {
    pub fn identity() -> Self {
        PrefixMap { cells: vec![(Word::empty(), Word::empty())] }
    }

    /// The order-two element exchanging the two halves of the space.
    pub fn first_digit_flip() -> Self {
        let zero = Word::from_bits(&[0]);
        let one = Word::from_bits(&[1]);
        PrefixMap { cells: vec![(zero.clone(), one.clone()), (one, zero)] }
    }

    /// Validates both prefix codes and reduces the table.
    pub fn from_cells(cells: Vec<(Word, Word)>) -> Result<Self> {
        let sources: Vec<Word> = cells.iter().map(|c| c.0.clone()).collect();
        let targets: Vec<Word> = cells.iter().map(|c| c.1.clone()).collect();
        if !is_complete_code(sources) {
            return Err(Error::IncompleteCode { side: CodeSide::Source });
        }
        if !is_complete_code(targets) {
            return Err(Error::IncompleteCode { side: CodeSide::Target });
        }
        Ok(PrefixMap { cells: reduce(cells) })
    }

    /// Swaps the two child cylinders of `w`, identity elsewhere; an element
    /// of order two supported exactly on the cylinder of `w`.
    pub fn child_swap(w: &Word) -> Self {
        PrefixMap::cycle_of_cylinders(&[w.child(0), w.child(1)]).expect("children are disjoint")
    }

    /// Swaps the children of every prefix of the set, identity elsewhere.
    /// Supported exactly on the set, which therefore equals its regular
    /// support.
    pub fn child_swap_set(u: &ClopenSet) -> Self {
        let mut cells = Vec::new();
        for w in u.prefixes() {
            cells.push((w.child(0), w.child(1)));
            cells.push((w.child(1), w.child(0)));
        }
        for w in u.complement().prefixes() {
            cells.push((w.clone(), w.clone()));
        }
        PrefixMap::from_cells(cells).expect("swap cells tile the space")
    }

    /// Cyclically permutes the given pairwise disjoint cylinders
    /// (`c_0 → c_1 → ⋯ → c_0`), identity elsewhere. With k cylinders the
    /// resulting element has order exactly k.
    pub fn cycle_of_cylinders(words: &[Word]) -> Result<Self> {
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                if a.comparable(b) {
                    return Err(Error::Precondition(format!(
                        "cylinders {a} and {b} are not disjoint"
                    )));
                }
            }
        }
        let mut cells = Vec::new();
        for (i, w) in words.iter().enumerate() {
            cells.push((w.clone(), words[(i + 1) % words.len()].clone()));
        }
        let moved = ClopenSet::from_words(words.to_vec());
        for w in moved.complement().prefixes() {
            cells.push((w.clone(), w.clone()));
        }
        PrefixMap::from_cells(cells)
    }

    pub fn cells(&self) -> &[(Word, Word)] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn max_source_len(&self) -> usize {
        self.cells.iter().map(|c| c.0.len()).max().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.cells.len() == 1 && self.cells[0].0.is_empty() && self.cells[0].1.is_empty()
    }

    /// `self∘other`: applies `other` first. The two tables are refined to a
    /// common code and composed cell-wise; the result is reduced.
    pub fn compose(&self, other: &PrefixMap) -> PrefixMap {
        let mut cells = Vec::new();
        for (u, v) in &other.cells {
            for (s, t) in &self.cells {
                if s.is_prefix_of(v) {
                    // other maps [u] onto [v] ⊆ [s]; the composite replaces s by t.
                    let r = v.strip_prefix(s).expect("prefix checked");
                    cells.push((u.clone(), t.concat(&r)));
                } else if v.is_prefix_of(s) && v != s {
                    // [s] ⊊ [v]: refine other's cell to source u·r with v·r = s.
                    let r = s.strip_prefix(v).expect("prefix checked");
                    cells.push((u.concat(&r), t.clone()));
                }
            }
        }
        PrefixMap { cells: reduce(cells) }
    }

    pub fn inverse(&self) -> PrefixMap {
        let mut cells: Vec<(Word, Word)> =
            self.cells.iter().map(|(s, t)| (t.clone(), s.clone())).collect();
        // Reducedness is symmetric in source and target, so only the order
        // needs fixing.
        cells.sort();
        PrefixMap { cells }
    }

    /// `[a,b] = a·b·a⁻¹·b⁻¹`.
    pub fn commutator(&self, other: &PrefixMap) -> PrefixMap {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    /// `a^b = b⁻¹·a·b`.
    pub fn conjugate(&self, by: &PrefixMap) -> PrefixMap {
        by.inverse().compose(self).compose(by)
    }

    pub fn commutes_with(&self, other: &PrefixMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// `self^k` by repeated squaring, reducing after every multiplication.
    /// Aborts with `Error::TableBudget` if any intermediate table exceeds
    /// `budget` cells.
    pub fn pow(&self, k: u64, budget: usize) -> Result<PrefixMap> {
        let check = |m: &PrefixMap| {
            if m.cell_count() > budget {
                Err(Error::TableBudget { budget, cells: m.cell_count() })
            } else {
                Ok(())
            }
        };
        check(self)?;
        let mut result = PrefixMap::identity();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base);
                check(&result)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base);
                check(&base)?;
            }
        }
        Ok(result)
    }

    /// The smallest `k ≤ bound` with `self^k = 1`, or `None` if the order
    /// exceeds the bound.
    pub fn order_bounded(&self, bound: u32, budget: usize) -> Result<Option<u32>> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.cell_count() > budget {
                return Err(Error::TableBudget { budget, cells: acc.cell_count() });
            }
            if acc.is_identity() {
                return Ok(Some(k));
            }
            acc = acc.compose(self);
        }
        Ok(None)
    }

    /// Applies the map to a point: the unique cell whose source starts the
    /// expansion is replaced by its target. Eventually periodic points stay
    /// eventually periodic.
    pub fn apply(&self, p: &CanonicalPoint) -> CanonicalPoint {
        for (s, t) in &self.cells {
            if p.starts_with(s) {
                return p.shift(s.len()).with_prefix(t);
            }
        }
        unreachable!("complete source code: some cell matches every point")
    }

    /// The exact image of a clopen set.
    pub fn image_clopen(&self, c: &ClopenSet) -> ClopenSet {
        let mut words = Vec::new();
        for w in c.prefixes() {
            for (s, t) in &self.cells {
                if s.is_prefix_of(w) {
                    let r = w.strip_prefix(s).expect("prefix checked");
                    words.push(t.concat(&r));
                } else if w.is_prefix_of(s) && w != s {
                    words.push(t.clone());
                }
            }
        }
        ClopenSet::from_words(words)
    }
}

/// Merges sibling cell pairs `(u0→v0),(u1→v1) ⇒ (u→v)` to fixpoint and
/// sorts by source. Operates on any cell list whose sources form a complete
/// code; in source-lex order a mergeable pair is always adjacent.
fn reduce(mut cells: Vec<(Word, Word)>) -> Vec<(Word, Word)> {
    cells.sort_by(|a, b| lex_cmp(&a.0, &b.0));
    let mut stack: Vec<(Word, Word)> = Vec::with_capacity(cells.len());
    for cell in cells {
        stack.push(cell);
        while stack.len() >= 2 {
            let (s1, t1) = &stack[stack.len() - 2];
            let (s2, t2) = &stack[stack.len() - 1];
            let mergeable = ends_with(s1, 0)
                && ends_with(s2, 1)
                && ends_with(t1, 0)
                && ends_with(t2, 1)
                && stem_eq(s1, s2)
                && stem_eq(t1, t2);
            if !mergeable {
                break;
            }
            let (mut s, mut t) = stack.pop().unwrap();
            stack.pop();
            s.pop();
            t.pop();
            stack.push((s, t));
        }
    }
    stack.sort();
    stack
}

fn ends_with(w: &Word, bit: u8) -> bool {
    w.last() == Some(bit)
}

fn stem_eq(a: &Word, b: &Word) -> bool {
    a.len() == b.len() && a.bits()[..a.len() - 1] == b.bits()[..b.len() - 1]
}

/// Whether the words partition the space: an antichain whose cylinders tile
/// the whole Cantor set. Decided by splitting on the leading bit, which
/// avoids any arithmetic on code weights.
fn is_complete_code(mut words: Vec<Word>) -> bool {
    if words.is_empty() {
        return false;
    }
    words.sort_by(lex_cmp);
    fn rec(words: &[Word], depth: usize) -> bool {
        if words.len() == 1 && words[0].len() == depth {
            return true;
        }
        // A word ending at this depth alongside others would be a proper
        // prefix of them (or a duplicate).
        if words.iter().any(|w| w.len() <= depth) {
            return false;
        }
        let split = words.partition_point(|w| w.bit(depth) == 0);
        if split == 0 || split == words.len() {
            return false;
        }
        rec(&words[..split], depth + 1) && rec(&words[split..], depth + 1)
    }
    rec(&words, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> PrefixMap {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> CanonicalPoint {
        CanonicalPoint::parse(s).unwrap()
    }

    fn cs(s: &str) -> ClopenSet {
        ClopenSet::parse(s).unwrap()
    }

    #[test]
    fn validation_rejects_incomplete_codes() {
        let cells = vec![(Word::parse("0").unwrap(), Word::parse("0").unwrap())];
        assert_eq!(
            PrefixMap::from_cells(cells),
            Err(Error::IncompleteCode { side: CodeSide::Source })
        );
        // Sources tile but targets do not.
        let cells = vec![
            (Word::parse("0").unwrap(), Word::parse("00").unwrap()),
            (Word::parse("1").unwrap(), Word::parse("01").unwrap()),
        ];
        assert_eq!(
            PrefixMap::from_cells(cells),
            Err(Error::IncompleteCode { side: CodeSide::Target })
        );
    }

    #[test]
    fn standard_generator_is_valid() {
        let g = pm("{00->0,01->10,1->11}");
        assert_eq!(g.cell_count(), 3);
        assert!(!g.is_identity());
    }

    #[test]
    fn flip_is_an_involution() {
        let f = PrefixMap::first_digit_flip();
        assert!(f.compose(&f).is_identity());
        assert_eq!(f.order_bounded(8, 64).unwrap(), Some(2));
    }

    #[test]
    fn identity_reduces_to_single_cell() {
        let cells = vec![
            (Word::parse("00").unwrap(), Word::parse("00").unwrap()),
            (Word::parse("01").unwrap(), Word::parse("01").unwrap()),
            (Word::parse("1").unwrap(), Word::parse("1").unwrap()),
        ];
        assert!(PrefixMap::from_cells(cells).unwrap().is_identity());
    }

    #[test]
    fn inverse_swaps_columns() {
        let g = pm("{00->0,01->10,1->11}");
        assert_eq!(g.inverse(), pm("{0->00,10->01,11->1}"));
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
    }

    #[test]
    fn commutator_of_flip_and_half_swap() {
        let f = PrefixMap::first_digit_flip();
        let h = pm("{00->01,01->00,1->1}");
        let c = f.commutator(&h);
        assert!(!c.is_identity());
        // [f,h] swaps the children of both halves.
        assert_eq!(c, pm("{00->01,01->00,10->11,11->10}"));
    }

    #[test]
    fn apply_examples() {
        let f = PrefixMap::first_digit_flip();
        assert_eq!(f.apply(&pt("(0)")), pt("1(0)"));
        assert_eq!(PrefixMap::identity().apply(&pt("01(10)")), pt("01(10)"));
        // Tail equation x = 0x forces the fixed point 0^∞.
        let g = pm("{0->00,10->01,11->1}");
        assert_eq!(g.apply(&pt("(0)")), pt("(0)"));
    }

    #[test]
    fn image_examples() {
        let f = PrefixMap::first_digit_flip();
        assert_eq!(f.image_clopen(&cs("{0}")), cs("{1}"));
        let g = pm("{00->0,01->10,1->11}");
        assert_eq!(g.image_clopen(&cs("{e}")), cs("{e}"));
        assert_eq!(g.image_clopen(&cs("{01}")), cs("{10}"));
        // Bijectivity: the image of a complement is the complement of the image.
        let c = cs("{010,1}");
        assert_eq!(
            g.image_clopen(&c.complement()),
            g.image_clopen(&c).complement()
        );
    }

    #[test]
    fn three_cycle_of_mixed_cylinders_has_order_three() {
        let g = PrefixMap::cycle_of_cylinders(&[
            Word::parse("00").unwrap(),
            Word::parse("010").unwrap(),
            Word::parse("011").unwrap(),
        ])
        .unwrap();
        assert_eq!(g.order_bounded(16, 256).unwrap(), Some(3));
        assert_eq!(PrefixMap::identity().order_bounded(4, 16).unwrap(), Some(1));
    }

    #[test]
    fn cycle_rejects_overlapping_cylinders() {
        let err = PrefixMap::cycle_of_cylinders(&[
            Word::parse("0").unwrap(),
            Word::parse("01").unwrap(),
        ]);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn pow_budget_enforced() {
        let g = pm("{00->0,01->10,1->11}");
        // Powers of this element grow one cell per step.
        assert!(matches!(g.pow(200, 16), Err(Error::TableBudget { .. })));
        assert_eq!(g.pow(3, 4096).unwrap(), g.compose(&g).compose(&g));
        assert!(g.pow(0, 16).unwrap().is_identity());
    }

    #[test]
    fn compose_matches_pointwise_application() {
        let a = pm("{00->0,01->10,1->11}");
        let b = pm("{00->01,01->1,1->00}");
        let ab = a.compose(&b);
        for s in ["(0)", "(1)", "(01)", "11(10)", "010(011)"] {
            let p = pt(s);
            assert_eq!(ab.apply(&p), a.apply(&b.apply(&p)));
        }
    }
}
