use crate::clopen::{ClopenSet, Word};
use crate::error::{Error, Result};

/// Default cap for all deepening cylinder searches.
pub const DEFAULT_SEARCH_DEPTH_CAP: usize = 16;

/// Finds a cylinder inside `within` satisfying `pred`, deepening uniformly
/// (length 1, 2, …, `cap`) and taking the shortlex-first success, so results
/// are deterministic. Fails with `Error::SearchExhausted` at the cap.
pub fn search_cylinder(
    within: &ClopenSet,
    cap: usize,
    context: &'static str,
    mut pred: impl FnMut(&Word) -> bool,
) -> Result<Word> {
    for len in 1..=cap {
        for w in cylinders_inside(within, len) {
            if pred(&w) {
                return Ok(w);
            }
        }
    }
    Err(Error::SearchExhausted { context, cap })
}

/// All length-`len` words whose cylinders lie inside `within`, sorted.
pub fn cylinders_inside(within: &ClopenSet, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for p in within.prefixes() {
        if p.len() <= len {
            out.extend(p.extensions(len - p.len()));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> ClopenSet {
        ClopenSet::parse(s).unwrap()
    }

    #[test]
    fn takes_shortlex_first_success() {
        let w = search_cylinder(&cs("{e}"), 4, "test", |w| w.len() >= 2 && w.bit(0) == 1)
            .unwrap();
        assert_eq!(w.to_string(), "10");
    }

    #[test]
    fn exhaustion_reports_context() {
        let err = search_cylinder(&cs("{0}"), 3, "never", |_| false);
        assert_eq!(err, Err(Error::SearchExhausted { context: "never", cap: 3 }));
    }

    #[test]
    fn respects_the_ambient_set() {
        for w in cylinders_inside(&cs("{00,1}"), 2) {
            assert!(cs("{00,1}").includes(&ClopenSet::cylinder(&w)));
        }
        assert_eq!(cylinders_inside(&cs("{00,1}"), 2).len(), 3);
    }
}
