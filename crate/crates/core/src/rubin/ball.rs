use std::collections::HashMap;
use std::hash::{DefaultHasher, Hash, Hasher};

use super::gens::GeneratorSet;
use crate::clopen::ClopenSet;
use crate::homeo::PrefixMap;

/// Default cap on the number of distinct elements enumerated in a word ball.
pub const DEFAULT_BALL_BUDGET: usize = 100_000;

/// One enumerated group element with its cached support hull.
#[derive(Clone, Debug)]
pub struct BallEntry {
    pub map: PrefixMap,
    pub hull: ClopenSet,
    /// Word length at which the element first appeared.
    pub length: u32,
}

/// The ball of radius `r` in a finitely generated group of prefix-exchange
/// maps: all distinct elements expressible as words of length at most `r`
/// over the generators and their inverses, enumerated breadth-first with
/// structural deduplication. Enumeration order is deterministic: level by
/// level, parents in discovery order, letters in generator order followed by
/// inverse order.
#[derive(Clone, Debug)]
pub struct WordBall {
    pub entries: Vec<BallEntry>,
    pub radius: u32,
    pub budget: usize,
    /// True when the budget cut enumeration short of the full radius.
    pub truncated: bool,
}

impl WordBall {
    pub fn build(gens: &GeneratorSet, radius: u32, budget: usize) -> WordBall {
        let letters: Vec<PrefixMap> = gens.letters().into_iter().map(|(_, m)| m).collect();
        let mut entries: Vec<BallEntry> = Vec::new();
        let mut index: HashMap<u64, Vec<u32>> = HashMap::new();
        let mut truncated = false;

        let push = |entries: &mut Vec<BallEntry>,
                        index: &mut HashMap<u64, Vec<u32>>,
                        map: PrefixMap,
                        length: u32|
         -> bool {
            let key = table_hash(&map);
            let bucket = index.entry(key).or_default();
            if bucket.iter().any(|&i| entries[i as usize].map == map) {
                return false;
            }
            bucket.push(entries.len() as u32);
            let hull = map.rsupp();
            entries.push(BallEntry { map, hull, length });
            true
        };

        push(&mut entries, &mut index, PrefixMap::identity(), 0);
        let mut level_start = 0usize;
        'levels: for len in 1..=radius {
            let level_end = entries.len();
            if level_start == level_end {
                break;
            }
            for parent in level_start..level_end {
                for letter in &letters {
                    if entries.len() >= budget {
                        truncated = true;
                        break 'levels;
                    }
                    let product = entries[parent].map.compose(letter);
                    push(&mut entries, &mut index, product, len);
                }
            }
            level_start = level_end;
        }

        WordBall { entries, radius, budget, truncated }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Indices of the elements supported inside `u`, in enumeration order.
    pub fn supported_in(&self, u: &ClopenSet) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| u.includes(&e.hull))
            .map(|(i, _)| i)
            .collect()
    }
}

fn table_hash(map: &PrefixMap) -> u64 {
    let mut hasher = DefaultHasher::new();
    map.hash(&mut hasher);
    hasher.finish()
}
