use std::fmt;

use super::perm::{Perm, SymmetricGroup};
use crate::error::{Error, Result};

/// Largest degree for which the triple-nested exhaustive search is allowed.
/// |S_7| = 5040; the centralizer-restricted inner loops keep that tractable.
pub const MAX_EXHAUSTIVE_DEGREE: usize = 7;

pub(crate) fn check_degree_cap(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_DEGREE {
        return Err(Error::DegreeCap { degree: n, cap: MAX_EXHAUSTIVE_DEGREE });
    }
    Ok(())
}

/// Outcome of the exhaustive algebraic-disjointness decision.
///
/// `verdict` is true iff for every `h` with `[f,h] ≠ 1` the table holds a
/// verified witness pair; it is false iff `counterexample_h` names an `h`
/// admitting no witness pair at all.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgDisjointReport {
    pub verdict: bool,
    pub counterexample_h: Option<Perm>,
    /// For each `h` with `[f,h] ≠ 1` (in enumeration order), the first
    /// centralizer pair `(f1, f2)` with `[f1,[f2,h]]` a nontrivial element
    /// commuting with `g`.
    pub witness_table: Vec<(Perm, (Perm, Perm))>,
}

impl fmt::Debug for AlgDisjointReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgDisjointReport")
            .field("verdict", &self.verdict)
            .field("counterexample_h", &self.counterexample_h)
            .field("witnesses", &self.witness_table.len())
            .finish()
    }
}

/// Decides by exhaustive search whether `g` is algebraically disjoint from
/// `f` in the symmetric group: for every `h ∈ G` with `[f,h] ≠ 1` there must
/// exist `f1, f2` in the centralizer of `g` such that `[f1,[f2,h]]` is a
/// nontrivial element of that centralizer.
///
/// `h` runs over the whole group in enumeration order; witness pairs run over
/// the centralizer in index order and the first success is recorded, so
/// reports are deterministic.
pub fn is_alg_disjoint(g: &Perm, f: &Perm, group: &SymmetricGroup) -> Result<AlgDisjointReport> {
    if g.degree() != group.degree() {
        return Err(Error::DegreeMismatch(g.degree(), group.degree()));
    }
    if f.degree() != group.degree() {
        return Err(Error::DegreeMismatch(f.degree(), group.degree()));
    }
    check_degree_cap(group.degree())?;

    let centralizer = group.centralizer(g)?;
    let mut witness_table = Vec::new();

    for h in group.elements()? {
        if f.commutator(&h)?.is_identity() {
            continue;
        }
        let mut found = None;
        'pairs: for f1 in &centralizer {
            for f2 in &centralizer {
                let inner = f2.commutator(&h)?;
                let outer = f1.commutator(&inner)?;
                if !outer.is_identity() && outer.commutes_with(g)? {
                    found = Some((f1.clone(), f2.clone()));
                    break 'pairs;
                }
            }
        }
        match found {
            Some(pair) => witness_table.push((h, pair)),
            None => {
                return Ok(AlgDisjointReport {
                    verdict: false,
                    counterexample_h: Some(h),
                    witness_table,
                });
            }
        }
    }

    Ok(AlgDisjointReport { verdict: true, counterexample_h: None, witness_table })
}
