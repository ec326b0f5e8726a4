use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::search::search_cylinder;
use crate::clopen::{ClopenSet, Word};
use crate::error::{Error, Result};
use crate::homeo::{PrefixMap, DEFAULT_TABLE_BUDGET};

/// Whether `f` and `g` move disjoint sets of points. The support hulls are
/// clopen and the exceptional fixed points are finite, so the supports are
/// disjoint exactly when the hulls are.
pub fn disjoint_supports(f: &PrefixMap, g: &PrefixMap) -> bool {
    f.rsupp().is_disjoint(&g.rsupp())
}

/// A verified witness pair for one step of the disjoint-supports direction:
/// `f1, f2` commute with `g`, and `[f1,[f2,h]]` is a nontrivial element
/// commuting with `g`.
#[derive(Clone, Debug)]
pub struct F1F2Witness {
    pub f1: PrefixMap,
    pub f2: PrefixMap,
    /// Cylinder inside `rsupp(f)` moved off itself by `h`.
    pub v: ClopenSet,
    /// Cylinder inside `v` moved off itself by `f2`.
    pub w: ClopenSet,
    /// `[f2, h]`.
    pub inner: PrefixMap,
    /// `[f1, [f2, h]]`.
    pub outer: PrefixMap,
}

/// Constructs the witness pair when `f` and `g` have disjoint supports and
/// `[f,h] ≠ 1`: a cylinder `V ⊆ rsupp(f)` with `h(V) ∩ V = ∅`, `f2` the
/// child swap of `V`, a cylinder `W ⊆ V` with `f2(W) ∩ W = ∅`, and `f1` the
/// child swap of `W`.
///
/// Hypothesis violations are reported as `Error::Hypothesis`; running out of
/// search depth (which cannot happen when the hypotheses hold) is the
/// distinct `Error::SearchExhausted`.
pub fn construct_f1_f2(
    f: &PrefixMap,
    g: &PrefixMap,
    h: &PrefixMap,
    depth_cap: usize,
) -> Result<F1F2Witness> {
    if !disjoint_supports(f, g) {
        return Err(Error::Hypothesis("supp(f) and supp(g) are not disjoint".into()));
    }
    if f.commutator(h).is_identity() {
        return Err(Error::Hypothesis("[f,h] = 1".into()));
    }

    let v = search_cylinder(&f.rsupp(), depth_cap, "V with h(V) disjoint from V", |w| {
        let c = ClopenSet::cylinder(w);
        h.image_clopen(&c).is_disjoint(&c)
    })?;
    let f2 = PrefixMap::child_swap(&v);

    let v_set = ClopenSet::cylinder(&v);
    let w = search_cylinder(&v_set, depth_cap, "W with f2(W) disjoint from W", |w| {
        let c = ClopenSet::cylinder(w);
        f2.image_clopen(&c).is_disjoint(&c)
    })?;
    let f1 = PrefixMap::child_swap(&w);

    let inner = f2.commutator(h);
    let outer = f1.commutator(&inner);
    assert!(f1.commutes_with(g), "f1 must centralize g");
    assert!(f2.commutes_with(g), "f2 must centralize g");
    assert!(!outer.is_identity(), "[f1,[f2,h]] must be nontrivial");
    assert!(outer.commutes_with(g), "[f1,[f2,h]] must centralize g");

    Ok(F1F2Witness { f1, f2, v: v_set, w: ClopenSet::cylinder(&w), inner, outer })
}

/// A refutation candidate for the converse direction: when `f` and `g^12`
/// have overlapping supports, a cylinder `V` inside the overlap moved off
/// itself by `f` with five pairwise disjoint `g`-translates, and a
/// nontrivial `h` supported in `V` with `[f,h] ≠ 1`. No pool of witnesses is
/// searched here; the pigeonhole argument that no pair can work quantifies
/// over the whole group, so the output is evidence, not a decision.
#[derive(Clone, Debug)]
pub struct RefuterWitness {
    pub h: PrefixMap,
    pub v: ClopenSet,
    /// `rsupp(f) ∩ supp(g^12)` as a clopen hull.
    pub overlap: ClopenSet,
    pub g12: PrefixMap,
}

pub fn construct_refuter(
    f: &PrefixMap,
    g: &PrefixMap,
    depth_cap: usize,
    table_budget: usize,
) -> Result<RefuterWitness> {
    let g12 = g.pow(12, table_budget)?;
    let g12_support = g12.support();
    let overlap = f.rsupp().intersection(&g12_support.hull);
    if overlap.is_empty() {
        return Err(Error::Precondition("rsupp(f) ∩ supp(g^12) is empty".into()));
    }

    let powers: Vec<PrefixMap> = {
        let mut acc = PrefixMap::identity();
        let mut out = vec![acc.clone()];
        for _ in 0..4 {
            acc = acc.compose(g);
            out.push(acc.clone());
        }
        out
    };

    let v = search_cylinder(&overlap, depth_cap, "V with disjoint g-translates", |w| {
        let c = ClopenSet::cylinder(w);
        if g12_support.exceptional_fixed_points.iter().any(|p| c.contains_point(p)) {
            return false;
        }
        if !f.image_clopen(&c).is_disjoint(&c) {
            return false;
        }
        let translates: Vec<ClopenSet> =
            powers.iter().map(|gi| gi.image_clopen(&c)).collect();
        translates
            .iter()
            .enumerate()
            .all(|(i, a)| translates[i + 1..].iter().all(|b| a.is_disjoint(b)))
    })?;

    let v_set = ClopenSet::cylinder(&v);
    let h = PrefixMap::child_swap(&v);
    assert!(!f.commutator(&h).is_identity(), "[f,h] must be nontrivial");

    Ok(RefuterWitness { h, v: v_set, overlap, g12 })
}

/// An element of `G_U` of order exactly `n+1`: an (n+1)-cycle of disjoint
/// sub-cylinders of the first prefix of `U`.
pub fn order_witness(u: &ClopenSet, n: u32) -> Result<PrefixMap> {
    if u.is_empty() {
        return Err(Error::Precondition("order witness needs a nonempty set".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("order witness needs n ≥ 1".into()));
    }
    let base = &u.prefixes()[0];
    let count = n as usize + 1;
    let extra = usize::BITS as usize - (count - 1).leading_zeros() as usize;
    let cylinders: Vec<Word> = base
        .extensions(extra)
        .into_iter()
        .take(count)
        .collect();
    PrefixMap::cycle_of_cylinders(&cylinders)
}

/// A random prefix-exchange element supported inside `u`: a random
/// permutation of the same-depth sub-cylinders of a random cylinder of `u`.
/// May be the identity.
pub fn random_element_in(u: &ClopenSet, rng: &mut impl Rng) -> PrefixMap {
    assert!(!u.is_empty(), "cannot sample inside the empty set");
    let mut base = u.prefixes()[rng.random_range(0..u.prefixes().len())].clone();
    for _ in 0..rng.random_range(0..2u32) {
        base.push(rng.random_range(0..2u32) as u8);
    }
    let depth = rng.random_range(1..=3usize);
    let leaves = base.extensions(depth);
    let mut images: Vec<usize> = (0..leaves.len()).collect();
    for i in (1..images.len()).rev() {
        images.swap(i, rng.random_range(0..=i));
    }
    let mut cells: Vec<(Word, Word)> =
        leaves.iter().cloned().zip(images.iter().map(|&j| leaves[j].clone())).collect();
    for w in ClopenSet::cylinder(&base).complement().prefixes() {
        cells.push((w.clone(), w.clone()));
    }
    PrefixMap::from_cells(cells).expect("cells tile the space")
}

/// Like `random_element_in` but never the identity.
pub fn random_nontrivial_in(u: &ClopenSet, rng: &mut impl Rng) -> PrefixMap {
    loop {
        let g = random_element_in(u, rng);
        if !g.is_identity() {
            return g;
        }
    }
}

/// A random tree-pair element supported inside the first cylinder of `u`:
/// two independent random subdivisions of that cylinder with the same leaf
/// count, matched by a random bijection. Unlike `random_element_in`, cell
/// sources and targets can differ in length, so powers and supports with
/// exceptional fixed points get exercised.
pub fn random_tree_pair_in(u: &ClopenSet, splits: usize, rng: &mut impl Rng) -> PrefixMap {
    assert!(!u.is_empty(), "cannot sample inside the empty set");
    let base = &u.prefixes()[0];
    let sources = random_subdivision(base, splits, rng);
    let targets = random_subdivision(base, splits, rng);
    let mut images: Vec<usize> = (0..targets.len()).collect();
    for i in (1..images.len()).rev() {
        images.swap(i, rng.random_range(0..=i));
    }
    let mut cells: Vec<(Word, Word)> = sources
        .iter()
        .cloned()
        .zip(images.iter().map(|&j| targets[j].clone()))
        .collect();
    for w in ClopenSet::cylinder(base).complement().prefixes() {
        cells.push((w.clone(), w.clone()));
    }
    PrefixMap::from_cells(cells).expect("subdivisions tile the cylinder")
}

/// A complete prefix code under `base` produced by `splits` random leaf
/// splits, so it has `splits + 1` leaves.
fn random_subdivision(base: &Word, splits: usize, rng: &mut impl Rng) -> Vec<Word> {
    let mut leaves = vec![base.clone()];
    for _ in 0..splits {
        let i = rng.random_range(0..leaves.len());
        let leaf = leaves.swap_remove(i);
        leaves.push(leaf.child(0));
        leaves.push(leaf.child(1));
    }
    leaves.sort();
    leaves
}

/// Draws `count` elements of `S_f`: twelfth powers `g^12` of elements `g`
/// supported in the complement of `rsupp(f)` (such `g` have support disjoint
/// from `f`, hence are algebraically disjoint from it). Draws whose twelfth
/// power collapses to the identity are replaced by a five-cycle of cylinders
/// built at a seeded random spot, so every sample is nontrivial.
pub fn sample_sf(f: &PrefixMap, count: usize, seed: u64) -> Result<Vec<PrefixMap>> {
    let outside = f.rsupp().complement();
    if outside.is_empty() {
        return Err(Error::Precondition(
            "rsupp(f) is the whole space; S_f sampling needs a nonempty complement".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    while samples.len() < count {
        let g = random_element_in(&outside, &mut rng);
        let mut g12 = g.pow(12, DEFAULT_TABLE_BUDGET)?;
        if g12.is_identity() {
            let spot = random_cylinder_in(&outside, &mut rng);
            let five_cycle = order_witness(&ClopenSet::cylinder(&spot), 4)?;
            g12 = five_cycle.pow(12, DEFAULT_TABLE_BUDGET)?;
            assert!(!g12.is_identity(), "order five survives a twelfth power");
        }
        debug_assert!(g12.is_in_gu(&outside));
        samples.push(g12);
    }
    Ok(samples)
}

fn random_cylinder_in(u: &ClopenSet, rng: &mut impl Rng) -> Word {
    let mut w = u.prefixes()[rng.random_range(0..u.prefixes().len())].clone();
    for _ in 0..rng.random_range(0..3u32) {
        w.push(rng.random_range(0..2u32) as u8);
    }
    w
}

/// Result of testing `h` against a batch of `S_f` samples.
#[derive(Clone, Debug)]
pub struct SfMembership {
    /// Whether `h` commutes with every sample; evidence for `h ∈ G_rsupp(f)`,
    /// never a proof on its own.
    pub commutes_with_all: bool,
    /// The first non-commuting sample, a sound certificate that
    /// `h ∉ G_rsupp(f)`.
    pub certificate: Option<(usize, PrefixMap)>,
    /// The exact truth `rsupp(h) ⊆ rsupp(f)` for cross-validation.
    pub exact: bool,
}

pub fn gu_membership_via_sf(h: &PrefixMap, f: &PrefixMap, samples: &[PrefixMap]) -> SfMembership {
    let exact = h.is_in_gu(&f.rsupp());
    let certificate = samples
        .iter()
        .enumerate()
        .find(|(_, s)| !h.commutes_with(s))
        .map(|(i, s)| (i, s.clone()));
    if certificate.is_some() {
        // Membership implies commuting with all of S_f; a certificate is a
        // sound refutation.
        assert!(!exact, "certificate found for an element of G_U");
    }
    SfMembership { commutes_with_all: certificate.is_none(), certificate, exact }
}

/// For `h ∉ G_rsupp(f)`: a verified sample `g^12 ∈ S_f` not commuting with
/// `h`, built as a five-cycle inside a cylinder of `supp(h)` disjoint from
/// `rsupp(f)` and moved off itself by `h`.
#[derive(Clone, Debug)]
pub struct NonCommutingWitness {
    pub g: PrefixMap,
    pub g12: PrefixMap,
    /// The cylinder `W ⊆ supp(h) ∖ rsupp(f)` with `h(W) ∩ W = ∅`.
    pub window: ClopenSet,
}

pub fn construct_noncommuting_g12(
    h: &PrefixMap,
    f: &PrefixMap,
    depth_cap: usize,
) -> Result<NonCommutingWitness> {
    if h.is_in_gu(&f.rsupp()) {
        return Err(Error::Precondition("h already lies in G_rsupp(f)".into()));
    }
    let outside = h.rsupp().difference(&f.rsupp());
    let w = search_cylinder(&outside, depth_cap, "W with h(W) disjoint from W", |w| {
        let c = ClopenSet::cylinder(w);
        h.image_clopen(&c).is_disjoint(&c)
    })?;
    let window = ClopenSet::cylinder(&w);
    let g = order_witness(&window, 4)?;
    let g12 = g.pow(12, DEFAULT_TABLE_BUDGET)?;
    assert!(!g12.is_identity(), "order five survives a twelfth power");
    assert!(disjoint_supports(&g, f), "sample must avoid supp(f)");
    assert!(!h.commutes_with(&g12), "h must fail to commute with the sample");
    Ok(NonCommutingWitness { g, g12, window })
}

/// Answer to "is `G_U ⊆ G_V`?", equivalently `U ⊆ V`.
#[derive(Clone, Debug)]
pub enum InclusionAnswer {
    Included,
    /// A nontrivial element of `G_U` outside `G_V`, supported in a cylinder
    /// of `U ∖ V`.
    Separator { witness: PrefixMap, window: ClopenSet },
}

pub fn gu_inclusion_witness(u: &ClopenSet, v: &ClopenSet) -> Result<InclusionAnswer> {
    if u.is_empty() {
        return Err(Error::Precondition("U must be nonempty".into()));
    }
    if v.includes(u) {
        return Ok(InclusionAnswer::Included);
    }
    let diff = u.difference(v);
    let w = diff.prefixes()[0].clone();
    let witness = PrefixMap::child_swap(&w);
    assert!(witness.is_in_gu(u));
    assert!(!witness.is_in_gu(v));
    Ok(InclusionAnswer::Separator { witness, window: ClopenSet::cylinder(&w) })
}

/// How a probe witness was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessSource {
    /// Found by scanning the finite witness pool.
    Pool,
    /// Built by the disjoint-supports construction.
    Constructed,
    /// Built by the first-digit-flip construction.
    FlipConstruction,
}

#[derive(Clone, Debug)]
pub struct ProbeEntry {
    pub h: PrefixMap,
    pub witness: Option<(PrefixMap, PrefixMap, WitnessSource)>,
    /// `[f1,[f2,h]]` for the recorded witness.
    pub outer: Option<PrefixMap>,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    /// One entry per pool element with `[f,h] ≠ 1`, in pool order.
    pub entries: Vec<ProbeEntry>,
    pub all_witnessed: bool,
}

/// Bounded evidence for "`g` is algebraically disjoint from `f`" in the
/// prefix-exchange group: the unbounded quantifiers of the definition are
/// replaced by finite pools. For each `h` in `h_pool` with `[f,h] ≠ 1` this
/// finds a verified witness pair in `witness_pool ∩ C(g)`, falling back to
/// the disjoint-supports construction and, for `f = g` the first-digit flip,
/// to the order-two commuting-conjugates construction. A missing witness is
/// evidence of failure, never a proof.
pub fn bounded_alg_disjoint_probe(
    g: &PrefixMap,
    f: &PrefixMap,
    h_pool: &[PrefixMap],
    witness_pool: &[PrefixMap],
) -> ProbeReport {
    let centralizer: Vec<&PrefixMap> =
        witness_pool.iter().filter(|x| x.commutes_with(g)).collect();
    let mut entries = Vec::new();
    for h in h_pool {
        if f.commutator(h).is_identity() {
            continue;
        }
        let mut witness = None;
        'pairs: for f1 in &centralizer {
            for f2 in &centralizer {
                let outer = f1.commutator(&f2.commutator(h));
                if !outer.is_identity() && outer.commutes_with(g) {
                    witness = Some(((*f1).clone(), (*f2).clone(), WitnessSource::Pool, outer));
                    break 'pairs;
                }
            }
        }
        if witness.is_none() && disjoint_supports(f, g) {
            if let Ok(w) = construct_f1_f2(f, g, h, super::search::DEFAULT_SEARCH_DEPTH_CAP) {
                witness = Some((w.f1, w.f2, WitnessSource::Constructed, w.outer));
            }
        }
        if witness.is_none() && f == g && *f == PrefixMap::first_digit_flip() {
            if let Ok(report) =
                super::appendix::appendix_verify(h, super::search::DEFAULT_SEARCH_DEPTH_CAP)
            {
                if report.all_pass() {
                    witness = Some((
                        f.clone(),
                        report.f2,
                        WitnessSource::FlipConstruction,
                        report.commutator,
                    ));
                }
            }
        }
        entries.push(match witness {
            Some((f1, f2, source, outer)) => {
                ProbeEntry { h: h.clone(), witness: Some((f1, f2, source)), outer: Some(outer) }
            }
            None => ProbeEntry { h: h.clone(), witness: None, outer: None },
        });
    }
    let all_witnessed = entries.iter().all(|e| e.witness.is_some());
    ProbeReport { entries, all_witnessed }
}
