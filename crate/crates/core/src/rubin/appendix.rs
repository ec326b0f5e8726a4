use super::search::search_cylinder;
use crate::clopen::{ClopenSet, Word};
use crate::error::{Error, Result};
use crate::homeo::PrefixMap;

/// The six exact checks of the first-digit-flip self-disjointness
/// construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AppendixChecks {
    /// `[f,[f2,h]]` equals the eight-conjugate product
    /// `k^f k k^{h⁻¹f} k^{fh⁻¹f} k^{fh⁻¹} k^{h⁻¹} k^f k`.
    pub eight_conjugate_identity: bool,
    /// The simplification to `k^{h⁻¹} k^{h⁻¹f} k^{fh⁻¹} k^{fh⁻¹f}`.
    pub four_conjugate_identity: bool,
    /// `[f,[f2,h]] ≠ 1`.
    pub nontrivial: bool,
    /// `[f,[f2,h]]` commutes with `f`.
    pub commutes_with_f: bool,
    /// The six conjugates of `k` appearing above commute pairwise.
    pub conjugates_commute: bool,
    /// `f(U)`, `f^h(U)`, `[h⁻¹,f](U)` are disjoint from `U`, and hence
    /// `hf(U)`, `fh(U)`, `h^f(U)` are disjoint from `h(U)`.
    pub translates_disjoint: bool,
}

impl AppendixChecks {
    pub fn all(&self) -> bool {
        self.eight_conjugate_identity
            && self.four_conjugate_identity
            && self.nontrivial
            && self.commutes_with_f
            && self.conjugates_commute
            && self.translates_disjoint
    }

    pub fn named(&self) -> [(&'static str, bool); 6] {
        [
            ("eight_conjugate_identity", self.eight_conjugate_identity),
            ("four_conjugate_identity", self.four_conjugate_identity),
            ("nontrivial", self.nontrivial),
            ("commutes_with_f", self.commutes_with_f),
            ("conjugates_commute", self.conjugates_commute),
            ("translates_disjoint", self.translates_disjoint),
        ]
    }
}

/// The verified construction showing the first-digit flip algebraically
/// disjoint from itself, instantiated at a concrete `h`.
#[derive(Clone, Debug)]
pub struct AppendixReport {
    pub h: PrefixMap,
    /// The cylinder `U` on which every ratio of the six translates of the
    /// identity either acts trivially or moves `U` off itself.
    pub window: Word,
    /// The order-two child swap of the window.
    pub k: PrefixMap,
    /// `f2 = k·k^f`, an element of the centralizer of `f`.
    pub f2: PrefixMap,
    /// `[f,[f2,h]]`, the witness commutator.
    pub commutator: PrefixMap,
    pub checks: AppendixChecks,
}

impl AppendixReport {
    pub fn all_pass(&self) -> bool {
        self.checks.all()
    }
}

/// Runs the construction for `f` the first-digit flip and the given `h` with
/// `[f,h] ≠ 1`, verifying every identity as an exact equality of reduced
/// tables.
///
/// The element set is `S = {1, f, h, hf, fh, h^f}` and the ratio set is
/// `S' = {s₁⁻¹·s₂ | s₁, s₂ ∈ S}`. The search finds a cylinder `U` such that
/// every `s ∈ S'` is either the identity on `U` or moves `U` off itself,
/// with `[h⁻¹,f]` in the moving case; `k` is the child swap of `U`.
pub fn appendix_verify(h: &PrefixMap, depth_cap: usize) -> Result<AppendixReport> {
    let f = PrefixMap::first_digit_flip();
    if f.commutator(h).is_identity() {
        return Err(Error::Precondition("[f,h] = 1: h commutes with the flip".into()));
    }

    let hf = h.compose(&f);
    let fh = f.compose(h);
    let h_conj_f = h.conjugate(&f);
    let s: Vec<PrefixMap> =
        vec![PrefixMap::identity(), f.clone(), h.clone(), hf, fh, h_conj_f];
    let mut ratios: Vec<PrefixMap> = Vec::new();
    for s1 in &s {
        for s2 in &s {
            let r = s1.inverse().compose(s2);
            if !ratios.contains(&r) {
                ratios.push(r);
            }
        }
    }
    let comm = h.inverse().commutator(&f);
    debug_assert!(ratios.contains(&comm));

    let window = search_cylinder(&ClopenSet::whole(), depth_cap, "appendix window U", |w| {
        let u = ClopenSet::cylinder(w);
        if !comm.image_clopen(&u).is_disjoint(&u) {
            return false;
        }
        ratios
            .iter()
            .all(|s| s.is_identity_on(&u) || s.image_clopen(&u).is_disjoint(&u))
    })?;
    let u = ClopenSet::cylinder(&window);

    let k = PrefixMap::child_swap(&window);
    let kf = k.conjugate(&f);
    let f2 = k.compose(&kf);
    debug_assert!(f2.commutes_with(&f));

    let h_inv = h.inverse();
    let k_hi = k.conjugate(&h_inv);
    let k_hif = k.conjugate(&h_inv.compose(&f));
    let k_fhi = k.conjugate(&f.compose(&h_inv));
    let k_fhif = k.conjugate(&f.compose(&h_inv).compose(&f));

    let commutator = f.commutator(&f2.commutator(h));

    let eight = [&kf, &k, &k_hif, &k_fhif, &k_fhi, &k_hi, &kf, &k]
        .into_iter()
        .cloned()
        .reduce(|acc, x| acc.compose(&x))
        .expect("nonempty product");
    let four = [&k_hi, &k_hif, &k_fhi, &k_fhif]
        .into_iter()
        .cloned()
        .reduce(|acc, x| acc.compose(&x))
        .expect("nonempty product");

    let conjugates = [&k, &kf, &k_hi, &k_hif, &k_fhi, &k_fhif];
    let conjugates_commute = conjugates
        .iter()
        .enumerate()
        .all(|(i, a)| conjugates[i + 1..].iter().all(|b| a.commutes_with(b)));

    // Premises: f and f^h are fixed-point free and lie in S', so they move
    // U off itself; so does [h⁻¹,f] by the window search. Consequences:
    // hf(U), fh(U), h^f(U) are each disjoint from h(U).
    let h_u = h.image_clopen(&u);
    let translates_disjoint = f.image_clopen(&u).is_disjoint(&u)
        && f.conjugate(h).image_clopen(&u).is_disjoint(&u)
        && comm.image_clopen(&u).is_disjoint(&u)
        && h.compose(&f).image_clopen(&u).is_disjoint(&h_u)
        && f.compose(h).image_clopen(&u).is_disjoint(&h_u)
        && h.conjugate(&f).image_clopen(&u).is_disjoint(&h_u);

    let checks = AppendixChecks {
        eight_conjugate_identity: eight == commutator,
        four_conjugate_identity: four == commutator,
        nontrivial: !commutator.is_identity(),
        commutes_with_f: commutator.commutes_with(&f),
        conjugates_commute,
        translates_disjoint,
    };

    Ok(AppendixReport { h: h.clone(), window, k, f2, commutator, checks })
}
