//! s-torsion pairs: checking, enumeration, the inclusion poset, intervals,
//! hearts, and machine verification of the interval/heart correspondence.
//!
//! A pair of subcategories `(T, F)` is an s-torsion pair when every object
//! admits a conflation with sub in `T` and quotient in `F` (STP1), `Hom(T, F)`
//! vanishes (STP2), and `E^{-1}(T, F)` vanishes (STP3).  Pairs are ordered by
//! inclusion of torsion classes.  For nested pairs `t1 <= t2` the heart
//! `T2 /\ F1` is extension-closed, and `Phi(T,F) = (T /\ F1, T2 /\ F)`,
//! `Psi(X,Y) = (T1 * X, Y * F2)` are mutually inverse poset isomorphisms
//! between the interval `[t1, t2]` and the s-torsion pairs of the heart.

use rayon::prelude::*;
use serde::Serialize;

use crate::category::{FiniteExtCat, Obj, Subcat};
use crate::error::{Error, Result};
use crate::report::VerifyReport;

/// Dense candidate enumeration scans `2^n` torsion-class candidates.
pub const MAX_ENUM_INDECS: usize = 24;

/// The three defining conditions, evaluated separately.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StpFlags {
    pub stp1: bool,
    pub stp2: bool,
    pub stp3: bool,
}

impl StpFlags {
    pub fn all(&self) -> bool {
        self.stp1 && self.stp2 && self.stp3
    }
}

/// A candidate or validated s-torsion pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct STorsPair {
    pub torsion: Subcat,
    pub free: Subcat,
    pub flags: StpFlags,
}

/// Evaluate the three conditions for a pair of subcategories.
pub fn is_storsion(cat: &FiniteExtCat, torsion: Subcat, free: Subcat) -> STorsPair {
    let stp1 = (0..cat.len()).all(|m| cat.indec_in_star(m, &torsion, &free));
    let stp2 = cat.hom_vanishes(&torsion, &free);
    let stp3 = cat.negext_vanishes(&torsion, &free);
    STorsPair {
        torsion,
        free,
        flags: StpFlags { stp1, stp2, stp3 },
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Skip candidate torsion classes that are not extension-closed.  Sound:
    /// torsion classes of s-torsion pairs are always extension-closed.
    pub prefilter_extension_closed: bool,
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            prefilter_extension_closed: true,
            parallel: true,
        }
    }
}

/// The poset of all s-torsion pairs, ordered by torsion-class inclusion.
/// Pairs are sorted by the torsion class's sorted member-name list, and Hasse
/// edges run from the larger pair to the smaller one.
#[derive(Clone, Debug)]
pub struct StorsPoset {
    pub pairs: Vec<STorsPair>,
    pub hasse_edges: Vec<(usize, usize)>,
}

/// Enumerate all s-torsion pairs.  Candidates are all subsets `T` with
/// `F := T^perp`; completeness holds because the torsion-free class of an
/// s-torsion pair is exactly the right perp of its torsion class.
pub fn enumerate_stors(cat: &FiniteExtCat) -> Result<StorsPoset> {
    enumerate_stors_with(cat, &EnumOptions::default())
}

pub fn enumerate_stors_with(cat: &FiniteExtCat, opts: &EnumOptions) -> Result<StorsPoset> {
    let n = cat.len();
    if n > MAX_ENUM_INDECS {
        return Err(Error::TooLarge {
            kind: "indecomposables",
            got: n,
            max: MAX_ENUM_INDECS,
        });
    }
    let total: u64 = 1 << n;
    let accept = |mask: u64| -> Option<STorsPair> {
        let torsion = Subcat::from_mask(mask);
        if opts.prefilter_extension_closed && !cat.is_extension_closed(&torsion) {
            return None;
        }
        let free = cat.right_perp(&torsion);
        let pair = is_storsion(cat, torsion, free);
        pair.flags.all().then_some(pair)
    };
    let mut pairs: Vec<STorsPair> = if opts.parallel && n >= 14 {
        (0..total).into_par_iter().filter_map(accept).collect()
    } else {
        (0..total).filter_map(accept).collect()
    };
    pairs.sort_by(|a, b| {
        cat.member_names(&a.torsion)
            .cmp(&cat.member_names(&b.torsion))
    });
    let hasse_edges = hasse(&pairs);
    Ok(StorsPoset { pairs, hasse_edges })
}

/// Covering relations of the inclusion order, as `(upper, lower)` index
/// pairs sorted lexicographically.
pub fn hasse(pairs: &[STorsPair]) -> Vec<(usize, usize)> {
    let leq = |i: usize, j: usize| pairs[i].torsion.is_subset_of(&pairs[j].torsion);
    let mut edges = Vec::new();
    for upper in 0..pairs.len() {
        for lower in 0..pairs.len() {
            if lower == upper || !leq(lower, upper) {
                continue;
            }
            let strictly_between = (0..pairs.len())
                .any(|m| m != lower && m != upper && leq(lower, m) && leq(m, upper));
            if !strictly_between {
                edges.push((upper, lower));
            }
        }
    }
    edges.sort_unstable();
    edges
}

impl StorsPoset {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.pairs[i].torsion.is_subset_of(&self.pairs[j].torsion)
    }

    pub fn position_by_torsion(&self, torsion: &Subcat) -> Option<usize> {
        self.pairs.iter().position(|p| p.torsion == *torsion)
    }

    /// Locate a pair by the (unordered) member names of its torsion class.
    pub fn find_by_members<'a, I>(&self, cat: &FiniteExtCat, names: I) -> Result<Option<usize>>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let t = cat.subcat(names)?;
        Ok(self.position_by_torsion(&t))
    }

    pub fn label(&self, cat: &FiniteExtCat, i: usize) -> String {
        format!("{{{}}}", cat.member_names(&self.pairs[i].torsion).join(","))
    }

    pub fn to_dot(&self, cat: &FiniteExtCat) -> String {
        let mut out = String::from("digraph stors {\n");
        for i in 0..self.pairs.len() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, self.label(cat, i)));
        }
        for &(upper, lower) in &self.hasse_edges {
            out.push_str(&format!("  n{} -> n{};\n", upper, lower));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_string(&self, cat: &FiniteExtCat) -> String {
        #[derive(Serialize)]
        struct PairJson {
            torsion: Vec<String>,
            free: Vec<String>,
            flags: StpFlags,
        }
        #[derive(Serialize)]
        struct PosetJson {
            pairs: Vec<PairJson>,
            hasse_edges: Vec<(usize, usize)>,
        }
        let value = PosetJson {
            pairs: self
                .pairs
                .iter()
                .map(|p| PairJson {
                    torsion: cat
                        .member_names(&p.torsion)
                        .iter()
                        .map(|s| s.to_string())
                        .collect(),
                    free: cat
                        .member_names(&p.free)
                        .iter()
                        .map(|s| s.to_string())
                        .collect(),
                    flags: p.flags,
                })
                .collect(),
            hasse_edges: self.hasse_edges.clone(),
        };
        let mut s = serde_json::to_string_pretty(&value).expect("poset serializes");
        s.push('\n');
        s
    }
}

/// For a valid pair, split `M` into its torsion part and torsion-free part
/// using the unique qualifying conflation of each summand.
pub fn canonical_decomposition(
    cat: &FiniteExtCat,
    pair: &STorsPair,
    m: &Obj,
) -> Result<(Obj, Obj)> {
    if !pair.flags.all() {
        return Err(Error::InvalidPair);
    }
    let mut torsion_part = Obj::zero();
    let mut free_part = Obj::zero();
    for &s in m.summands() {
        let mut found: Option<(&Obj, &Obj)> = None;
        for row in cat.conf_rows(s as usize) {
            if row.ends_in(&pair.torsion, &pair.free) {
                match found {
                    None => found = Some((&row.sub, &row.quot)),
                    Some(prev) if prev == (&row.sub, &row.quot) => {}
                    Some(_) => {
                        return Err(Error::AmbiguousCanonicalConflation(
                            cat.name(s as usize).to_string(),
                        ))
                    }
                }
            }
        }
        let (sub, quot) =
            found.ok_or_else(|| Error::NoCanonicalConflation(cat.name(s as usize).to_string()))?;
        torsion_part = torsion_part.sum(sub);
        free_part = free_part.sum(quot);
    }
    Ok((torsion_part, free_part))
}

/// An interval `[t1, t2]` together with its heart `T2 /\ F1`, carried as a
/// restricted category.
#[derive(Clone, Debug)]
pub struct Interval {
    pub t1: STorsPair,
    pub t2: STorsPair,
    pub heart: Subcat,
    pub heart_cat: FiniteExtCat,
    to_ambient: Vec<u32>,
}

/// Form the interval and its heart. Fails when `t1 <= t2` does not hold or
/// the heart is not extension-closed (which signals broken input data).
pub fn heart_of(cat: &FiniteExtCat, t1: &STorsPair, t2: &STorsPair) -> Result<Interval> {
    if !t1.torsion.is_subset_of(&t2.torsion) {
        return Err(Error::NotComparable);
    }
    let heart = t2.torsion.intersection(&t1.free);
    let heart_cat = cat.restrict_to(&heart)?;
    let to_ambient = heart.iter().map(|i| i as u32).collect();
    Ok(Interval {
        t1: *t1,
        t2: *t2,
        heart,
        heart_cat,
        to_ambient,
    })
}

impl Interval {
    pub fn contains(&self, t: &STorsPair) -> bool {
        self.t1.torsion.is_subset_of(&t.torsion) && t.torsion.is_subset_of(&self.t2.torsion)
    }

    /// Translate a heart-indexed subcategory to the ambient indexing.
    pub fn to_ambient(&self, s: &Subcat) -> Subcat {
        let mut out = Subcat::empty();
        for i in s.iter() {
            out.insert(self.to_ambient[i] as usize);
        }
        out
    }

    /// Translate an ambient subcategory contained in the heart.
    pub fn to_heart(&self, s: &Subcat) -> Subcat {
        let mut out = Subcat::empty();
        for (h, &a) in self.to_ambient.iter().enumerate() {
            if s.contains(a as usize) {
                out.insert(h);
            }
        }
        out
    }

    /// `Phi(T, F) = (T /\ F1, T2 /\ F)` as a pair in the heart, with all
    /// three conditions re-verified there.
    pub fn phi(&self, t: &STorsPair) -> Result<STorsPair> {
        if !self.contains(t) {
            return Err(Error::OutsideInterval);
        }
        let x = self.to_heart(&t.torsion.intersection(&self.t1.free));
        let y = self.to_heart(&self.t2.torsion.intersection(&t.free));
        Ok(is_storsion(&self.heart_cat, x, y))
    }

    /// `Psi(X, Y) = (T1 * X, Y * F2)`, computed through the conflation table
    /// and cross-checked against the perp operators.  Disagreement between the
    /// two routes signals missing conflation rows and is reported as an error
    /// rather than trusting either side.
    pub fn psi(&self, cat: &FiniteExtCat, x: &STorsPair) -> Result<STorsPair> {
        let revalidated = is_storsion(&self.heart_cat, x.torsion, x.free);
        if !revalidated.flags.all() {
            return Err(Error::InvalidHeartPair(format!(
                "({{{}}}, {{{}}}) fails stp1={} stp2={} stp3={}",
                self.heart_cat.member_names(&x.torsion).join(","),
                self.heart_cat.member_names(&x.free).join(","),
                revalidated.flags.stp1,
                revalidated.flags.stp2,
                revalidated.flags.stp3
            )));
        }
        let x_amb = self.to_ambient(&x.torsion);
        let y_amb = self.to_ambient(&x.free);
        let torsion = cat.star_subcat(&self.t1.torsion, &x_amb);
        let free = cat.star_subcat(&y_amb, &self.t2.free);
        let by_perp_free = cat.right_perp(&torsion);
        let by_perp_torsion = cat.left_perp(&free);
        if by_perp_free != free || by_perp_torsion != torsion {
            return Err(Error::ConflationDataIncomplete(format!(
                "star gives ({{{}}}, {{{}}}) but perps give ({{{}}}, {{{}}})",
                cat.member_names(&torsion).join(","),
                cat.member_names(&free).join(","),
                cat.member_names(&by_perp_torsion).join(","),
                cat.member_names(&by_perp_free).join(",")
            )));
        }
        Ok(is_storsion(cat, torsion, free))
    }
}

/// `T = T' * (T /\ F')` and `F' = (T /\ F') * F` for `t' <= t`.
pub fn verify_heart_lemma(cat: &FiniteExtCat, t: &STorsPair, t_prime: &STorsPair) -> Result<bool> {
    if !t_prime.torsion.is_subset_of(&t.torsion) {
        return Err(Error::NotComparable);
    }
    let mid = t.torsion.intersection(&t_prime.free);
    Ok(cat.star_subcat(&t_prime.torsion, &mid) == t.torsion
        && cat.star_subcat(&mid, &t.free) == t_prime.free)
}

/// Shift-closure report for a pair satisfying STP1 and STP2 in a category
/// with shift data: STP3, `Sigma T <= T`, and `F <= Sigma F` are equivalent.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ShiftReport {
    pub stp3: bool,
    pub shift_torsion_contained: bool,
    pub free_in_shifted_free: bool,
    pub lemma_consistent: bool,
}

pub fn shift_closed_check(cat: &FiniteExtCat, pair: &STorsPair) -> Result<ShiftReport> {
    if !cat.has_shift() {
        return Err(Error::NoShiftData);
    }
    let stp3 = cat.negext_vanishes(&pair.torsion, &pair.free);
    let shifted_t = cat.shift_subcat(&pair.torsion).expect("shift present");
    let shift_torsion_contained = shifted_t.is_subset_of(&pair.torsion);
    // F <= Sigma F holds iff Sigma^{-1} F <= F
    let unshifted_f = cat.shift_inv_subcat(&pair.free).expect("shift present");
    let free_in_shifted_free = unshifted_f.is_subset_of(&pair.free);
    Ok(ShiftReport {
        stp3,
        shift_torsion_contained,
        free_in_shifted_free,
        lemma_consistent: stp3 == shift_torsion_contained
            && shift_torsion_contained == free_in_shifted_free,
    })
}

/// Verify the interval/heart correspondence for `[t1, t2]`, enumerating the
/// ambient poset from scratch.
pub fn verify_main_theorem(
    cat: &FiniteExtCat,
    t1: &STorsPair,
    t2: &STorsPair,
) -> Result<VerifyReport> {
    let poset = enumerate_stors(cat)?;
    let i1 = poset
        .position_by_torsion(&t1.torsion)
        .ok_or(Error::InvalidPair)?;
    let i2 = poset
        .position_by_torsion(&t2.torsion)
        .ok_or(Error::InvalidPair)?;
    verify_main_theorem_in(cat, &poset, i1, i2)
}

/// As [`verify_main_theorem`], reusing an already-enumerated poset.
pub fn verify_main_theorem_in(
    cat: &FiniteExtCat,
    poset: &StorsPoset,
    i1: usize,
    i2: usize,
) -> Result<VerifyReport> {
    if !poset.leq(i1, i2) {
        return Err(Error::NotComparable);
    }
    let interval = heart_of(cat, &poset.pairs[i1], &poset.pairs[i2])?;
    let members: Vec<usize> = (0..poset.len())
        .filter(|&k| poset.leq(i1, k) && poset.leq(k, i2))
        .collect();
    let heart_poset = enumerate_stors(&interval.heart_cat)?;

    let mut report = VerifyReport::new();

    report.push(
        "interval_matches_heart_cardinality",
        members.len() == heart_poset.len(),
    );
    if members.len() != heart_poset.len() {
        report.counterexamples.push(format!(
            "interval has {} pairs but the heart has {}",
            members.len(),
            heart_poset.len()
        ));
    }

    // (a) Phi lands in stors of the heart
    let mut phi_idx: Vec<Option<usize>> = Vec::with_capacity(members.len());
    let mut phi_ok = true;
    for &k in &members {
        let image = interval.phi(&poset.pairs[k])?;
        let found = image.flags.all().then(|| {
            heart_poset
                .position_by_torsion(&image.torsion)
                .filter(|&p| heart_poset.pairs[p].free == image.free)
        });
        let slot = found.flatten();
        if slot.is_none() {
            phi_ok = false;
            report.counterexamples.push(format!(
                "phi({}) is not an s-torsion pair of the heart",
                poset.label(cat, k)
            ));
        }
        phi_idx.push(slot);
    }
    report.push("phi_well_defined", phi_ok);

    // (b) Psi maps back into the interval
    let mut psi_idx: Vec<Option<usize>> = Vec::with_capacity(heart_poset.len());
    let mut psi_ok = true;
    for (xi, x) in heart_poset.pairs.iter().enumerate() {
        match interval.psi(cat, x) {
            Ok(back) if back.flags.all() && interval.contains(&back) => {
                let slot = poset
                    .position_by_torsion(&back.torsion)
                    .filter(|&p| poset.pairs[p].free == back.free);
                if slot.is_none() {
                    psi_ok = false;
                    report.counterexamples.push(format!(
                        "psi({}) is not in the ambient poset",
                        heart_poset.label(&interval.heart_cat, xi)
                    ));
                }
                psi_idx.push(slot);
            }
            Ok(_) => {
                psi_ok = false;
                report.counterexamples.push(format!(
                    "psi({}) leaves the interval or fails the conditions",
                    heart_poset.label(&interval.heart_cat, xi)
                ));
                psi_idx.push(None);
            }
            Err(e) => {
                psi_ok = false;
                report.counterexamples.push(format!(
                    "psi({}): {}",
                    heart_poset.label(&interval.heart_cat, xi),
                    e
                ));
                psi_idx.push(None);
            }
        }
    }
    report.push("psi_well_defined", psi_ok);

    // (c) mutually inverse
    let mut inverse_ok = phi_ok && psi_ok;
    if inverse_ok {
        for (pos, &k) in members.iter().enumerate() {
            let round = phi_idx[pos].and_then(|h| psi_idx[h]);
            if round != Some(k) {
                inverse_ok = false;
                report
                    .counterexamples
                    .push(format!("psi(phi({})) != id", poset.label(cat, k)));
            }
        }
        for (xi, slot) in psi_idx.iter().enumerate() {
            let back = slot
                .and_then(|amb| members.iter().position(|&k| k == amb))
                .and_then(|pos| phi_idx[pos]);
            if back != Some(xi) {
                inverse_ok = false;
                report.counterexamples.push(format!(
                    "phi(psi({})) != id",
                    heart_poset.label(&interval.heart_cat, xi)
                ));
            }
        }
    }
    report.push("mutually_inverse", inverse_ok);

    // (d) order preservation in both directions
    let mut order_ok = phi_ok && psi_ok;
    if order_ok {
        for (pa, &a) in members.iter().enumerate() {
            for (pb, &b) in members.iter().enumerate() {
                if poset.leq(a, b) && !heart_poset.leq(phi_idx[pa].unwrap(), phi_idx[pb].unwrap()) {
                    order_ok = false;
                    report.counterexamples.push(format!(
                        "phi does not preserve {} <= {}",
                        poset.label(cat, a),
                        poset.label(cat, b)
                    ));
                }
            }
        }
        for a in 0..heart_poset.len() {
            for b in 0..heart_poset.len() {
                if heart_poset.leq(a, b) && !poset.leq(psi_idx[a].unwrap(), psi_idx[b].unwrap()) {
                    order_ok = false;
                    report.counterexamples.push(format!(
                        "psi does not preserve {} <= {}",
                        heart_poset.label(&interval.heart_cat, a),
                        heart_poset.label(&interval.heart_cat, b)
                    ));
                }
            }
        }
    }
    report.push("order_preserving", order_ok);

    // (e) hearts are preserved: heart(t, t') = heart(phi t, phi t')
    let mut hearts_ok = phi_ok;
    if hearts_ok {
        for (pa, &a) in members.iter().enumerate() {
            for (pb, &b) in members.iter().enumerate() {
                if !poset.leq(a, b) {
                    continue;
                }
                let ambient_heart = poset.pairs[b].torsion.intersection(&poset.pairs[a].free);
                let ha = &heart_poset.pairs[phi_idx[pa].unwrap()];
                let hb = &heart_poset.pairs[phi_idx[pb].unwrap()];
                let image_heart = interval.to_ambient(&hb.torsion.intersection(&ha.free));
                if ambient_heart != image_heart {
                    hearts_ok = false;
                    report.counterexamples.push(format!(
                        "heart of [{}, {}] is not preserved",
                        poset.label(cat, a),
                        poset.label(cat, b)
                    ));
                }
            }
        }
    }
    report.push("hearts_preserved", hearts_ok);

    Ok(report)
}
