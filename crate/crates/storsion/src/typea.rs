//! Module categories of type-A path algebras, built as explicit finite
//! extriangulated categories.
//!
//! The indecomposables are the interval modules `[a,b]`: one-dimensional
//! vector spaces on the vertices of `[a,b]` with identity maps along the
//! arrows inside the support.  Hom dimensions are defined by the commutation
//! linear system of the representations and computed by exact integer rank;
//! first extensions come from the Euler form of the hereditary algebra,
//! `dim Ext(C,A) = dim Hom(C,A) - chi(dim C, dim A)`.  Conflations of an
//! interval module are its submodule/quotient splittings: submodules are
//! exactly the successor-closed subsets of the support-restricted quiver, and
//! sub and quotient decompose into the connected components.
//!
//! The negative first extension is either identically zero (the exact
//! structure of the abelian category) or a copy of the first extension (the
//! hereditary structure whose s-torsion pairs are parametrized by
//! successor-closed vertex subsets).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::category::{DimMat, FiniteExtCat, Subcat};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::report::VerifyReport;
use crate::torsion::{enumerate_stors, is_storsion, STorsPair};

/// Direction of the arrow between consecutive vertices `i` and `i+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dir {
    /// `i -> i+1`
    R,
    /// `i <- i+1`
    L,
}

/// An orientation of the type-A line quiver on `n` vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    dirs: Vec<Dir>,
}

impl Orientation {
    pub fn new(dirs: Vec<Dir>) -> Self {
        Orientation { dirs }
    }

    pub fn n(&self) -> usize {
        self.dirs.len() + 1
    }

    pub fn dirs(&self) -> &[Dir] {
        &self.dirs
    }

    /// The compact form, e.g. `1>2<3<4`.
    pub fn compact(&self) -> String {
        let mut s = String::from("1");
        for (i, d) in self.dirs.iter().enumerate() {
            s.push(match d {
                Dir::R => '>',
                Dir::L => '<',
            });
            s.push_str(&(i + 2).to_string());
        }
        s
    }

    /// The underlying quiver, with vertices named `1..=n`.
    pub fn quiver(&self) -> Quiver {
        let vertices: Vec<String> = (1..=self.n()).map(|v| v.to_string()).collect();
        let arrows: Vec<(String, String)> = self
            .dirs
            .iter()
            .enumerate()
            .map(|(i, d)| match d {
                Dir::R => ((i + 1).to_string(), (i + 2).to_string()),
                Dir::L => ((i + 2).to_string(), (i + 1).to_string()),
            })
            .collect();
        Quiver::new(vertices, &arrows).expect("line quivers are acyclic")
    }

    /// Arrow at position `p` (0-based, between vertices `p+1` and `p+2`),
    /// returned as 1-based `(source, target)`.
    fn arrow_at(&self, p: usize) -> (usize, usize) {
        match self.dirs[p] {
            Dir::R => (p + 1, p + 2),
            Dir::L => (p + 2, p + 1),
        }
    }

    /// All orientations on `n` vertices.
    pub fn all(n: usize) -> Vec<Orientation> {
        assert!((1..=16).contains(&n));
        (0..1u32 << (n - 1))
            .map(|bits| {
                Orientation::new(
                    (0..n - 1)
                        .map(|i| if bits >> i & 1 == 1 { Dir::L } else { Dir::R })
                        .collect(),
                )
            })
            .collect()
    }
}

impl FromStr for Orientation {
    type Err = Error;

    /// Accepts `R L L`, `RLL`, `><<` and the compact form `1>2<3<4`
    /// (a single `1` denotes the one-vertex quiver).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadOrientation(s.to_string());
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(bad());
        }
        if trimmed.chars().any(|c| c.is_ascii_digit()) {
            let mut dirs = Vec::new();
            let mut rest = trimmed;
            let mut expected = 1usize;
            loop {
                let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
                if digits.is_empty() || digits.parse::<usize>().ok() != Some(expected) {
                    return Err(bad());
                }
                rest = &rest[digits.len()..];
                match rest.chars().next() {
                    None => break,
                    Some('>') => dirs.push(Dir::R),
                    Some('<') => dirs.push(Dir::L),
                    Some(_) => return Err(bad()),
                }
                rest = &rest[1..];
                expected += 1;
            }
            return Ok(Orientation::new(dirs));
        }
        let mut dirs = Vec::new();
        for c in trimmed.chars() {
            match c {
                'R' | 'r' | '>' => dirs.push(Dir::R),
                'L' | 'l' | '<' => dirs.push(Dir::L),
                c if c.is_whitespace() => {}
                _ => return Err(bad()),
            }
        }
        if dirs.is_empty() {
            return Err(bad());
        }
        Ok(Orientation::new(dirs))
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Which negative first extension the generated category carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NegExtMode {
    /// `E^{-1} = 0`: the exact-category structure.
    Zero,
    /// `E^{-1} = Ext^1`: the hereditary structure.
    Ext1,
}

impl FromStr for NegExtMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(NegExtMode::Zero),
            "ext1" => Ok(NegExtMode::Ext1),
            other => Err(Error::BadMode(other.to_string())),
        }
    }
}

impl fmt::Display for NegExtMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NegExtMode::Zero => "zero",
            NegExtMode::Ext1 => "ext1",
        })
    }
}

/// The indecomposable supported on the vertex interval `[a, b]`, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IntervalModule {
    pub a: usize,
    pub b: usize,
}

impl IntervalModule {
    pub fn name(&self) -> String {
        format!("[{},{}]", self.a, self.b)
    }

    pub fn supports(&self, v: usize) -> bool {
        self.a <= v && v <= self.b
    }
}

/// All `n(n+1)/2` interval modules, sorted by `(a, b)`.
pub fn interval_modules(n: usize) -> Vec<IntervalModule> {
    let mut v = Vec::with_capacity(n * (n + 1) / 2);
    for a in 1..=n {
        for b in a..=n {
            v.push(IntervalModule { a, b });
        }
    }
    v
}

/// Rank of a small integer matrix by fraction-free Gaussian elimination.
fn rank_int(mut rows: Vec<Vec<i64>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = 1i64;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                rows[r][c] = (rows[r][c] * rows[rank][col] - rows[r][col] * rows[rank][c]) / prev;
            }
            rows[r][col] = 0;
        }
        prev = rows[rank][col];
        rank += 1;
    }
    rank
}

/// `dim Hom(M, N)` as the solution-space dimension of the commutation system
/// for representation maps between the two interval modules.
pub fn hom_dim_intervals(orient: &Orientation, m: IntervalModule, n: IntervalModule) -> u64 {
    let lo = m.a.max(n.a);
    let hi = m.b.min(n.b);
    if lo > hi {
        return 0;
    }
    let nvars = hi - lo + 1;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for p in 0..orient.n() - 1 {
        let (i, j) = orient.arrow_at(p);
        if !(m.supports(i) && n.supports(j)) {
            continue;
        }
        let mut row = vec![0i64; nvars];
        if m.supports(j) && n.supports(i) {
            row[i - lo] = 1;
            row[j - lo] -= 1;
        } else if m.supports(j) {
            row[j - lo] = 1;
        } else if n.supports(i) {
            row[i - lo] = 1;
        } else {
            continue;
        }
        if row.iter().any(|&v| v != 0) {
            rows.push(row);
        }
    }
    (nvars - rank_int(rows)) as u64
}

/// Euler form of the path algebra:
/// `chi(d, e) = sum_v d_v e_v - sum_{arrows i->j} d_i e_j`.
pub fn euler_form(orient: &Orientation, d: IntervalModule, e: IntervalModule) -> i64 {
    let overlap = (d.b.min(e.b) as i64 - d.a.max(e.a) as i64 + 1).max(0);
    let mut arrows = 0i64;
    for p in 0..orient.n() - 1 {
        let (i, j) = orient.arrow_at(p);
        if d.supports(i) && e.supports(j) {
            arrows += 1;
        }
    }
    overlap - arrows
}

fn components(vertices: &[usize]) -> Vec<IntervalModule> {
    let mut out = Vec::new();
    let mut iter = vertices.iter().copied();
    let Some(first) = iter.next() else {
        return out;
    };
    let (mut a, mut b) = (first, first);
    for v in iter {
        if v == b + 1 {
            b = v;
        } else {
            out.push(IntervalModule { a, b });
            a = v;
            b = v;
        }
    }
    out.push(IntervalModule { a, b });
    out
}

/// Generate the category of the type-A path algebra for this orientation.
pub fn gen_typea(orient: &Orientation, mode: NegExtMode) -> FiniteExtCat {
    let n = orient.n();
    let modules = interval_modules(n);
    let names: Vec<String> = modules.iter().map(|m| m.name()).collect();
    let count = modules.len();

    let mut hom = DimMat::zeros(count);
    for (i, &mi) in modules.iter().enumerate() {
        for (j, &mj) in modules.iter().enumerate() {
            hom.set(i, j, hom_dim_intervals(orient, mi, mj));
        }
    }
    let mut ext = DimMat::zeros(count);
    for (i, &ci) in modules.iter().enumerate() {
        for (j, &aj) in modules.iter().enumerate() {
            let value = hom.get(i, j) as i64 - euler_form(orient, ci, aj);
            assert!(
                value >= 0,
                "Euler form exceeds Hom for {}/{}",
                ci.name(),
                aj.name()
            );
            ext.set(i, j, value as u64);
        }
    }
    let negext = match mode {
        NegExtMode::Zero => DimMat::zeros(count),
        NegExtMode::Ext1 => ext.clone(),
    };

    // submodules of [a,b] = successor-closed subsets of the support-restricted
    // quiver; sub and quotient split into connected components
    let mut conf = BTreeMap::new();
    for m in &modules {
        let len = m.b - m.a + 1;
        let mut rows: Vec<(Vec<String>, Vec<String>)> = Vec::new();
        'subset: for mask in 0u32..1 << len {
            for p in 0..len.saturating_sub(1) {
                let (src, dst) = orient.arrow_at(m.a - 1 + p);
                let has = |v: usize| mask >> (v - m.a) & 1 == 1;
                if has(src) && !has(dst) {
                    continue 'subset;
                }
            }
            let inside: Vec<usize> = (m.a..=m.b)
                .filter(|&v| mask >> (v - m.a) & 1 == 1)
                .collect();
            let outside: Vec<usize> = (m.a..=m.b)
                .filter(|&v| mask >> (v - m.a) & 1 == 0)
                .collect();
            rows.push((
                components(&inside).iter().map(|c| c.name()).collect(),
                components(&outside).iter().map(|c| c.name()).collect(),
            ));
        }
        rows.sort();
        rows.dedup();
        conf.insert(m.name(), rows);
    }

    let label = format!("type A quiver {} with negext={}", orient.compact(), mode);
    FiniteExtCat::new(label, names, hom, negext, Some(ext), conf, None)
        .expect("generated categories are well-formed")
}

/// The pair `t_I = (T_I, F_I)`: modules supported inside `I` and inside its
/// complement.  `I` is a vertex mask (bit `v-1` for vertex `v`) and must be
/// successor-closed.
pub fn pair_from_succ(
    cat: &FiniteExtCat,
    orient: &Orientation,
    vertex_mask: u64,
) -> Result<STorsPair> {
    let quiver = orient.quiver();
    if !quiver.is_successor_closed_mask(vertex_mask) {
        let witness = (0..orient.n() - 1)
            .map(|p| orient.arrow_at(p))
            .find(|&(s, t)| vertex_mask >> (s - 1) & 1 == 1 && vertex_mask >> (t - 1) & 1 == 0)
            .map(|(s, _)| s.to_string())
            .unwrap_or_default();
        return Err(Error::NotSuccessorClosed(witness));
    }
    let inside = |m: IntervalModule, mask: u64| (m.a..=m.b).all(|v| mask >> (v - 1) & 1 == 1);
    let complement = !vertex_mask;
    let mut torsion = Subcat::empty();
    let mut free = Subcat::empty();
    for (i, m) in interval_modules(orient.n()).into_iter().enumerate() {
        if inside(m, vertex_mask) {
            torsion.insert(i);
        }
        if inside(m, complement) {
            free.insert(i);
        }
    }
    Ok(is_storsion(cat, torsion, free))
}

/// The set of simples contained in the torsion class, as a vertex mask.
pub fn succ_set_of_pair(cat: &FiniteExtCat, orient: &Orientation, pair: &STorsPair) -> u64 {
    let mut mask = 0u64;
    for v in 1..=orient.n() {
        let idx = cat
            .index_of(&IntervalModule { a: v, b: v }.name())
            .expect("simple module present");
        if pair.torsion.contains(idx) {
            mask |= 1 << (v - 1);
        }
    }
    mask
}

/// Machine-check that `t_(-)` and `I_(-)` are mutually inverse order
/// isomorphisms between successor-closed subsets and s-torsion pairs of the
/// hereditary structure.
pub fn verify_succ_bijection(orient: &Orientation) -> Result<VerifyReport> {
    let cat = gen_typea(orient, NegExtMode::Ext1);
    let poset = enumerate_stors(&cat)?;
    let quiver = orient.quiver();
    let lattice = quiver.enumerate_succ()?;
    let mut report = VerifyReport::new();

    report.push("counts_match", poset.len() == lattice.len());
    if poset.len() != lattice.len() {
        report.witness(format!(
            "{} s-torsion pairs vs {} successor-closed subsets",
            poset.len(),
            lattice.len()
        ));
    }

    let mut to_succ: Vec<u64> = Vec::with_capacity(poset.len());
    let mut pairs_ok = true;
    for (k, pair) in poset.pairs.iter().enumerate() {
        let mask = succ_set_of_pair(&cat, orient, pair);
        let ok = lattice.position(mask).is_some()
            && match pair_from_succ(&cat, orient, mask) {
                Ok(back) => back.torsion == pair.torsion && back.free == pair.free,
                Err(_) => false,
            };
        if !ok {
            pairs_ok = false;
            report.witness(format!(
                "pair {} does not come from a successor-closed subset",
                poset.label(&cat, k)
            ));
        }
        to_succ.push(mask);
    }
    report.push("pair_to_succ_roundtrip", pairs_ok);

    let mut sets_ok = true;
    for &mask in &lattice.sets {
        let ok = match pair_from_succ(&cat, orient, mask) {
            Ok(pair) => {
                pair.flags.all()
                    && poset.position_by_torsion(&pair.torsion).is_some()
                    && succ_set_of_pair(&cat, orient, &pair) == mask
            }
            Err(_) => false,
        };
        if !ok {
            sets_ok = false;
            report.witness(format!(
                "subset {{{}}} does not give an s-torsion pair",
                quiver.member_names(mask).join(",")
            ));
        }
    }
    report.push("succ_to_pair_roundtrip", sets_ok);

    let mut order_ok = true;
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            if poset.leq(i, j) != (to_succ[i] & !to_succ[j] == 0) {
                order_ok = false;
                report.witness(format!(
                    "order mismatch between {} and {}",
                    poset.label(&cat, i),
                    poset.label(&cat, j)
                ));
            }
        }
    }
    report.push("order_isomorphism", order_ok);
    Ok(report)
}

/// Machine-check, on the exact structure, that first extensions from the
/// torsion class to the torsion-free class vanish exactly when both classes
/// are Serre: the torsion class closed under the stored sub terms, the
/// torsion-free class under the stored quotient terms, both extension-closed.
pub fn serre_equivalence_check(orient: &Orientation) -> Result<VerifyReport> {
    let cat = gen_typea(orient, NegExtMode::Zero);
    let poset = enumerate_stors(&cat)?;
    let mut report = VerifyReport::new();

    let sub_closed = |s: &Subcat| {
        s.iter()
            .all(|m| cat.conf_rows(m).iter().all(|row| s.contains_obj(&row.sub)))
    };
    let quot_closed = |s: &Subcat| {
        s.iter()
            .all(|m| cat.conf_rows(m).iter().all(|row| s.contains_obj(&row.quot)))
    };

    let mut all_ok = true;
    for (k, pair) in poset.pairs.iter().enumerate() {
        let ext_vanishes = cat
            .ext_vanishes(&pair.torsion, &pair.free)
            .expect("generator stores ext data");
        let serre = sub_closed(&pair.torsion)
            && quot_closed(&pair.free)
            && cat.is_extension_closed(&pair.torsion)
            && cat.is_extension_closed(&pair.free);
        if ext_vanishes != serre {
            all_ok = false;
            report.witness(format!(
                "pair {}: ext_vanishes={} but serre={}",
                poset.label(&cat, k),
                ext_vanishes,
                serre
            ));
        }
    }
    report.push("serre_equivalence", all_ok);
    report.push("pairs_enumerated", !poset.is_empty());
    Ok(report)
}
