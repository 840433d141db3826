//! Finite extriangulated categories with negative first extensions.
//!
//! A category is given by a finite list of indecomposables, integer matrices
//! recording `dim Hom`, `dim E^{-1}` and optionally `dim E`, and a
//! middle-indexed conflation table: for each indecomposable `B` a set of pairs
//! `(A, C)` asserting a conflation `A -> B -> C`.  Morphism-level data is never
//! stored; only the dimension-level consequences of the long exact sequences
//! are checked (see [`FiniteExtCat::validate_lints`]).
//!
//! Objects are finite multisets of indecomposables (the empty multiset is the
//! zero object) and subcategories are summand-closed by representation: a set
//! of indecomposables standing for its additive closure.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the number of indecomposables: subcategories are 64-bit masks.
pub const MAX_INDECS: usize = 64;

/// Name of an indecomposable object, unique within its category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndecId(String);

impl IndecId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyIndecName);
        }
        Ok(IndecId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for IndecId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An object: a sorted multiset of indecomposable indices. Empty = zero object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Obj {
    summands: Vec<u32>,
}

impl Obj {
    pub fn zero() -> Self {
        Obj::default()
    }

    pub fn from_indices(mut summands: Vec<u32>) -> Self {
        summands.sort_unstable();
        Obj { summands }
    }

    pub fn indec(i: usize) -> Self {
        Obj {
            summands: vec![i as u32],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> &[u32] {
        &self.summands
    }

    /// Bitmask of the distinct summands.
    pub fn support_mask(&self) -> u64 {
        self.summands.iter().fold(0, |m, &i| m | (1 << i))
    }

    /// Multiset union.
    pub fn sum(&self, other: &Obj) -> Obj {
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        Obj::from_indices(summands)
    }
}

/// A summand-closed additive subcategory: a set of indecomposables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Subcat {
    bits: u64,
}

impl Subcat {
    pub fn empty() -> Self {
        Subcat { bits: 0 }
    }

    pub fn from_mask(bits: u64) -> Self {
        Subcat { bits }
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.bits |= 1 << i;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(&self, other: &Subcat) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersection(&self, other: &Subcat) -> Subcat {
        Subcat {
            bits: self.bits & other.bits,
        }
    }

    pub fn union(&self, other: &Subcat) -> Subcat {
        Subcat {
            bits: self.bits | other.bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_INDECS).filter(move |&i| self.contains(i))
    }

    /// Does the object belong to the subcategory? The zero object always does.
    pub fn contains_obj(&self, obj: &Obj) -> bool {
        obj.support_mask() & !self.bits == 0
    }
}

/// Square matrix of nonnegative dimensions, indexed by indecomposables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimMat {
    n: usize,
    data: Vec<u64>,
}

impl DimMat {
    pub fn zeros(n: usize) -> Self {
        DimMat {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn from_rows(name: &'static str, n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadMatrixShape { name, n });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            for &v in row {
                if v < 0 {
                    return Err(Error::NegativeDimension(name.to_string()));
                }
                data.push(v as u64);
            }
        }
        Ok(DimMat { n, data })
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    fn restrict(&self, keep: &[usize]) -> DimMat {
        let n = keep.len();
        let mut out = DimMat::zeros(n);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }
}

/// One stored conflation `sub -> middle -> quot` (the middle is implicit).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConfRow {
    pub sub: Obj,
    pub quot: Obj,
    sub_mask: u64,
    quot_mask: u64,
}

impl ConfRow {
    fn new(sub: Obj, quot: Obj) -> Self {
        let sub_mask = sub.support_mask();
        let quot_mask = quot.support_mask();
        ConfRow {
            sub,
            quot,
            sub_mask,
            quot_mask,
        }
    }

    pub fn ends_in(&self, x: &Subcat, y: &Subcat) -> bool {
        self.sub_mask & !x.mask() == 0 && self.quot_mask & !y.mask() == 0
    }
}

/// Which long-exact-sequence inequality a lint violation comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LintFamily {
    /// dim Hom(W,B) <= dim Hom(W,A) + dim Hom(W,C)
    HomCovariant,
    /// dim Hom(B,W) <= dim Hom(A,W) + dim Hom(C,W)
    HomContravariant,
    /// dim Hom(W,A) <= dim E^{-1}(W,C) + dim Hom(W,B)
    NegExtCovariant,
    /// dim Hom(C,W) <= dim E^{-1}(A,W) + dim Hom(B,W)
    NegExtContravariant,
    /// dim Hom(W,C) <= dim Hom(W,B) + dim E(W,A)
    ExtCovariant,
    /// dim Hom(A,W) <= dim Hom(B,W) + dim E(C,W)
    ExtContravariant,
}

impl fmt::Display for LintFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LintFamily::HomCovariant => "Hom(W,B) <= Hom(W,A) + Hom(W,C)",
            LintFamily::HomContravariant => "Hom(B,W) <= Hom(A,W) + Hom(C,W)",
            LintFamily::NegExtCovariant => "Hom(W,A) <= E^{-1}(W,C) + Hom(W,B)",
            LintFamily::NegExtContravariant => "Hom(C,W) <= E^{-1}(A,W) + Hom(B,W)",
            LintFamily::ExtCovariant => "Hom(W,C) <= Hom(W,B) + E(W,A)",
            LintFamily::ExtContravariant => "Hom(A,W) <= Hom(B,W) + E(C,W)",
        };
        f.write_str(s)
    }
}

/// A failed dimension inequality for one stored conflation and one witness.
#[derive(Clone, Debug, Serialize)]
pub struct LintViolation {
    pub middle: String,
    pub sub: Vec<String>,
    pub quot: Vec<String>,
    pub witness: String,
    pub family: LintFamily,
    pub lhs: u64,
    pub rhs: u64,
}

impl fmt::Display for LintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "conflation [{}] -> {} -> [{}], witness {}: {} fails ({} > {})",
            self.sub.join(","),
            self.middle,
            self.quot.join(","),
            self.witness,
            self.family,
            self.lhs,
            self.rhs
        )
    }
}

/// Conflation rows by middle name, as they appear in spec files: each row is
/// a pair of summand-name lists `(sub, quot)`.
pub type ConfSpec = BTreeMap<String, Vec<(Vec<String>, Vec<String>)>>;

/// On-disk form of a category (UTF-8 JSON).  Key order is irrelevant on load;
/// emission is byte-stable.
#[derive(Serialize, Deserialize)]
struct CatSpecFile {
    #[serde(default)]
    label: String,
    indecs: Vec<String>,
    hom_dim: Vec<Vec<i64>>,
    negext_dim: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ext_dim: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    conf: ConfSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shift: Option<BTreeMap<String, String>>,
}

/// A finite Krull-Schmidt extriangulated category with a negative first
/// extension, as explicit dimension-level data.
#[derive(Clone, Debug)]
pub struct FiniteExtCat {
    label: String,
    indecs: Vec<IndecId>,
    index: HashMap<String, u32>,
    hom: DimMat,
    negext: DimMat,
    ext: Option<DimMat>,
    conf: Vec<Vec<ConfRow>>,
    shift: Option<Vec<u32>>,
    // per-indecomposable nonvanishing masks, for fast subcategory tests
    hom_out: Vec<u64>,
    hom_in: Vec<u64>,
    negext_out: Vec<u64>,
}

impl FiniteExtCat {
    /// Build and validate a category. Trivial conflation rows are augmented.
    pub fn new(
        label: impl Into<String>,
        indec_names: Vec<String>,
        hom: DimMat,
        negext: DimMat,
        ext: Option<DimMat>,
        conf_rows: ConfSpec,
        shift_names: Option<BTreeMap<String, String>>,
    ) -> Result<Self> {
        let n = indec_names.len();
        if n > MAX_INDECS {
            return Err(Error::TooLarge {
                kind: "indecomposables",
                got: n,
                max: MAX_INDECS,
            });
        }
        let mut indecs = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for (i, name) in indec_names.into_iter().enumerate() {
            let id = IndecId::new(name)?;
            if index.insert(id.as_str().to_string(), i as u32).is_some() {
                return Err(Error::DuplicateIndec(id.as_str().to_string()));
            }
            indecs.push(id);
        }
        if hom.n != n {
            return Err(Error::BadMatrixShape { name: "hom_dim", n });
        }
        if negext.n != n {
            return Err(Error::BadMatrixShape {
                name: "negext_dim",
                n,
            });
        }
        if let Some(e) = &ext {
            if e.n != n {
                return Err(Error::BadMatrixShape { name: "ext_dim", n });
            }
        }
        for (i, id) in indecs.iter().enumerate() {
            if hom.get(i, i) == 0 {
                return Err(Error::MissingIdentity(id.as_str().to_string()));
            }
        }

        let resolve = |name: &str| -> Result<u32> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownIndec(name.to_string()))
        };

        let mut conf: Vec<Vec<ConfRow>> = vec![Vec::new(); n];
        for (mid, rows) in &conf_rows {
            let m = resolve(mid)? as usize;
            for (sub_names, quot_names) in rows {
                let sub = Obj::from_indices(
                    sub_names
                        .iter()
                        .map(|s| resolve(s))
                        .collect::<Result<Vec<_>>>()?,
                );
                let quot = Obj::from_indices(
                    quot_names
                        .iter()
                        .map(|s| resolve(s))
                        .collect::<Result<Vec<_>>>()?,
                );
                conf[m].push(ConfRow::new(sub, quot));
            }
        }
        for (m, rows) in conf.iter_mut().enumerate() {
            rows.push(ConfRow::new(Obj::indec(m), Obj::zero()));
            rows.push(ConfRow::new(Obj::zero(), Obj::indec(m)));
            rows.sort_by(|a, b| (&a.sub, &a.quot).cmp(&(&b.sub, &b.quot)));
            rows.dedup();
        }

        let shift = match shift_names {
            None => None,
            Some(map) => {
                let mut perm = vec![u32::MAX; n];
                for (from, to) in &map {
                    perm[resolve(from)? as usize] = resolve(to)?;
                }
                let mut seen = vec![false; n];
                for (i, &img) in perm.iter().enumerate() {
                    if img == u32::MAX || seen[img as usize] {
                        return Err(Error::ShiftNotPermutation(indecs[i].as_str().to_string()));
                    }
                    seen[img as usize] = true;
                }
                Some(perm)
            }
        };

        let mut hom_out = vec![0u64; n];
        let mut hom_in = vec![0u64; n];
        let mut negext_out = vec![0u64; n];
        for i in 0..n {
            for (j, in_mask) in hom_in.iter_mut().enumerate() {
                if hom.get(i, j) > 0 {
                    hom_out[i] |= 1 << j;
                    *in_mask |= 1 << i;
                }
                if negext.get(i, j) > 0 {
                    negext_out[i] |= 1 << j;
                }
            }
        }

        Ok(FiniteExtCat {
            label: label.into(),
            indecs,
            index,
            hom,
            negext,
            ext,
            conf,
            shift,
            hom_out,
            hom_in,
            negext_out,
        })
    }

    /// Parse a category spec file (JSON syntax; see the book for the schema).
    pub fn from_spec_str(text: &str) -> Result<Self> {
        let file: CatSpecFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = file.indecs.len();
        let hom = DimMat::from_rows("hom_dim", n, &file.hom_dim)?;
        let negext = DimMat::from_rows("negext_dim", n, &file.negext_dim)?;
        let ext = match &file.ext_dim {
            Some(rows) => Some(DimMat::from_rows("ext_dim", n, rows)?),
            None => None,
        };
        FiniteExtCat::new(
            file.label,
            file.indecs,
            hom,
            negext,
            ext,
            file.conf,
            file.shift,
        )
    }

    /// Emit the category in the spec file format. Deterministic bytes.
    pub fn to_spec_string(&self) -> String {
        let names = |obj: &Obj| -> Vec<String> {
            obj.summands()
                .iter()
                .map(|&i| self.indecs[i as usize].as_str().to_string())
                .collect()
        };
        let signed = |m: &DimMat| -> Vec<Vec<i64>> {
            m.rows()
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as i64).collect())
                .collect()
        };
        let mut conf = BTreeMap::new();
        for (m, rows) in self.conf.iter().enumerate() {
            let mut out: Vec<(Vec<String>, Vec<String>)> = rows
                .iter()
                .map(|row| (names(&row.sub), names(&row.quot)))
                .collect();
            out.sort();
            conf.insert(self.indecs[m].as_str().to_string(), out);
        }
        let shift = self.shift.as_ref().map(|perm| {
            perm.iter()
                .enumerate()
                .map(|(i, &j)| {
                    (
                        self.indecs[i].as_str().to_string(),
                        self.indecs[j as usize].as_str().to_string(),
                    )
                })
                .collect::<BTreeMap<_, _>>()
        });
        let file = CatSpecFile {
            label: self.label.clone(),
            indecs: self
                .indecs
                .iter()
                .map(|id| id.as_str().to_string())
                .collect(),
            hom_dim: signed(&self.hom),
            negext_dim: signed(&self.negext),
            ext_dim: self.ext.as_ref().map(signed),
            conf,
            shift,
        };
        let mut s = serde_json::to_string_pretty(&file).expect("category serializes");
        s.push('\n');
        s
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn indec_names(&self) -> impl Iterator<Item = &str> {
        self.indecs.iter().map(|id| id.as_str())
    }

    pub fn name(&self, i: usize) -> &str {
        self.indecs[i].as_str()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).map(|&i| i as usize)
    }

    pub fn has_shift(&self) -> bool {
        self.shift.is_some()
    }

    pub fn shift_of(&self, i: usize) -> Option<usize> {
        self.shift.as_ref().map(|p| p[i] as usize)
    }

    pub fn has_ext(&self) -> bool {
        self.ext.is_some()
    }

    /// All indecomposables.
    pub fn full_subcat(&self) -> Subcat {
        let n = self.len();
        Subcat::from_mask(if n == MAX_INDECS {
            u64::MAX
        } else {
            (1u64 << n) - 1
        })
    }

    /// Subcategory generated by the named indecomposables.
    pub fn subcat<I>(&self, names: I) -> Result<Subcat>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut s = Subcat::empty();
        for name in names {
            let i = self
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownIndec(name.as_ref().to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Object with the named summands, multiplicities given by repetition.
    pub fn obj<I>(&self, names: I) -> Result<Obj>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut idx = Vec::new();
        for name in names {
            let i = self
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownIndec(name.as_ref().to_string()))?;
            idx.push(i as u32);
        }
        Ok(Obj::from_indices(idx))
    }

    /// Member names sorted lexicographically (the canonical display order).
    pub fn member_names(&self, s: &Subcat) -> Vec<&str> {
        let mut v: Vec<&str> = s.iter().map(|i| self.name(i)).collect();
        v.sort_unstable();
        v
    }

    pub fn obj_names(&self, obj: &Obj) -> Vec<&str> {
        let mut v: Vec<&str> = obj
            .summands()
            .iter()
            .map(|&i| self.name(i as usize))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> u64 {
        self.hom.get(x, y)
    }

    pub fn negext_dim(&self, x: usize, y: usize) -> u64 {
        self.negext.get(x, y)
    }

    pub fn ext_dim(&self, x: usize, y: usize) -> Option<u64> {
        self.ext.as_ref().map(|e| e.get(x, y))
    }

    fn obj_pairs_dim(&self, m: &DimMat, a: &Obj, b: &Obj) -> u64 {
        let mut total = 0;
        for &i in a.summands() {
            for &j in b.summands() {
                total += m.get(i as usize, j as usize);
            }
        }
        total
    }

    /// `dim Hom(A, B)` extended biadditively to objects.
    pub fn hom_obj(&self, a: &Obj, b: &Obj) -> u64 {
        self.obj_pairs_dim(&self.hom, a, b)
    }

    pub fn negext_obj(&self, a: &Obj, b: &Obj) -> u64 {
        self.obj_pairs_dim(&self.negext, a, b)
    }

    pub fn ext_obj(&self, a: &Obj, b: &Obj) -> Option<u64> {
        self.ext.as_ref().map(|e| self.obj_pairs_dim(e, a, b))
    }

    /// Does `Hom(X, Y)` vanish for all members?
    pub fn hom_vanishes(&self, x: &Subcat, y: &Subcat) -> bool {
        x.iter().all(|i| self.hom_out[i] & y.mask() == 0)
    }

    /// Does `E^{-1}(X, Y)` vanish for all members?
    pub fn negext_vanishes(&self, x: &Subcat, y: &Subcat) -> bool {
        x.iter().all(|i| self.negext_out[i] & y.mask() == 0)
    }

    /// Does `E(X, Y)` vanish? `None` when no ext data is stored.
    pub fn ext_vanishes(&self, x: &Subcat, y: &Subcat) -> Option<bool> {
        let e = self.ext.as_ref()?;
        Some(x.iter().all(|i| y.iter().all(|j| e.get(i, j) == 0)))
    }

    pub fn conf_rows(&self, m: usize) -> &[ConfRow] {
        &self.conf[m]
    }

    /// Is the indecomposable `m` in `X * Y` under the stored conflations?
    pub fn indec_in_star(&self, m: usize, x: &Subcat, y: &Subcat) -> bool {
        self.conf[m].iter().any(|row| row.ends_in(x, y))
    }

    /// Is `M` in `X * Y`? Checked summand-wise; the zero object always is.
    pub fn obj_in_star(&self, m: &Obj, x: &Subcat, y: &Subcat) -> bool {
        let mut seen = 0u64;
        for &s in m.summands() {
            if seen >> s & 1 == 1 {
                continue;
            }
            seen |= 1 << s;
            if !self.indec_in_star(s as usize, x, y) {
                return false;
            }
        }
        true
    }

    /// The subcategory `X * Y`.
    pub fn star_subcat(&self, x: &Subcat, y: &Subcat) -> Subcat {
        let mut s = Subcat::empty();
        for m in 0..self.len() {
            if self.indec_in_star(m, x, y) {
                s.insert(m);
            }
        }
        s
    }

    /// `X^perp = { m : Hom(x, m) = 0 for all x in X }`.
    pub fn right_perp(&self, x: &Subcat) -> Subcat {
        let mut excluded = 0u64;
        for i in x.iter() {
            excluded |= self.hom_out[i];
        }
        Subcat::from_mask(self.full_subcat().mask() & !excluded)
    }

    /// `^perp X = { m : Hom(m, x) = 0 for all x in X }`.
    pub fn left_perp(&self, x: &Subcat) -> Subcat {
        let mut excluded = 0u64;
        for i in x.iter() {
            excluded |= self.hom_in[i];
        }
        Subcat::from_mask(self.full_subcat().mask() & !excluded)
    }

    /// Image of a subcategory under the shift, if shift data is present.
    pub fn shift_subcat(&self, x: &Subcat) -> Option<Subcat> {
        let perm = self.shift.as_ref()?;
        let mut s = Subcat::empty();
        for i in x.iter() {
            s.insert(perm[i] as usize);
        }
        Some(s)
    }

    /// Preimage of a subcategory under the shift.
    pub fn shift_inv_subcat(&self, x: &Subcat) -> Option<Subcat> {
        let perm = self.shift.as_ref()?;
        let mut s = Subcat::empty();
        for (i, &img) in perm.iter().enumerate() {
            if x.contains(img as usize) {
                s.insert(i);
            }
        }
        Some(s)
    }

    /// True iff no conflation with both ends in `S` has its middle outside `S`.
    pub fn is_extension_closed(&self, s: &Subcat) -> bool {
        self.extension_closure_witness(s).is_none()
    }

    fn extension_closure_witness(&self, s: &Subcat) -> Option<usize> {
        (0..self.len())
            .find(|&m| !s.contains(m) && self.conf[m].iter().any(|row| row.ends_in(s, s)))
    }

    /// Restrict to an extension-closed subcategory, inheriting all structure.
    /// The shift is kept only when it maps the subcategory onto itself.
    pub fn restrict_to(&self, h: &Subcat) -> Result<FiniteExtCat> {
        if let Some(m) = self.extension_closure_witness(h) {
            return Err(Error::NotExtensionClosed(self.name(m).to_string()));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| h.contains(i)).collect();
        let names: Vec<String> = keep.iter().map(|&i| self.name(i).to_string()).collect();
        let back: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &i)| (i, a)).collect();

        let remap = |obj: &Obj| -> Obj {
            Obj::from_indices(
                obj.summands()
                    .iter()
                    .map(|&i| back[&(i as usize)] as u32)
                    .collect(),
            )
        };

        let mut conf = BTreeMap::new();
        for &m in &keep {
            let rows: Vec<(Vec<String>, Vec<String>)> = self.conf[m]
                .iter()
                .filter(|row| row.ends_in(h, h))
                .map(|row| {
                    let sub = remap(&row.sub);
                    let quot = remap(&row.quot);
                    (
                        sub.summands()
                            .iter()
                            .map(|&i| names[i as usize].clone())
                            .collect(),
                        quot.summands()
                            .iter()
                            .map(|&i| names[i as usize].clone())
                            .collect(),
                    )
                })
                .collect();
            conf.insert(self.name(m).to_string(), rows);
        }

        let shift = self.shift.as_ref().and_then(|perm| {
            let closed = keep.iter().all(|&i| h.contains(perm[i] as usize));
            if !closed {
                return None;
            }
            Some(
                keep.iter()
                    .map(|&i| {
                        (
                            self.name(i).to_string(),
                            self.name(perm[i] as usize).to_string(),
                        )
                    })
                    .collect::<BTreeMap<_, _>>(),
            )
        });

        FiniteExtCat::new(
            self.label.clone(),
            names,
            self.hom.restrict(&keep),
            self.negext.restrict(&keep),
            self.ext.as_ref().map(|e| e.restrict(&keep)),
            conf,
            shift,
        )
    }

    /// Check the necessary dimension inequalities extracted from the long
    /// exact sequences, for every stored conflation and every witness.
    /// An empty report is a pass.
    pub fn validate_lints(&self) -> Vec<LintViolation> {
        let mut out = Vec::new();
        for m in 0..self.len() {
            let mid = Obj::indec(m);
            for row in &self.conf[m] {
                for w in 0..self.len() {
                    let wobj = Obj::indec(w);
                    let mut check = |family: LintFamily, lhs: u64, rhs: u64| {
                        if lhs > rhs {
                            out.push(LintViolation {
                                middle: self.name(m).to_string(),
                                sub: self
                                    .obj_names(&row.sub)
                                    .iter()
                                    .map(|s| s.to_string())
                                    .collect(),
                                quot: self
                                    .obj_names(&row.quot)
                                    .iter()
                                    .map(|s| s.to_string())
                                    .collect(),
                                witness: self.name(w).to_string(),
                                family,
                                lhs,
                                rhs,
                            });
                        }
                    };
                    check(
                        LintFamily::HomCovariant,
                        self.hom_obj(&wobj, &mid),
                        self.hom_obj(&wobj, &row.sub) + self.hom_obj(&wobj, &row.quot),
                    );
                    check(
                        LintFamily::HomContravariant,
                        self.hom_obj(&mid, &wobj),
                        self.hom_obj(&row.sub, &wobj) + self.hom_obj(&row.quot, &wobj),
                    );
                    check(
                        LintFamily::NegExtCovariant,
                        self.hom_obj(&wobj, &row.sub),
                        self.negext_obj(&wobj, &row.quot) + self.hom_obj(&wobj, &mid),
                    );
                    check(
                        LintFamily::NegExtContravariant,
                        self.hom_obj(&row.quot, &wobj),
                        self.negext_obj(&row.sub, &wobj) + self.hom_obj(&mid, &wobj),
                    );
                    if let Some(ext) = &self.ext {
                        check(
                            LintFamily::ExtCovariant,
                            self.hom_obj(&wobj, &row.quot),
                            self.hom_obj(&wobj, &mid) + self.obj_pairs_dim(ext, &wobj, &row.sub),
                        );
                        check(
                            LintFamily::ExtContravariant,
                            self.hom_obj(&row.sub, &wobj),
                            self.hom_obj(&mid, &wobj) + self.obj_pairs_dim(ext, &row.quot, &wobj),
                        );
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_simples() -> FiniteExtCat {
        FiniteExtCat::from_spec_str(
            r#"{
                "label": "two simples",
                "indecs": ["S1", "S2"],
                "hom_dim": [[1, 0], [0, 1]],
                "negext_dim": [[0, 0], [0, 0]]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn minimal_category_gets_trivial_rows() {
        let cat = two_simples();
        assert_eq!(cat.len(), 2);
        for m in 0..2 {
            let rows = cat.conf_rows(m);
            assert_eq!(rows.len(), 2);
            assert!(rows
                .iter()
                .any(|r| r.sub.is_zero() && r.quot == Obj::indec(m)));
            assert!(rows
                .iter()
                .any(|r| r.sub == Obj::indec(m) && r.quot.is_zero()));
        }
        assert!(cat.validate_lints().is_empty());
    }

    #[test]
    fn unknown_indec_in_conflation_is_rejected() {
        let err = FiniteExtCat::from_spec_str(
            r#"{
                "indecs": ["A"],
                "hom_dim": [[1]],
                "negext_dim": [[0]],
                "conf": {"A": [[["X9"], []]]}
            }"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnknownIndec(name) if name == "X9"));
    }

    #[test]
    fn duplicate_and_negative_are_rejected() {
        let err = FiniteExtCat::from_spec_str(
            r#"{"indecs": ["A", "A"], "hom_dim": [[1,0],[0,1]], "negext_dim": [[0,0],[0,0]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::DuplicateIndec(_)));
        let err = FiniteExtCat::from_spec_str(
            r#"{"indecs": ["A"], "hom_dim": [[-1]], "negext_dim": [[0]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NegativeDimension(_)));
    }

    #[test]
    fn shift_must_be_a_permutation() {
        let err = FiniteExtCat::from_spec_str(
            r#"{
                "indecs": ["A", "B"],
                "hom_dim": [[1,0],[0,1]],
                "negext_dim": [[0,0],[0,0]],
                "shift": {"A": "B", "B": "B"}
            }"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ShiftNotPermutation(_)));
    }

    #[test]
    fn perp_of_empty_and_full() {
        let cat = two_simples();
        assert_eq!(cat.right_perp(&Subcat::empty()), cat.full_subcat());
        assert!(cat.right_perp(&cat.full_subcat()).is_empty());
    }

    #[test]
    fn star_with_zero_side() {
        let cat = two_simples();
        let x = cat.subcat(["S1"]).unwrap();
        assert_eq!(cat.star_subcat(&x, &Subcat::empty()), x);
        assert_eq!(cat.star_subcat(&Subcat::empty(), &x), x);
        let all = cat.full_subcat();
        assert_eq!(cat.star_subcat(&all, &all), all);
    }

    #[test]
    fn hom_vanishes_edges() {
        let cat = two_simples();
        let x = cat.subcat(["S1"]).unwrap();
        assert!(cat.hom_vanishes(&Subcat::empty(), &x));
        assert!(cat.hom_vanishes(&x, &Subcat::empty()));
        assert!(!cat.hom_vanishes(&x, &x));
        assert!(cat.hom_vanishes(&x, &cat.subcat(["S2"]).unwrap()));
    }

    #[test]
    fn restrict_to_full_is_identity_and_zero_is_empty() {
        let cat = two_simples();
        let full = cat.restrict_to(&cat.full_subcat()).unwrap();
        assert_eq!(full.to_spec_string(), cat.to_spec_string());
        let zero = cat.restrict_to(&Subcat::empty()).unwrap();
        assert_eq!(zero.len(), 0);
    }

    #[test]
    fn spec_roundtrip() {
        let cat = two_simples();
        let text = cat.to_spec_string();
        let again = FiniteExtCat::from_spec_str(&text).unwrap();
        assert_eq!(again.to_spec_string(), text);
    }

    #[test]
    fn obj_in_star_zero_object() {
        let cat = two_simples();
        assert!(cat.obj_in_star(&Obj::zero(), &Subcat::empty(), &Subcat::empty()));
        let m = cat.obj(["S1"]).unwrap();
        let x = cat.subcat(["S1"]).unwrap();
        assert!(cat.obj_in_star(&m, &x, &Subcat::empty()));
        assert!(!cat.obj_in_star(&m, &cat.subcat(["S2"]).unwrap(), &Subcat::empty()));
    }
}
