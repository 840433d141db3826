//! Finite acyclic quivers and their successor-closed vertex subsets.
//!
//! A subset `I` of the vertices is successor-closed when every arrow starting
//! in `I` also ends in `I`.  These subsets form a lattice under inclusion
//! (meets are intersections, joins are unions), and for nested `I1 <= I2` the
//! interval `[I1, I2]` is isomorphic to the lattice of the full subquiver on
//! `I2 \ I1` via `I -> I \ I1` and `J -> I1 union J`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense subset enumeration scans `2^n` masks; keep that at desk scale.
pub const MAX_ENUM_VERTICES: usize = 22;

/// A finite acyclic quiver. Parallel arrows are allowed, cycles are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<(String, String)>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: &[(String, String)]) -> Result<Self> {
        let mut index = std::collections::HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i as u32).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let resolve = |name: &String| -> Result<u32> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(name.clone()))
        };
        let arrows = arrows
            .iter()
            .map(|(s, t)| Ok((resolve(s)?, resolve(t)?)))
            .collect::<Result<Vec<_>>>()?;
        let q = Quiver { vertices, arrows };
        if q.has_cycle() {
            return Err(Error::CyclicQuiver);
        }
        Ok(q)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Quiver::new(file.vertices, &file.arrows)
    }

    pub fn to_json(&self) -> String {
        let file = QuiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| {
                    (
                        self.vertices[s as usize].clone(),
                        self.vertices[t as usize].clone(),
                    )
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("quiver serializes");
        s.push('\n');
        s
    }

    fn has_cycle(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t as usize] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s as usize == v {
                    indeg[t as usize] -= 1;
                    if indeg[t as usize] == 0 {
                        stack.push(t as usize);
                    }
                }
            }
        }
        seen < n
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(u32, u32)] {
        &self.arrows
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn vertex_set<I>(&self, names: I) -> Result<u64>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut mask = 0u64;
        for name in names {
            let i = self
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownVertex(name.as_ref().to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn member_names(&self, mask: u64) -> Vec<&str> {
        let mut v: Vec<&str> = (0..self.n())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.vertices[i].as_str())
            .collect();
        v.sort_unstable();
        v
    }

    pub fn full_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Every arrow out of the subset lands back in the subset.
    pub fn is_successor_closed_mask(&self, mask: u64) -> bool {
        self.arrows
            .iter()
            .all(|&(s, t)| mask >> s & 1 == 0 || mask >> t & 1 == 1)
    }

    pub fn is_successor_closed<I>(&self, names: I) -> Result<bool>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        Ok(self.is_successor_closed_mask(self.vertex_set(names)?))
    }

    /// Full subquiver on the given vertex set.
    pub fn restricted(&self, mask: u64) -> Quiver {
        let keep: Vec<usize> = (0..self.n()).filter(|&i| mask >> i & 1 == 1).collect();
        let back: std::collections::HashMap<usize, u32> = keep
            .iter()
            .enumerate()
            .map(|(a, &i)| (i, a as u32))
            .collect();
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|&&(s, t)| mask >> s & 1 == 1 && mask >> t & 1 == 1)
            .map(|&(s, t)| (back[&(s as usize)], back[&(t as usize)]))
            .collect();
        Quiver { vertices, arrows }
    }

    /// All successor-closed subsets, sorted by size then by member names,
    /// together with the covering relations of the inclusion order.
    pub fn enumerate_succ(&self) -> Result<SuccLattice> {
        let n = self.n();
        if n > MAX_ENUM_VERTICES {
            return Err(Error::TooLarge {
                kind: "vertices",
                got: n,
                max: MAX_ENUM_VERTICES,
            });
        }
        let mut sets: Vec<u64> = (0..1u64 << n)
            .filter(|&m| self.is_successor_closed_mask(m))
            .collect();
        sets.sort_by(|&a, &b| {
            (a.count_ones(), self.member_names(a)).cmp(&(b.count_ones(), self.member_names(b)))
        });
        let pos: std::collections::HashMap<u64, usize> =
            sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        // In succ lattices covers differ by exactly one vertex: any proper
        // inclusion can be refined through a sink of the difference quiver.
        let mut hasse = Vec::new();
        for (j, &upper) in sets.iter().enumerate() {
            for v in 0..n {
                if upper >> v & 1 == 1 {
                    if let Some(&i) = pos.get(&(upper & !(1 << v))) {
                        hasse.push((j, i));
                    }
                }
            }
        }
        hasse.sort();
        Ok(SuccLattice {
            sets,
            hasse_edges: hasse,
        })
    }
}

/// The lattice of successor-closed subsets. Edges run from the larger set to
/// the smaller one, matching the usual Hasse-quiver convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccLattice {
    pub sets: Vec<u64>,
    pub hasse_edges: Vec<(usize, usize)>,
}

impl SuccLattice {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn position(&self, mask: u64) -> Option<usize> {
        self.sets.iter().position(|&m| m == mask)
    }

    /// Meets and joins of members stay members.
    pub fn is_lattice_closed(&self) -> bool {
        let have: std::collections::HashSet<u64> = self.sets.iter().copied().collect();
        self.sets.iter().enumerate().all(|(i, &a)| {
            self.sets[i..]
                .iter()
                .all(|&b| have.contains(&(a & b)) && have.contains(&(a | b)))
        })
    }

    pub fn to_dot(&self, quiver: &Quiver) -> String {
        let mut out = String::from("digraph succ {\n");
        for (i, &mask) in self.sets.iter().enumerate() {
            out.push_str(&format!(
                "  n{} [label=\"{{{}}}\"];\n",
                i,
                quiver.member_names(mask).join(",")
            ));
        }
        for &(upper, lower) in &self.hasse_edges {
            out.push_str(&format!("  n{} -> n{};\n", upper, lower));
        }
        out.push_str("}\n");
        out
    }
}

/// The combinatorial interval isomorphism data for nested successor-closed
/// `I1 <= I2`: the interval `[I1, I2]`, the lattice of the subquiver on
/// `I2 \ I1`, and the two mutually inverse maps as position tables.
#[derive(Clone, Debug)]
pub struct SuccIntervalIso {
    pub interval: Vec<u64>,
    pub restricted_quiver: Quiver,
    pub restricted: SuccLattice,
    /// `phi[k]` = position in `restricted.sets` of `interval[k] \ I1`.
    pub phi: Vec<usize>,
    /// `psi[k]` = position in `interval` of `I1 union restricted.sets[k]`.
    pub psi: Vec<usize>,
    pub verified: bool,
}

/// Compute `succ[I1, I2] ~= succ(Q restricted to I2 \ I1)` and verify that
/// `I -> I \ I1` and `J -> I1 union J` are mutually inverse order
/// isomorphisms.
pub fn succ_interval_iso(quiver: &Quiver, i1: u64, i2: u64) -> Result<SuccIntervalIso> {
    if i1 & !i2 != 0 {
        return Err(Error::NotNested);
    }
    for (mask, label) in [(i1, i1), (i2, i2)] {
        if !quiver.is_successor_closed_mask(mask) {
            let witness = quiver
                .arrows()
                .iter()
                .find(|&&(s, t)| label >> s & 1 == 1 && label >> t & 1 == 0)
                .map(|&(s, _)| quiver.vertex_names()[s as usize].clone())
                .unwrap_or_default();
            return Err(Error::NotSuccessorClosed(witness));
        }
    }
    let lattice = quiver.enumerate_succ()?;
    let interval: Vec<u64> = lattice
        .sets
        .iter()
        .copied()
        .filter(|&m| i1 & !m == 0 && m & !i2 == 0)
        .collect();

    let diff = i2 & !i1;
    let restricted_quiver = quiver.restricted(diff);
    let restricted = restricted_quiver.enumerate_succ()?;

    // translate a global vertex mask inside `diff` to the restricted indexing
    let diff_verts: Vec<usize> = (0..quiver.n()).filter(|&v| diff >> v & 1 == 1).collect();
    let to_restricted = |mask: u64| -> u64 {
        diff_verts
            .iter()
            .enumerate()
            .filter(|&(_, &v)| mask >> v & 1 == 1)
            .fold(0u64, |m, (k, _)| m | (1 << k))
    };
    let to_global = |mask: u64| -> u64 {
        diff_verts
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .fold(0u64, |m, (_, &v)| m | (1 << v))
    };

    let mut verified = true;
    let mut phi = Vec::with_capacity(interval.len());
    for &m in &interval {
        match restricted.position(to_restricted(m & !i1)) {
            Some(p) => phi.push(p),
            None => {
                verified = false;
                phi.push(usize::MAX);
            }
        }
    }
    let mut psi = Vec::with_capacity(restricted.len());
    for &j in &restricted.sets {
        match interval.iter().position(|&m| m == i1 | to_global(j)) {
            Some(p) => psi.push(p),
            None => {
                verified = false;
                psi.push(usize::MAX);
            }
        }
    }
    if verified {
        verified = interval.len() == restricted.len()
            && phi.iter().enumerate().all(|(k, &p)| psi[p] == k)
            && psi.iter().enumerate().all(|(k, &p)| phi[p] == k);
    }
    if verified {
        // both maps preserve and reflect inclusion
        for a in 0..interval.len() {
            for b in 0..interval.len() {
                let amb = interval[a] & !interval[b] == 0;
                let img = restricted.sets[phi[a]] & !restricted.sets[phi[b]] == 0;
                if amb != img {
                    verified = false;
                }
            }
        }
    }
    Ok(SuccIntervalIso {
        interval,
        restricted_quiver,
        restricted,
        phi,
        psi,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(vertices: &[&str], arrows: &[(&str, &str)]) -> Quiver {
        Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            &arrows
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn paper_quiver() -> Quiver {
        q(&["1", "2", "3", "4"], &[("1", "2"), ("3", "2"), ("4", "3")])
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Quiver::new(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into()), ("b".into(), "a".into())],
        )
        .unwrap_err();
        assert!(matches!(err, Error::CyclicQuiver));
        let err = Quiver::new(vec!["a".into()], &[("a".into(), "a".into())]).unwrap_err();
        assert!(matches!(err, Error::CyclicQuiver));
    }

    #[test]
    fn successor_closed_basics() {
        let quiver = paper_quiver();
        assert!(quiver.is_successor_closed(Vec::<&str>::new()).unwrap());
        assert!(quiver.is_successor_closed(["1", "2", "3", "4"]).unwrap());
        assert!(quiver.is_successor_closed(["2", "3"]).unwrap());
        assert!(!quiver.is_successor_closed(["1"]).unwrap());
        let single = q(&["v"], &[]);
        assert!(single.is_successor_closed(["v"]).unwrap());
        assert!(quiver.is_successor_closed(["5"]).is_err());
    }

    #[test]
    fn succ_lattice_of_paper_example() {
        let quiver = paper_quiver();
        let lattice = quiver.enumerate_succ().unwrap();
        let names: Vec<Vec<&str>> = lattice
            .sets
            .iter()
            .map(|&m| quiver.member_names(m))
            .collect();
        assert_eq!(
            names,
            vec![
                vec![],
                vec!["2"],
                vec!["1", "2"],
                vec!["2", "3"],
                vec!["1", "2", "3"],
                vec!["2", "3", "4"],
                vec!["1", "2", "3", "4"],
            ]
        );
        assert_eq!(lattice.hasse_edges.len(), 8);
        assert!(lattice.is_lattice_closed());
    }

    #[test]
    fn no_arrow_quiver_has_all_subsets() {
        let quiver = q(&["a", "b", "c"], &[]);
        assert_eq!(quiver.enumerate_succ().unwrap().len(), 8);
    }

    #[test]
    fn linear_two_vertex_quiver() {
        let quiver = q(&["1", "2"], &[("1", "2")]);
        let lattice = quiver.enumerate_succ().unwrap();
        let masks: Vec<u64> = (0..4)
            .filter(|&m| quiver.is_successor_closed_mask(m))
            .collect();
        assert_eq!(lattice.sets.len(), masks.len());
        assert_eq!(lattice.len(), 3);
    }

    #[test]
    fn restricted_quiver_of_paper_interval() {
        let quiver = paper_quiver();
        let full = quiver.restricted(quiver.full_mask());
        assert_eq!(full, quiver);
        let v = quiver.vertex_set(["3", "4"]).unwrap();
        let sub = quiver.restricted(v);
        assert_eq!(sub.vertex_names(), &["3".to_string(), "4".to_string()]);
        assert_eq!(sub.arrows(), &[(1, 0)]);
        assert_eq!(quiver.restricted(0).n(), 0);
    }

    #[test]
    fn interval_iso_on_paper_example() {
        let quiver = paper_quiver();
        let i1 = quiver.vertex_set(["2"]).unwrap();
        let i2 = quiver.vertex_set(["2", "3", "4"]).unwrap();
        let iso = succ_interval_iso(&quiver, i1, i2).unwrap();
        assert!(iso.verified);
        let interval_names: Vec<Vec<&str>> = iso
            .interval
            .iter()
            .map(|&m| quiver.member_names(m))
            .collect();
        assert_eq!(
            interval_names,
            vec![vec!["2"], vec!["2", "3"], vec!["2", "3", "4"]]
        );
        let restricted_names: Vec<Vec<&str>> = iso
            .restricted
            .sets
            .iter()
            .map(|&m| iso.restricted_quiver.member_names(m))
            .collect();
        assert_eq!(restricted_names, vec![vec![], vec!["3"], vec!["3", "4"]]);
    }

    #[test]
    fn interval_iso_rejects_bad_input() {
        let quiver = paper_quiver();
        let i1 = quiver.vertex_set(["1", "2"]).unwrap();
        let i2 = quiver.vertex_set(["2", "3"]).unwrap();
        assert!(matches!(
            succ_interval_iso(&quiver, i1, i2),
            Err(Error::NotNested)
        ));
        let bad = quiver.vertex_set(["1"]).unwrap();
        let all = quiver.full_mask();
        assert!(matches!(
            succ_interval_iso(&quiver, bad, all),
            Err(Error::NotSuccessorClosed(_))
        ));
        let i1 = quiver.vertex_set(["2"]).unwrap();
        let same = succ_interval_iso(&quiver, i1, i1).unwrap();
        assert!(same.verified);
        assert_eq!(same.interval.len(), 1);
    }

    #[test]
    fn json_roundtrip() {
        let quiver = paper_quiver();
        let text = quiver.to_json();
        let again = Quiver::from_json(&text).unwrap();
        assert_eq!(again, quiver);
    }
}
