//! Associator classification of basis triads, loops and stacking counts.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{cd_sign, CdBasis};
use crate::CdError;

/// Three distinct pure basis elements with `a < b < c` in graded order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triad {
    pub a: CdBasis,
    pub b: CdBasis,
    pub c: CdBasis,
}

impl Triad {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Triad, CdError> {
        if a == 0 || !(a < b && b < c) {
            return Err(CdError::InvalidTriad(CdBasis(a).to_string(), CdBasis(b).to_string(), CdBasis(c).to_string()));
        }
        Ok(Triad { a: CdBasis(a), b: CdBasis(b), c: CdBasis(c) })
    }

    /// True if `c = ab` up to sign, i.e. the triad spans a quaternion subalgebra.
    pub fn is_closed(&self) -> bool {
        self.a.0 ^ self.b.0 == self.c.0
    }

    fn names(&self) -> (String, String, String) {
        (self.a.to_string(), self.b.to_string(), self.c.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TriadTag {
    Quaternion,
    AntiQuaternion,
    A,
    B,
    C,
    X,
    /// A nonzero pattern outside the four named types; only seen above A(4).
    Other,
}

impl TriadTag {
    pub const ALL: [TriadTag; 7] =
        [TriadTag::Quaternion, TriadTag::AntiQuaternion, TriadTag::A, TriadTag::B, TriadTag::C, TriadTag::X, TriadTag::Other];

    pub fn is_associative(self) -> bool {
        matches!(self, TriadTag::Quaternion | TriadTag::AntiQuaternion)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadClass {
    pub triad: Triad,
    pub tag: TriadTag,
    /// Signs of `[b,a,c]`, `[a,b,c]`, `[a,c,b]`; 0 where the associator vanishes.
    /// A nonzero basis associator is always `2 s o_(abc)`.
    pub witness: [i8; 3],
}

/// `(xy)z - x(yz)` for basis elements, as a sign in {-2, 0, 2} / 2.
fn basis_associator(x: u32, y: u32, z: u32) -> i8 {
    let left = cd_sign(x, y) * cd_sign(x ^ y, z);
    let right = cd_sign(y, z) * cd_sign(x, y ^ z);
    (left - right) / 2
}

pub fn triad_class(t: Triad) -> TriadClass {
    let (a, b, c) = (t.a.0, t.b.0, t.c.0);
    let witness = [basis_associator(b, a, c), basis_associator(a, b, c), basis_associator(a, c, b)];
    let nz = witness.map(|w| w != 0);
    let tag = match nz {
        [false, false, false] => {
            // associative: the canonical product abc is a real unit
            let s = cd_sign(a, b) * cd_sign(a ^ b, c);
            if t.is_closed() && s < 0 {
                TriadTag::Quaternion
            } else if t.is_closed() {
                TriadTag::AntiQuaternion
            } else {
                TriadTag::Other
            }
        }
        [true, false, false] => TriadTag::A,
        [false, true, false] => TriadTag::B,
        [false, false, true] => TriadTag::C,
        [true, true, true] => TriadTag::X,
        _ => TriadTag::Other,
    };
    TriadClass { triad: t, tag, witness }
}

/// All canonical triads of pure elements drawn from `members` (ascending).
pub fn triads_of(members: &[u32]) -> Vec<Triad> {
    let mut m = members.to_vec();
    m.sort_unstable();
    let mut out = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            for k in j + 1..m.len() {
                out.push(Triad { a: CdBasis(m[i]), b: CdBasis(m[j]), c: CdBasis(m[k]) });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub level: u8,
    pub total: usize,
    pub counts: BTreeMap<TriadTag, usize>,
}

impl Census {
    pub fn count(&self, tag: TriadTag) -> usize {
        self.counts.get(&tag).copied().unwrap_or(0)
    }

    /// Quaternion plus anti-quaternion triads.
    pub fn associative(&self) -> usize {
        self.count(TriadTag::Quaternion) + self.count(TriadTag::AntiQuaternion)
    }
}

/// Classifies every canonical triad of A(level).
pub fn census(level: u8) -> Census {
    let members: Vec<u32> = (1..1u32 << level).collect();
    let triads = triads_of(&members);
    let tags: Vec<TriadTag> = triads.par_iter().map(|t| triad_class(*t).tag).collect();
    let mut counts = BTreeMap::new();
    for tag in tags {
        *counts.entry(tag).or_insert(0) += 1;
    }
    Census { level, total: triads.len(), counts }
}

/// The 7-element loop generated by a non-quaternionic triad, sorted.
pub fn generate_loop(t: Triad) -> Result<[u32; 7], CdError> {
    if t.is_closed() {
        let (a, b, c) = t.names();
        return Err(CdError::Quaternionic(a, b, c));
    }
    let (a, b, c) = (t.a.0, t.b.0, t.c.0);
    let mut out = [a, b, a ^ b, c, a ^ c, b ^ c, a ^ b ^ c];
    out.sort_unstable();
    Ok(out)
}

/// Every distinct 7-element loop of A(level), sorted.
pub fn loops(level: u8) -> Vec<[u32; 7]> {
    let members: Vec<u32> = (1..1u32 << level).collect();
    let set: BTreeSet<[u32; 7]> = triads_of(&members).into_iter().filter_map(|t| generate_loop(t).ok()).collect();
    set.into_iter().collect()
}

/// The quaternion triads inside a loop.
pub fn loop_quaternions(lp: &[u32; 7]) -> Vec<Triad> {
    triads_of(lp).into_iter().filter(Triad::is_closed).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StackingCounts {
    pub level: u8,
    pub h: u64,
    pub t: u64,
    pub embeddings: u64,
    /// Enumerated values of (H, T, embeddings), for small levels.
    pub enumerated: Option<(u64, u64, u64)>,
}

impl StackingCounts {
    pub fn consistent(&self) -> bool {
        self.enumerated.map_or(true, |e| e == (self.h, self.t, self.embeddings))
    }
}

/// Closed forms for quaternion count H, octonion-like count T and the number
/// of embedded subalgebras with one generator fewer, with exhaustive checks
/// for levels up to 4.
pub fn stacking_counts(level: u8) -> StackingCounts {
    let m = (1u64 << level) - 1;
    let h = m * (m - 1) / 6;
    let t = if level >= 3 { m * (m - 1) * (m - 3) / 168 } else { 0 };
    let enumerated = (level <= 4).then(|| {
        let c = census(level);
        (c.associative() as u64, loops(level).len() as u64, count_subalgebras(level, (1 << (level - 1)) - 1))
    });
    StackingCounts { level, h, t, embeddings: m, enumerated }
}

/// Number of XOR-closed sets of `size` pure elements in A(level).
fn count_subalgebras(level: u8, size: u32) -> u64 {
    let n = (1u32 << level) - 1;
    let mut count = 0;
    for subset in 1u32..1 << n {
        if subset.count_ones() != size {
            continue;
        }
        let elems: Vec<u32> = (0..n).filter(|i| subset >> i & 1 == 1).map(|i| i + 1).collect();
        let closed = elems.iter().all(|&x| {
            elems.iter().all(|&y| x == y || subset >> ((x ^ y) - 1) & 1 == 1)
        });
        if closed {
            count += 1;
        }
    }
    count
}

/// For each quaternion of A(level), the number of loops containing it; and for
/// each pair of loops, the number of quaternions they share.
pub fn quaternion_sharing(level: u8) -> (Vec<usize>, Vec<usize>) {
    let lps = loops(level);
    let qs: Vec<BTreeSet<Triad>> = lps.iter().map(|l| loop_quaternions(l).into_iter().collect()).collect();
    let members: Vec<u32> = (1..1u32 << level).collect();
    let per_q = triads_of(&members)
        .into_iter()
        .filter(Triad::is_closed)
        .map(|q| qs.iter().filter(|s| s.contains(&q)).count())
        .collect();
    let mut pairs = Vec::new();
    for i in 0..qs.len() {
        for j in i + 1..qs.len() {
            pairs.push(qs[i].intersection(&qs[j]).count());
        }
    }
    (per_q, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_triads() {
        assert_eq!(triad_class(Triad::new(1, 2, 3).unwrap()).tag, TriadTag::Quaternion);
        assert_eq!(triad_class(Triad::new(1, 2, 4).unwrap()).tag, TriadTag::X);
        // o1, o2, o34: only [a,c,b] survives
        let t = triad_class(Triad::new(1, 2, 12).unwrap());
        assert_eq!(t.tag, TriadTag::C);
        assert_eq!(t.witness.map(|w| w != 0), [false, false, true]);
    }

    #[test]
    fn quaternion_census() {
        let c = census(2);
        assert_eq!(c.total, 1);
        assert_eq!(c.count(TriadTag::Quaternion), 1);
    }

    #[test]
    fn octonion_census() {
        let c = census(3);
        assert_eq!(c.total, 35);
        assert_eq!(c.associative(), 7);
        assert_eq!(c.count(TriadTag::X), 28);
    }

    #[test]
    fn loops_from_triads() {
        assert_eq!(generate_loop(Triad::new(1, 2, 4).unwrap()).unwrap(), [1, 2, 3, 4, 5, 6, 7]);
        assert!(matches!(generate_loop(Triad::new(1, 2, 3).unwrap()), Err(CdError::Quaternionic(..))));
        assert!(Triad::new(2, 1, 3).is_err());
    }

    #[test]
    fn subalgebra_counts() {
        assert_eq!(count_subalgebras(2, 1), 3);
        assert_eq!(count_subalgebras(3, 3), 7);
    }
}
