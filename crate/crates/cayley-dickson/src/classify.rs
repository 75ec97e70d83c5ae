//! Octonion-like algebras from signed 3-forms.
//!
//! A term `s e_ijk` of a 7-term 3-form reads as `e_i e_j = s e_k` (and its
//! cyclic shifts), with `e_j e_i = -s e_k` and `e_i^2 = -1`. The resulting
//! 7-dimensional algebra is sorted into O or P_k by its associator counts.

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use sedenion_core::{Blade, Multivector};
use thiserror::Error;

use crate::census::{triad_class, triads_of, TriadTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgebraTag {
    O,
    P4,
    P8,
    P10,
    P12,
    P14,
    P16,
    Unknown,
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for AlgebraTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "O" => AlgebraTag::O,
            "P4" => AlgebraTag::P4,
            "P8" => AlgebraTag::P8,
            "P10" => AlgebraTag::P10,
            "P12" => AlgebraTag::P12,
            "P14" => AlgebraTag::P14,
            "P16" => AlgebraTag::P16,
            _ => return Err(format!("unknown algebra class `{s}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraClass {
    pub tag: AlgebraTag,
    /// Counts of type A, B, C, X triads.
    pub counts: [u32; 4],
}

impl AlgebraClass {
    pub fn from_counts(counts: [u32; 4]) -> AlgebraClass {
        let [a, b, c, x] = counts;
        let tag = match (a, b, c, x) {
            (0, 0, 0, 28) => AlgebraTag::O,
            (_, 0, _, 4) => AlgebraTag::P4,
            (_, 4, _, 4) => AlgebraTag::P8,
            (_, 6, _, 4) => AlgebraTag::P10,
            (_, 8, _, 4) => AlgebraTag::P12,
            (_, 10, _, 4) => AlgebraTag::P14,
            (_, 12, _, 4) => AlgebraTag::P16,
            _ => AlgebraTag::Unknown,
        };
        AlgebraClass { tag, counts }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("expected 7 terms, found {0}")]
    TermCount(usize),
    #[error("term {0} is not a unit 3-blade over indices 1..7")]
    BadTerm(String),
    #[error("indices {0} and {1} appear together in {2} terms")]
    Incidence(u8, u8, usize),
}

/// Checks Fano incidence and returns the seven (sign, blade) lines.
pub fn fano_lines(form: &Multivector) -> Result<Vec<(i8, Blade)>, ClassifyError> {
    if form.len() != 7 {
        return Err(ClassifyError::TermCount(form.len()));
    }
    let mut lines = Vec::with_capacity(7);
    for (b, c) in form.terms() {
        if b.grade() != 3 || b.top() > 7 || !c.abs().is_one() {
            return Err(ClassifyError::BadTerm(b.to_string()));
        }
        lines.push((if c.is_negative() { -1 } else { 1 }, b));
    }
    for i in 1..=7u8 {
        for j in i + 1..=7 {
            let pair = 1u32 << (i - 1) | 1 << (j - 1);
            let n = lines.iter().filter(|(_, b)| b.0 & pair == pair).count();
            if n != 1 {
                return Err(ClassifyError::Incidence(i, j, n));
            }
        }
    }
    Ok(lines)
}

/// Structure constants of the algebra defined by a Fano 3-form:
/// `table[i][j]` is `e_i e_j` as (sign, index), index 0 meaning 1.
fn structure(lines: &[(i8, Blade)]) -> [[(i8, u8); 8]; 8] {
    let mut t = [[(1i8, 0u8); 8]; 8];
    for i in 0..8u8 {
        t[0][i as usize] = (1, i);
        t[i as usize][0] = (1, i);
        if i > 0 {
            t[i as usize][i as usize] = (-1, 0);
        }
    }
    for &(s, b) in lines {
        let ix: Vec<u8> = b.indices().collect();
        for r in 0..3 {
            let (i, j, k) = (ix[r], ix[(r + 1) % 3], ix[(r + 2) % 3]);
            t[i as usize][j as usize] = (s, k);
            t[j as usize][i as usize] = (-s, k);
        }
    }
    t
}

fn assoc(t: &[[(i8, u8); 8]; 8], x: u8, y: u8, z: u8) -> bool {
    let (s1, xy) = t[x as usize][y as usize];
    let (s2, l) = t[xy as usize][z as usize];
    let (s3, yz) = t[y as usize][z as usize];
    let (s4, r) = t[x as usize][yz as usize];
    debug_assert_eq!(l, r);
    s1 * s2 != s3 * s4
}

/// Classifies the algebra whose quaternion lines are the terms of `form`.
pub fn octonion_like_classify(form: &Multivector) -> Result<AlgebraClass, ClassifyError> {
    let lines = fano_lines(form)?;
    let t = structure(&lines);
    let mut counts = [0u32; 4];
    for a in 1..=7u8 {
        for b in a + 1..=7 {
            for c in b + 1..=7 {
                let pattern = (assoc(&t, b, a, c), assoc(&t, a, b, c), assoc(&t, a, c, b));
                match pattern {
                    (true, false, false) => counts[0] += 1,
                    (false, true, false) => counts[1] += 1,
                    (false, false, true) => counts[2] += 1,
                    (true, true, true) => counts[3] += 1,
                    _ => {}
                }
            }
        }
    }
    Ok(AlgebraClass::from_counts(counts))
}

/// Classifies a 7-element loop of basis elements under the Cayley-Dickson product.
pub fn classify_loop(members: &[u32; 7]) -> AlgebraClass {
    let mut counts = [0u32; 4];
    for t in triads_of(members) {
        match triad_class(t).tag {
            TriadTag::A => counts[0] += 1,
            TriadTag::B => counts[1] += 1,
            TriadTag::C => counts[2] += 1,
            TriadTag::X => counts[3] += 1,
            _ => {}
        }
    }
    AlgebraClass::from_counts(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sedenion_core::parse_form;

    #[test]
    fn theta64_is_octonionic() {
        let f = parse_form("+123 +145 +167 +246 -257 -347 -356", 7).unwrap();
        let c = octonion_like_classify(&f).unwrap();
        assert_eq!(c.tag, AlgebraTag::O);
        assert_eq!(c.counts, [0, 0, 0, 28]);
    }

    #[test]
    fn malformed() {
        let six = parse_form("+123 +145 +167 +246 -257 -347", 7).unwrap();
        assert_eq!(octonion_like_classify(&six), Err(ClassifyError::TermCount(6)));
        let repeated = parse_form("+123 +124 +167 +246 -257 -347 -356", 7).unwrap();
        assert!(matches!(octonion_like_classify(&repeated), Err(ClassifyError::Incidence(..))));
        let wide = parse_form("+123 +145 +167 +246 -257 -347 -358", 8).unwrap();
        assert!(matches!(octonion_like_classify(&wide), Err(ClassifyError::BadTerm(_))));
    }

    #[test]
    fn octonion_loop() {
        assert_eq!(classify_loop(&[1, 2, 3, 4, 5, 6, 7]).tag, AlgebraTag::O);
    }
}
