//! Basis blades of Cl(n) as generator bitmasks.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A basis blade `e_S`. Generator `k` (1-based) is bit `k-1`; the empty mask
/// is the scalar unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Blade(pub u32);

/// Sign of `e_a e_b` under a Euclidean metric.
///
/// Counts, for every generator of `b`, the generators of `a` above it; each
/// such pair costs one transposition.
#[inline]
pub fn product_sign(a: u32, b: u32) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Sign picked up by reversing a blade of grade `g`.
#[inline]
pub fn reverse_sign(g: u32) -> i8 {
    if (g * g.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Hex digit for a 1-based generator index (1..=F, G for 16).
pub fn index_char(k: u8) -> char {
    match k {
        1..=9 => (b'0' + k) as char,
        10..=15 => (b'A' + k - 10) as char,
        16 => 'G',
        _ => '?',
    }
}

pub fn char_index(c: char) -> Option<u8> {
    match c {
        '1'..='9' => Some(c as u8 - b'0'),
        'A'..='F' => Some(c as u8 - b'A' + 10),
        'a'..='f' => Some(c as u8 - b'a' + 10),
        'G' | 'g' => Some(16),
        _ => None,
    }
}

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_indices(indices: &[u8]) -> Blade {
        Blade(indices.iter().fold(0, |m, &k| m | 1 << (k - 1)))
    }

    /// Parses a run of hex indices such as `12AB`. Repeated indices are rejected.
    pub fn from_hex(s: &str) -> Option<Blade> {
        let mut mask = 0u32;
        for c in s.chars() {
            let bit = 1u32 << (char_index(c)? - 1);
            if mask & bit != 0 {
                return None;
            }
            mask |= bit;
        }
        Some(Blade(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u8> {
        (0..32u8).filter(move |i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }

    /// Highest generator index, 0 for the scalar.
    pub fn top(self) -> u8 {
        (32 - self.0.leading_zeros()) as u8
    }

    pub fn to_hex(self) -> String {
        self.indices().map(index_char).collect()
    }

    pub fn mul(self, other: Blade) -> (i8, Blade) {
        (product_sign(self.0, other.0), Blade(self.0 ^ other.0))
    }

    pub fn reverse_sign(self) -> i8 {
        reverse_sign(self.grade())
    }

    pub fn is_disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            write!(f, "1")
        } else {
            write!(f, "e{}", self.to_hex())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Sign by bubble-sorting the concatenated index word and cancelling pairs.
    fn oracle(a: Blade, b: Blade) -> (i8, Blade) {
        let mut word: Vec<u8> = a.indices().chain(b.indices()).collect();
        let mut sign = 1i8;
        for i in 0..word.len() {
            for j in 0..word.len() - 1 - i {
                if word[j] > word[j + 1] {
                    word.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let mut out = Vec::new();
        for k in word {
            if out.last() == Some(&k) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        (sign, Blade::from_indices(&out))
    }

    #[test]
    fn ordered_generators() {
        let e1 = Blade::from_hex("1").unwrap();
        let e2 = Blade::from_hex("2").unwrap();
        assert_eq!(e1.mul(e2), (1, Blade::from_hex("12").unwrap()));
        assert_eq!(e2.mul(e1), (-1, Blade::from_hex("12").unwrap()));
    }

    #[test]
    fn e12_e13() {
        let r = Blade::from_hex("12").unwrap().mul(Blade::from_hex("13").unwrap());
        assert_eq!(r, (-1, Blade::from_hex("23").unwrap()));
        assert_eq!(r, oracle(Blade::from_hex("12").unwrap(), Blade::from_hex("13").unwrap()));
    }

    #[test]
    fn matches_oracle_cl7() {
        for a in 0..128 {
            for b in 0..128 {
                assert_eq!(Blade(a).mul(Blade(b)), oracle(Blade(a), Blade(b)), "{a} {b}");
            }
        }
    }

    #[test]
    fn hex_round_trip() {
        let b = Blade::from_hex("89ABCDEF").unwrap();
        assert_eq!(b.grade(), 8);
        assert_eq!(b.to_hex(), "89ABCDEF");
        assert_eq!(b.top(), 15);
        assert!(Blade::from_hex("11").is_none());
        assert!(Blade::from_hex("1x").is_none());
    }

    #[test]
    fn reversal() {
        let signs: Vec<i8> = (0..6).map(reverse_sign).collect();
        assert_eq!(signs, vec![1, 1, -1, -1, 1, 1]);
    }
}
