//! Two-term zero divisors inside a loop.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::basis::cd_sign;

/// `(o_a + s o_b)(o_c + t o_d) = 0` with `a < b`, `c < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZeroDivisorPair {
    pub x: (u32, i8, u32),
    pub y: (u32, i8, u32),
}

impl ZeroDivisorPair {
    /// The unordered pair of two-element supports.
    pub fn supports(&self) -> ((u32, u32), (u32, u32)) {
        let p = (self.x.0, self.x.2);
        let q = (self.y.0, self.y.2);
        if p <= q {
            (p, q)
        } else {
            (q, p)
        }
    }
}

/// `(o_a + s o_b)(o_c + t o_d)` is zero iff the four basis products cancel in pairs.
fn product_vanishes(a: u32, s: i8, b: u32, c: u32, t: i8, d: u32) -> bool {
    // terms: ac, t ad, s bc, st bd, with a^c == b^d and a^d == b^c required
    if a ^ c != b ^ d || a ^ d != b ^ c {
        return false;
    }
    cd_sign(a, c) + s * t * cd_sign(b, d) == 0 && t * cd_sign(a, d) + s * cd_sign(b, c) == 0
}

/// Every ordered pair `(x, y)` of two-term elements of the loop with `xy = 0`.
/// Each factor is normalised to a leading coefficient of +1.
pub fn zero_divisor_pairs(members: &[u32; 7]) -> Vec<ZeroDivisorPair> {
    let mut terms = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let (a, b) = (a.min(b), a.max(b));
            for s in [1i8, -1] {
                terms.push((a, s, b));
            }
        }
    }
    let mut out = Vec::new();
    for &x in &terms {
        for &y in &terms {
            if product_vanishes(x.0, x.1, x.2, y.0, y.1, y.2) {
                out.push(ZeroDivisorPair { x, y });
            }
        }
    }
    out
}

/// Distinct unordered support pairs `{{a, b}, {c, d}}` among the zero divisors.
pub fn support_pairs(pairs: &[ZeroDivisorPair]) -> BTreeSet<((u32, u32), (u32, u32))> {
    pairs.iter().map(ZeroDivisorPair::supports).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{generate_loop, Triad};
    use crate::element::{associator, CdElement};
    use crate::CdBasis;
    use num_traits::One;
    use sedenion_core::Rational;

    fn elem(level: u8, (a, s, b): (u32, i8, u32)) -> CdElement {
        CdElement::from_terms(level, [(CdBasis(a), Rational::one()), (CdBasis(b), Rational::from_integer(s.into()))])
    }

    #[test]
    fn octonions_have_none() {
        assert!(zero_divisor_pairs(&[1, 2, 3, 4, 5, 6, 7]).is_empty());
    }

    #[test]
    fn p4_witnesses_multiply_to_zero() {
        let lp = generate_loop(Triad::new(1, 2, 12).unwrap()).unwrap();
        let pairs = zero_divisor_pairs(&lp);
        assert!(!pairs.is_empty());
        for p in &pairs {
            // brute-force product in the full algebra as the oracle
            assert!((&elem(4, p.x) * &elem(4, p.y)).is_zero(), "{p:?}");
        }
        let _ = associator;
    }
}
