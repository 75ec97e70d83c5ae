//! Primary and signed invariant candidates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use sedenion_calibrations::named::{build, NamedForm};
use sedenion_calibrations::sharp::{dual_blade, Family};
use sedenion_core::rational::frac;
use sedenion_core::{Blade, Multivector, Rotor};

use crate::InvariantError;

/// Index pairs `(mu_a, mu_b)` of the grade-preserving pairings, 0-based.
pub const CYCLIC: [[(usize, usize); 4]; 3] = [
    [(0, 1), (2, 3), (4, 5), (6, 7)],
    [(0, 2), (1, 3), (4, 6), (5, 7)],
    [(0, 3), (1, 2), (4, 7), (5, 6)],
];

pub const MIXED: [[(usize, usize); 4]; 4] = [
    [(0, 4), (1, 5), (2, 6), (3, 7)],
    [(0, 5), (1, 4), (2, 7), (3, 6)],
    [(0, 6), (1, 7), (2, 4), (3, 5)],
    [(0, 7), (1, 6), (2, 5), (3, 4)],
];

/// Termwise sign patterns relating variant `v` to variant 1.
pub const VARIANTS: [[i8; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pairing {
    Cyclic,
    Mixed,
}

/// Invariant family: the part of `Phi` the source term belongs to, and for
/// octonion and P4 terms the pairing kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum InvFamily {
    A,
    OC,
    OM,
    PC,
    PM,
}

impl InvFamily {
    pub const ALL: [InvFamily; 5] = [InvFamily::A, InvFamily::OC, InvFamily::PC, InvFamily::OM, InvFamily::PM];

    pub fn new(part: Family, pairing: Pairing) -> InvFamily {
        match (part, pairing) {
            (Family::A, _) => InvFamily::A,
            (Family::O, Pairing::Cyclic) => InvFamily::OC,
            (Family::O, Pairing::Mixed) => InvFamily::OM,
            (Family::P, Pairing::Cyclic) => InvFamily::PC,
            (Family::P, Pairing::Mixed) => InvFamily::PM,
        }
    }

    pub fn part(self) -> Family {
        match self {
            InvFamily::A => Family::A,
            InvFamily::OC | InvFamily::OM => Family::O,
            InvFamily::PC | InvFamily::PM => Family::P,
        }
    }
}

impl fmt::Display for InvFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InvFamily::A => "A",
            InvFamily::OC => "OC",
            InvFamily::OM => "OM",
            InvFamily::PC => "PC",
            InvFamily::PM => "PM",
        };
        f.write_str(s)
    }
}

impl FromStr for InvFamily {
    type Err = InvariantError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InvFamily::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| InvariantError::Parse(format!("unknown family `{s}`")))
    }
}

/// All-positive invariant generated from one dual term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Primary {
    /// The 8-blade of `Phi*` it partitions.
    pub source: Blade,
    /// Subalgebra index `i` with `source = Phi_i*`.
    pub subalgebra: u8,
    pub pairing: Pairing,
    /// Position of the pairing within its map, 0-based.
    pub slot: u8,
    /// The four 2-blades in generation order.
    pub pairs: [Blade; 4],
}

impl Primary {
    pub fn family(&self) -> InvFamily {
        InvFamily::new(Family::of(self.subalgebra), self.pairing)
    }

    pub fn with_signs(&self, signs: [i8; 4]) -> Candidate {
        Candidate { primary: *self, signs }
    }
}

/// A primary with concrete term signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Candidate {
    pub primary: Primary,
    pub signs: [i8; 4],
}

impl Candidate {
    pub fn terms(&self) -> [(i8, Blade); 4] {
        let p = self.primary.pairs;
        [(self.signs[0], p[0]), (self.signs[1], p[1]), (self.signs[2], p[2]), (self.signs[3], p[3])]
    }

    pub fn family(&self) -> InvFamily {
        self.primary.family()
    }

    /// `1/2 (s1 e_ij + s2 e_kl + s3 e_mn + s4 e_op)`.
    pub fn q(&self) -> Multivector {
        Multivector::from_terms(15, self.terms().map(|(s, b)| (b, frac(s as i64, 2)))).expect("2-blades in Cl(15)")
    }

    /// Product of the four quarter turns `(1 + s e)/sqrt(2)`.
    pub fn rotor(&self) -> Rotor {
        Rotor::from_bivectors(15, &self.terms()).expect("disjoint 2-blades")
    }

    /// Termwise product with a sign pattern.
    pub fn times(&self, pattern: [i8; 4]) -> Candidate {
        let mut signs = self.signs;
        for (s, p) in signs.iter_mut().zip(pattern) {
            *s *= p;
        }
        Candidate { primary: self.primary, signs }
    }

    pub fn negated(&self) -> Candidate {
        self.times([-1; 4])
    }

    /// Even number of minus signs.
    pub fn even(&self) -> bool {
        self.signs.iter().filter(|&&s| s < 0).count() % 2 == 0
    }

    /// Representative with a positive first sign.
    pub fn canonical(&self) -> Candidate {
        if self.signs[0] < 0 {
            self.negated()
        } else {
            *self
        }
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|(s, b)| format!("{}{}", if *s < 0 { '-' } else { '+' }, b.to_hex()))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn dual_terms() -> Vec<Blade> {
    build(NamedForm::PhiDual).expect("fixed name").blades().collect()
}

fn subalgebra_of(term: Blade) -> Result<u8, InvariantError> {
    (1..=15u8)
        .find(|&i| dual_blade(i).expect("in range") == term)
        .ok_or_else(|| InvariantError::NotADualTerm(term.to_hex()))
}

fn pairings(term: Blade, pairing: Pairing, table: &[[(usize, usize); 4]]) -> Result<Vec<Primary>, InvariantError> {
    let subalgebra = subalgebra_of(term)?;
    let mu: Vec<u8> = term.indices().collect();
    Ok(table
        .iter()
        .enumerate()
        .map(|(slot, p)| Primary {
            source: term,
            subalgebra,
            pairing,
            slot: slot as u8,
            pairs: p.map(|(a, b)| Blade::from_indices(&[mu[a], mu[b]])),
        })
        .collect())
}

/// The three cyclic pairings of a dual term.
pub fn cyclic_invariants(term: Blade) -> Result<Vec<Primary>, InvariantError> {
    pairings(term, Pairing::Cyclic, &CYCLIC)
}

/// The four mixed pairings of a dual term.
pub fn mixed_invariants(term: Blade) -> Result<Vec<Primary>, InvariantError> {
    pairings(term, Pairing::Mixed, &MIXED)
}

/// All 105 primaries, ordered by subalgebra index, then cyclic before mixed.
pub fn primaries() -> Vec<Primary> {
    let mut terms = dual_terms();
    terms.sort_by_key(|&t| subalgebra_of(t).expect("dual term"));
    terms
        .into_iter()
        .flat_map(|t| {
            let mut v = cyclic_invariants(t).expect("dual term");
            v.extend(mixed_invariants(t).expect("dual term"));
            v
        })
        .collect()
}

/// Each primary under the four variant patterns: 420 candidates.
pub fn signed_candidates() -> Vec<Candidate> {
    primaries()
        .into_iter()
        .flat_map(|p| VARIANTS.map(|v| p.with_signs(v)))
        .collect()
}
