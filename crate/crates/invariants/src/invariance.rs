//! Invariance of `Phi` under quadruple quarter turns.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use sedenion_calibrations::named::{build, NamedForm};
use sedenion_core::{Blade, Multivector};
use sedenion_maps::GenMap;

use crate::candidate::{Candidate, Primary, VARIANTS};

pub(crate) fn phi() -> &'static Multivector {
    static PHI: OnceLock<Multivector> = OnceLock::new();
    PHI.get_or_init(|| build(NamedForm::Phi).expect("fixed name"))
}

pub(crate) fn theta() -> &'static Multivector {
    static THETA: OnceLock<Multivector> = OnceLock::new();
    THETA.get_or_init(|| build(NamedForm::Theta).expect("fixed name"))
}

/// Outcome of conjugating `Phi` by a candidate's rotor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Invariance {
    /// `R Phi R^-1 = Phi`.
    Strict,
    /// Same blades, with the listed terms of `Phi` negated.
    ParityRelaxed { flipped: Vec<Blade> },
    NotInvariant,
}

impl Invariance {
    pub fn is_strict(&self) -> bool {
        matches!(self, Invariance::Strict)
    }

    pub fn is_relaxed_pass(&self) -> bool {
        !matches!(self, Invariance::NotInvariant)
    }
}

pub fn invariance(c: &Candidate) -> Invariance {
    let image = c.rotor().conjugate(phi());
    if &image == phi() {
        return Invariance::Strict;
    }
    let same_blades = image.len() == phi().len() && image.blades().zip(phi().blades()).all(|(a, b)| a == b);
    let unit_coeffs = image.terms().all(|(b, x)| x == &phi().coeff(b) || x == &-phi().coeff(b));
    if same_blades && unit_coeffs {
        let flipped = image.terms().filter(|(b, x)| **x != phi().coeff(*b)).map(|(b, _)| b).collect();
        Invariance::ParityRelaxed { flipped }
    } else {
        Invariance::NotInvariant
    }
}

/// Strict invariance.
pub fn is_invariant(c: &Candidate) -> bool {
    invariance(c).is_strict()
}

/// Sign patterns with a positive first sign that make the primary strictly invariant.
pub fn sign_search(p: &Primary) -> Vec<[i8; 4]> {
    let mut out = Vec::new();
    for bits in 0..8u8 {
        let signs = [1, sign(bits, 0), sign(bits, 1), sign(bits, 2)];
        if is_invariant(&p.with_signs(signs)) {
            out.push(signs);
        }
    }
    out
}

fn sign(bits: u8, k: u8) -> i8 {
    if bits >> k & 1 == 1 {
        -1
    } else {
        1
    }
}

/// The necessary automorphism condition under the `Cl(15)` generator map.
pub fn map_filter(c: &Candidate) -> bool {
    static MAP: OnceLock<GenMap> = OnceLock::new();
    MAP.get_or_init(GenMap::map15).automorphism_filter(&c.terms()).expect("2-blades in Cl(15)")
}

/// Strict invariance and the map filter for each of the four variants of `c`.
pub fn variant_profile(c: &Candidate) -> [(bool, bool); 4] {
    VARIANTS.map(|v| {
        let x = c.times(v);
        (is_invariant(&x), map_filter(&x))
    })
}
