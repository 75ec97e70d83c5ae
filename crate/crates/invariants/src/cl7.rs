//! Double quarter turns fixing the `Cl(7)` calibration.

use serde::{Deserialize, Serialize};

use sedenion_calibrations::named::{build, NamedForm};
use sedenion_core::rational::frac;
use sedenion_core::{Blade, Multivector, Rotor, Span};

const PAIRINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cl7Pair {
    pub source: Blade,
    pub pairs: [Blade; 2],
    /// Relative signs of the second turn that fix the calibration.
    pub fixing_signs: Vec<i8>,
}

impl Cl7Pair {
    /// `(e_ab + s e_cd)/2` for the first fixing sign.
    pub fn element(&self) -> Option<Multivector> {
        let s = *self.fixing_signs.first()?;
        Multivector::from_terms(7, [(self.pairs[0], frac(1, 2)), (self.pairs[1], frac(s.into(), 2))]).ok()
    }
}

pub fn fixes(pairs: [(i8, Blade); 2]) -> bool {
    let theta = build(NamedForm::Theta64).expect("fixed name");
    let rotor = Rotor::from_bivectors(7, &pairs).expect("disjoint 2-blades");
    rotor.conjugate(&theta) == theta
}

/// The 21 pairings of the 4-form terms of the dual calibration.
pub fn cl7_pairs() -> Vec<Cl7Pair> {
    let dual = build(NamedForm::Theta64Dual).expect("fixed name");
    dual.blades()
        .flat_map(|src| {
            let mu: Vec<u8> = src.indices().collect();
            PAIRINGS.iter().map(move |p| {
                let pairs = p.map(|(a, b)| Blade::from_indices(&[mu[a], mu[b]]));
                let fixing_signs = [1i8, -1].into_iter().filter(|&s| fixes([(1, pairs[0]), (s, pairs[1])])).collect();
                Cl7Pair { source: src, pairs, fixing_signs }
            })
        })
        .collect()
}

/// Rank of the fixing elements; 14 for G2.
pub fn cl7_rank(pairs: &[Cl7Pair]) -> usize {
    let xs: Vec<Multivector> = pairs.iter().filter_map(Cl7Pair::element).collect();
    Span::from_vectors(7, xs.iter()).rank()
}
