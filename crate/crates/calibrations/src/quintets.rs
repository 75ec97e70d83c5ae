//! Five-term idempotent products of the dual calibration.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sedenion_core::rational::frac;
use sedenion_core::{Blade, Multivector};

use crate::named::{build, NamedForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuintetCounts {
    pub total: usize,
    pub passing: usize,
    pub failing: usize,
}

/// `prod 1/2 (1 + t)` over the given blades, in order.
pub fn quintet_product(terms: &[Blade]) -> Multivector {
    let half = frac(1, 2);
    terms.iter().fold(Multivector::one(15), |acc, &t| {
        let idem = (&Multivector::one(15) + &Multivector::blade(15, t, frac(1, 1))).scale(&half);
        &acc * &idem
    })
}

/// `(1 + Phi*)/16`.
pub fn dual_idempotent() -> Multivector {
    let dual = build(NamedForm::PhiDual).expect("fixed name");
    (&Multivector::one(15) + &dual).scale(&frac(1, 16))
}

/// Counts the 5-subsets of dual terms whose idempotent product is `(1 + Phi*)/16`.
pub fn idempotent_quintets() -> QuintetCounts {
    let dual = build(NamedForm::PhiDual).expect("fixed name");
    let target = dual_idempotent();
    let blades: Vec<Blade> = dual.blades().collect();
    let subsets: Vec<Vec<Blade>> = blades.into_iter().combinations(5).collect();
    let passing = subsets.par_iter().filter(|s| quintet_product(s) == target).count();
    QuintetCounts { total: subsets.len(), passing, failing: subsets.len() - passing }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_idempotent_squares_to_itself() {
        let p = dual_idempotent();
        assert_eq!(&p * &p, p);
    }
}
