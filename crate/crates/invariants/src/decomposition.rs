//! Grade split of a quadruple rotation.
//!
//! With `R = (1 + e_ij)(1 + e_kl)(1 + e_mn)(1 + e_op)/4` the parts are taken
//! from `2R`: `alpha` is the scalar plus 8-form, `beta` the 2-form plus
//! 6-form and `delta` the 4-form.

use serde::{Deserialize, Serialize};

use sedenion_core::rational::{frac, int};
use sedenion_core::Multivector;

use crate::candidate::Candidate;
use crate::invariance::theta;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadDecomposition {
    pub alpha: Multivector,
    pub beta: Multivector,
    pub delta: Multivector,
}

impl QuadDecomposition {
    pub fn of(rotor: &Multivector) -> QuadDecomposition {
        let twice = rotor.scale(&int(2));
        QuadDecomposition {
            alpha: &twice.grade_part(0) + &twice.grade_part(8),
            beta: &twice.grade_part(2) + &twice.grade_part(6),
            delta: twice.grade_part(4),
        }
    }

    /// No rotation: `alpha = 1`, `beta = delta = 0`.
    pub fn identity() -> QuadDecomposition {
        QuadDecomposition { alpha: Multivector::one(15), beta: Multivector::zero(15), delta: Multivector::zero(15) }
    }

    pub fn sum(&self) -> Multivector {
        &(&self.alpha + &self.beta) + &self.delta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub alpha_idempotent: bool,
    pub beta_squared: bool,
    pub alpha_beta: bool,
    pub alpha_delta: bool,
    pub beta_delta: bool,
    pub delta_squared: bool,
    pub sum_is_twice_rotor: bool,
    pub polynomial: bool,
}

impl RelationReport {
    pub fn all(&self) -> bool {
        self.alpha_idempotent
            && self.beta_squared
            && self.alpha_beta
            && self.alpha_delta
            && self.beta_delta
            && self.delta_squared
            && self.sum_is_twice_rotor
            && self.polynomial
    }
}

/// `(q^4 + 2q^3 + 7q^2 + 8q + 6)/6`.
pub fn rotor_polynomial(q: &Multivector) -> Multivector {
    let q2 = q * q;
    let q3 = &q2 * q;
    let q4 = &q3 * q;
    let mut p = &q4 + &q3.scale(&int(2));
    p = &p + &q2.scale(&int(7));
    p = &p + &q.scale(&int(8));
    p = &p + &Multivector::scalar(15, int(6));
    p.scale(&frac(1, 6))
}

pub fn alpha_beta_delta(c: &Candidate) -> (QuadDecomposition, RelationReport) {
    let rotor = c.rotor().normalized().expect("four factors");
    let d = QuadDecomposition::of(&rotor);
    let one = Multivector::one(15);
    let (a, b, dl) = (&d.alpha, &d.beta, &d.delta);
    let report = RelationReport {
        alpha_idempotent: &(a * a) == a,
        beta_squared: b * b == (a - &one).scale(&int(4)),
        alpha_beta: (a * b).is_zero() && (b * a).is_zero(),
        alpha_delta: &(a * dl) == dl && &(dl * a) == dl,
        beta_delta: (b * dl).is_zero() && (dl * b).is_zero(),
        delta_squared: dl * dl == &a.scale(&int(3)) - &dl.scale(&int(2)),
        sum_is_twice_rotor: d.sum() == rotor.scale(&int(2)),
        polynomial: rotor_polynomial(&c.q()) == rotor,
    };
    (d, report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerOutcome {
    pub pass: bool,
    /// `delta = 0`, where the condition holds trivially.
    pub degenerate: bool,
}

/// `delta Theta + Theta delta + delta Theta delta = 3 alpha Theta`.
/// With no 4-form part there is no rotation to test and the outcome is a
/// vacuous pass flagged as degenerate.
pub fn stabilizer(d: &QuadDecomposition) -> StabilizerOutcome {
    if d.delta.is_zero() {
        return StabilizerOutcome { pass: true, degenerate: true };
    }
    let t = theta();
    let dt = &d.delta * t;
    let lhs = &(&dt + &(t * &d.delta)) + &(&dt * &d.delta);
    let rhs = (&d.alpha * t).scale(&int(3));
    StabilizerOutcome { pass: lhs == rhs, degenerate: d.delta.is_zero() }
}

pub fn stabilizer_check(c: &Candidate) -> bool {
    let rotor = c.rotor().normalized().expect("four factors");
    stabilizer(&QuadDecomposition::of(&rotor)).pass
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_degenerate() {
        let s = stabilizer(&QuadDecomposition::identity());
        assert!(s.degenerate && s.pass);
    }
}
