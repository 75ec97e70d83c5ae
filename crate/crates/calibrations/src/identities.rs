//! Exact identity checks.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sedenion_core::rational::{frac, int};
use sedenion_core::{format_form, parse_form, Blade, Multivector};

use crate::named::{build, theta_i, NamedForm};
use crate::quintets::quintet_product;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    /// `(3 e1234567 + theta64)^2 = -16`
    SevenDc,
    /// `rho^2 = -1`
    RhoSquared,
    /// `psi^2 = -1`
    PsiSquared,
    /// `(3 I - Phi_O)^2 = -16`
    Obc,
    /// `e89ABCDEF Phi_O = Phi_P`
    Obc1,
    /// `-I Phi` equals the transcribed 8-form
    DualPhi,
    /// `sum Theta_i = 9 Theta`
    SumTheta,
    /// Cube law for `Theta_i`.
    CubeLaw(u8),
    /// Five idempotents from the first five dual terms give `(1 + Phi*)/16`.
    QuintetDisplay,
}

impl IdentityId {
    pub fn all() -> Vec<IdentityId> {
        let mut v = vec![
            IdentityId::SevenDc,
            IdentityId::RhoSquared,
            IdentityId::PsiSquared,
            IdentityId::Obc,
            IdentityId::Obc1,
            IdentityId::DualPhi,
            IdentityId::SumTheta,
        ];
        v.extend((1..=15).map(IdentityId::CubeLaw));
        v.push(IdentityId::QuintetDisplay);
        v
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::SevenDc => write!(f, "7dc"),
            IdentityId::RhoSquared => write!(f, "rho_sq"),
            IdentityId::PsiSquared => write!(f, "psi_sq"),
            IdentityId::Obc => write!(f, "obc"),
            IdentityId::Obc1 => write!(f, "obc1"),
            IdentityId::DualPhi => write!(f, "dual_phi"),
            IdentityId::SumTheta => write!(f, "sum_theta"),
            IdentityId::CubeLaw(i) => write!(f, "cube_theta_{i}"),
            IdentityId::QuintetDisplay => write!(f, "quintet_display"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub pass: bool,
    pub lhs_terms: Vec<String>,
    pub rhs_terms: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn terms_of(x: &Multivector) -> Vec<String> {
    if x.is_zero() {
        return vec!["0".to_string()];
    }
    format_form(x).split_whitespace().map(str::to_string).collect()
}

fn report(id: IdentityId, lhs: &Multivector, rhs: &Multivector, note: Option<String>) -> Report {
    Report { identity: id.to_string(), pass: lhs == rhs, lhs_terms: terms_of(lhs), rhs_terms: terms_of(rhs), note }
}

fn named(f: NamedForm) -> Multivector {
    build(f).expect("fixed names always build")
}

/// `Theta_i^3` against its expected reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeLaw {
    pub index: u8,
    pub cube: Multivector,
    /// Terms `t` of `Theta_i` with `Theta_i^3 = -19 Theta_i + 6 Phi_i + 24 t`
    /// (only searched for the P4 subalgebras, `i >= 9`).
    pub admissible: Vec<Blade>,
    pub pass: bool,
}

pub fn cube_law(i: u8) -> CubeLaw {
    let t = theta_i(i).expect("index in range");
    let phi = named(NamedForm::PhiI(i));
    let cube = t.pow(3);
    if i <= 8 {
        let rhs = &t.scale(&int(-43)) + &phi.scale(&int(-42));
        let pass = cube == rhs;
        return CubeLaw { index: i, cube, admissible: vec![], pass };
    }
    let base = &t.scale(&int(-19)) + &phi.scale(&int(6));
    let admissible: Vec<Blade> = t
        .terms()
        .filter(|(b, c)| cube == &base + &Multivector::blade(15, *b, (*c).clone() * int(24)))
        .map(|(b, _)| b)
        .collect();
    let pass = admissible.len() == 1;
    CubeLaw { index: i, cube, admissible, pass }
}

pub fn verify_identity(id: IdentityId) -> Report {
    let i15 = Multivector::pseudoscalar(15);
    let one15 = Multivector::one(15);
    match id {
        IdentityId::SevenDc => {
            let x = &Multivector::pseudoscalar(7).scale(&int(3)) + &named(NamedForm::Theta64);
            report(id, &(&x * &x), &Multivector::scalar(7, int(-16)), None)
        }
        IdentityId::RhoSquared => {
            let r = named(NamedForm::Rho);
            report(id, &(&r * &r), &Multivector::scalar(7, int(-1)), None)
        }
        IdentityId::PsiSquared => {
            let p = named(NamedForm::Psi);
            report(id, &(&p * &p), &Multivector::scalar(15, int(-1)), None)
        }
        IdentityId::Obc => {
            let x = &i15.scale(&int(3)) - &named(NamedForm::PhiO);
            report(id, &(&x * &x), &Multivector::scalar(15, int(-16)), None)
        }
        IdentityId::Obc1 => {
            let e = parse_form("+89ABCDEF", 15).expect("literal");
            report(id, &(&e * &named(NamedForm::PhiO)), &named(NamedForm::PhiP), None)
        }
        IdentityId::DualPhi => report(id, &named(NamedForm::Phi).dual(), &named(NamedForm::PhiDual), None),
        IdentityId::SumTheta => {
            let sum = (1..=15).fold(Multivector::zero(15), |acc, i| &acc + &named(NamedForm::ThetaI(i)));
            report(id, &sum, &named(NamedForm::Theta).scale(&int(9)), None)
        }
        IdentityId::CubeLaw(i) => {
            let law = cube_law(i);
            let t = theta_i(i).expect("index in range");
            let phi = named(NamedForm::PhiI(i));
            let (rhs, note) = if i <= 8 {
                (&t.scale(&int(-43)) + &phi.scale(&int(-42)), None)
            } else {
                let base = &t.scale(&int(-19)) + &phi.scale(&int(6));
                let found: Vec<String> = law.admissible.iter().map(|b| format!("e{}", b.to_hex())).collect();
                let rhs = match law.admissible.as_slice() {
                    [b] => &base + &Multivector::blade(15, *b, t.coeff(*b) * int(24)),
                    _ => base,
                };
                (rhs, Some(format!("theta = [{}]", found.join(", "))))
            };
            let mut r = report(id, &law.cube, &rhs, note);
            r.pass = law.pass;
            r
        }
        IdentityId::QuintetDisplay => {
            let dual = named(NamedForm::PhiDual);
            let first: Vec<Blade> = crate::fixtures::form("quintet", 15).blades().collect();
            let lhs = quintet_product(&first);
            let rhs = (&one15 + &dual).scale(&frac(1, 16));
            report(id, &lhs, &rhs, None)
        }
    }
}

/// Every identity, in a fixed order.
pub fn all_identities() -> Vec<Report> {
    IdentityId::all().into_par_iter().map(verify_identity).collect()
}
