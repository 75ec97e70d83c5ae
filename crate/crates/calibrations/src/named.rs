//! Named forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use sedenion_core::rational::frac;
use sedenion_core::{Blade, Multivector};

use crate::fixtures::{form, subalgebra_rows};
use crate::CalibrationError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NamedForm {
    Theta1,
    Theta64,
    Theta64Dual,
    Theta64Prime,
    Theta,
    ThetaI(u8),
    PhiA,
    PhiO,
    PhiP,
    Phi,
    PhiI(u8),
    PhiDual,
    Psi,
    Rho,
}

impl NamedForm {
    pub const FIXED: [NamedForm; 12] = [
        NamedForm::Theta1,
        NamedForm::Theta64,
        NamedForm::Theta64Dual,
        NamedForm::Theta64Prime,
        NamedForm::Theta,
        NamedForm::PhiA,
        NamedForm::PhiO,
        NamedForm::PhiP,
        NamedForm::Phi,
        NamedForm::PhiDual,
        NamedForm::Psi,
        NamedForm::Rho,
    ];

    /// Every name, including the fifteen indexed ones of each kind.
    pub fn all() -> Vec<NamedForm> {
        let mut v = NamedForm::FIXED.to_vec();
        v.extend((1..=15).map(NamedForm::ThetaI));
        v.extend((1..=15).map(NamedForm::PhiI));
        v
    }

    pub fn dim(self) -> u8 {
        match self {
            NamedForm::Theta1 | NamedForm::Theta64 | NamedForm::Theta64Dual | NamedForm::Rho => 7,
            _ => 15,
        }
    }
}

impl fmt::Display for NamedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedForm::Theta1 => write!(f, "theta1"),
            NamedForm::Theta64 => write!(f, "theta64"),
            NamedForm::Theta64Dual => write!(f, "theta64_dual"),
            NamedForm::Theta64Prime => write!(f, "theta64_prime"),
            NamedForm::Theta => write!(f, "Theta"),
            NamedForm::ThetaI(i) => write!(f, "Theta_{i}"),
            NamedForm::PhiA => write!(f, "Phi_A"),
            NamedForm::PhiO => write!(f, "Phi_O"),
            NamedForm::PhiP => write!(f, "Phi_P"),
            NamedForm::Phi => write!(f, "Phi"),
            NamedForm::PhiI(i) => write!(f, "Phi_{i}"),
            NamedForm::PhiDual => write!(f, "Phi_dual"),
            NamedForm::Psi => write!(f, "psi"),
            NamedForm::Rho => write!(f, "rho"),
        }
    }
}

impl FromStr for NamedForm {
    type Err = CalibrationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(f) = NamedForm::FIXED.iter().find(|f| f.to_string() == s) {
            return Ok(*f);
        }
        let indexed = |rest: &str, mk: fn(u8) -> NamedForm| match rest.parse::<u8>() {
            Ok(i) if (1..=15).contains(&i) => Ok(mk(i)),
            _ => Err(CalibrationError::UnknownForm(s.to_string())),
        };
        if let Some(rest) = s.strip_prefix("Theta_") {
            indexed(rest, NamedForm::ThetaI)
        } else if let Some(rest) = s.strip_prefix("Phi_") {
            indexed(rest, NamedForm::PhiI)
        } else {
            Err(CalibrationError::UnknownForm(s.to_string()))
        }
    }
}

/// `3 Theta`, the 35 quaternion terms with unit coefficients.
pub fn theta3() -> Multivector {
    form("Theta3", 15)
}

/// The 7-form blade of subalgebra `i`.
pub fn phi_blade(i: u8) -> Result<Blade, CalibrationError> {
    if !(1..=15).contains(&i) {
        return Err(CalibrationError::BadIndex(i));
    }
    Ok(subalgebra_rows()[i as usize - 1].phi)
}

/// The seven terms of `3 Theta` supported inside `Phi_i`.
pub fn theta_i(i: u8) -> Result<Multivector, CalibrationError> {
    let support = phi_blade(i)?.mask();
    Ok(theta3().filter(|b| b.mask() & support == b.mask()))
}

/// The 3-form printed alongside `Phi_i` in the subalgebra table.
pub fn printed_theta_i(i: u8) -> Result<Multivector, CalibrationError> {
    phi_blade(i)?;
    Ok(subalgebra_rows()[i as usize - 1].theta.clone())
}

pub fn build(name: NamedForm) -> Result<Multivector, CalibrationError> {
    Ok(match name {
        NamedForm::Theta1 => form("theta1", 7),
        NamedForm::Theta64 => form("theta64", 7),
        NamedForm::Theta64Dual => form("theta64_dual", 7),
        NamedForm::Theta64Prime => form("theta64_prime", 15),
        NamedForm::Theta => theta3().scale(&frac(1, 3)),
        NamedForm::ThetaI(i) => theta_i(i)?,
        NamedForm::PhiA => Multivector::blade(15, phi_blade(1)?, frac(1, 1)),
        NamedForm::PhiO => form("Phi_O", 15),
        NamedForm::PhiP => form("Phi_P", 15),
        NamedForm::Phi => &(&build(NamedForm::PhiA)? + &form("Phi_O", 15)) + &form("Phi_P", 15),
        NamedForm::PhiI(i) => Multivector::blade(15, phi_blade(i)?, frac(1, 1)),
        NamedForm::PhiDual => form("Phi_dual", 15),
        NamedForm::Psi => {
            let seven = Multivector::pseudoscalar(15).scale(&frac(7, 1));
            (&seven - &build(NamedForm::Phi)?).scale(&frac(1, 8))
        }
        NamedForm::Rho => {
            let three = Multivector::pseudoscalar(7).scale(&frac(3, 1));
            (&three + &form("theta64", 7)).scale(&frac(1, 4))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in NamedForm::all() {
            assert_eq!(f.to_string().parse::<NamedForm>().unwrap(), f);
        }
        assert!("Theta_16".parse::<NamedForm>().is_err());
        assert!("omega".parse::<NamedForm>().is_err());
    }

    #[test]
    fn term_counts() {
        for (f, n) in [
            (NamedForm::Theta64, 7),
            (NamedForm::Theta1, 7),
            (NamedForm::Theta, 35),
            (NamedForm::Phi, 15),
            (NamedForm::PhiDual, 15),
            (NamedForm::Psi, 16),
            (NamedForm::Rho, 8),
        ] {
            assert_eq!(build(f).unwrap().len(), n, "{f}");
        }
        for i in 1..=15 {
            assert_eq!(build(NamedForm::ThetaI(i)).unwrap().len(), 7);
        }
    }

    #[test]
    fn theta64_signs() {
        let t = build(NamedForm::Theta64).unwrap();
        for (b, c) in [("123", 1), ("145", 1), ("167", 1), ("246", 1), ("257", -1), ("347", -1), ("356", -1)] {
            assert_eq!(t.coeff(Blade::from_hex(b).unwrap()), frac(c, 1));
        }
    }

    #[test]
    fn psi_coefficients() {
        let psi = build(NamedForm::Psi).unwrap();
        assert_eq!(psi.coeff(Blade(0x7fff)), frac(7, 8));
        assert_eq!(psi.coeff(Blade::from_hex("1234567").unwrap()), frac(-1, 8));
    }
}
