//! Sharp algebras and pair swaps of the 7-form terms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use sedenion_core::Blade;

use crate::named::{build, phi_blade, NamedForm};
use crate::CalibrationError;

/// Which part of `Phi` a subalgebra index belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    O,
    P,
}

impl Family {
    pub fn of(i: u8) -> Family {
        match i {
            1 => Family::A,
            2..=8 => Family::O,
            _ => Family::P,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpAlgebra {
    pub n: u8,
    /// Unity and the dual calibration terms.
    pub basis: Vec<Blade>,
    /// `basis` plus the calibration terms and the pseudoscalar.
    pub extended: Vec<Blade>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub closed: bool,
    pub commutative: bool,
    pub squares_plus_one: bool,
    /// Unordered triples `{a, b, ab}` of non-scalar basis elements.
    pub triples: usize,
    pub extended_closed: bool,
}

impl ClosureReport {
    pub fn pass(&self) -> bool {
        self.closed && self.commutative && self.squares_plus_one && self.extended_closed
    }
}

fn closed(set: &[Blade]) -> bool {
    let members: BTreeSet<Blade> = set.iter().copied().collect();
    set.iter().all(|&a| set.iter().all(|&b| members.contains(&a.mul(b).1)))
}

pub fn sharp_algebra(n: u8) -> Result<(SharpAlgebra, ClosureReport), CalibrationError> {
    let (dual, cal, pseudo) = match n {
        7 => (NamedForm::Theta64Dual, NamedForm::Theta64, Blade(0x7f)),
        15 => (NamedForm::PhiDual, NamedForm::Phi, Blade(0x7fff)),
        _ => return Err(CalibrationError::UnsupportedDimension(n)),
    };
    let terms: Vec<Blade> = build(dual)?.blades().collect();
    let mut basis = vec![Blade::SCALAR];
    basis.extend(&terms);
    let mut extended = basis.clone();
    extended.extend(build(cal)?.blades());
    extended.push(pseudo);

    let commutative = basis.iter().all(|&a| basis.iter().all(|&b| a.mul(b) == b.mul(a)));
    let squares_plus_one = terms.iter().all(|&a| a.mul(a) == (1, Blade::SCALAR));
    let members: BTreeSet<Blade> = terms.iter().copied().collect();
    let mut triples = BTreeSet::new();
    for (i, &a) in terms.iter().enumerate() {
        for &b in &terms[i + 1..] {
            let c = a.mul(b).1;
            if members.contains(&c) {
                let mut t = [a, b, c];
                t.sort();
                triples.insert(t);
            }
        }
    }
    let report = ClosureReport {
        closed: closed(&basis),
        commutative,
        squares_plus_one,
        triples: triples.len(),
        extended_closed: closed(&extended),
    };
    Ok((SharpAlgebra { n, basis, extended }, report))
}

/// Where a term of `Phi` lands under some action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Landing {
    /// `±Phi_k`, `k` in `1..=15`.
    Term(u8),
    Pseudoscalar,
    Elsewhere,
}

/// Counts of unordered swaps of `Phi` terms, by family.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SwapProfile {
    /// Family swapped with `Phi_A`, if any.
    pub a_partner: Option<Family>,
    pub within_o: usize,
    pub within_p: usize,
    pub cross: usize,
    /// Terms sent to the pseudoscalar.
    pub to_pseudoscalar: usize,
    /// Terms sent outside `Phi`.
    pub elsewhere: usize,
}

impl SwapProfile {
    /// Swap counts as `(Phi_A, within O, within P, O with P)`.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (usize::from(self.a_partner.is_some()), self.within_o, self.within_p, self.cross)
    }

    /// `landing[j - 1]` is where `Phi_j` goes.
    pub fn from_landings(landing: &[Landing]) -> SwapProfile {
        let mut p = SwapProfile::default();
        let mut seen = BTreeSet::new();
        for (j, l) in landing.iter().enumerate() {
            let j = j as u8 + 1;
            let k = match *l {
                Landing::Term(k) => k,
                Landing::Pseudoscalar => {
                    p.to_pseudoscalar += 1;
                    continue;
                }
                Landing::Elsewhere => {
                    p.elsewhere += 1;
                    continue;
                }
            };
            if k == j || !seen.insert((j.min(k), j.max(k))) {
                continue;
            }
            match (Family::of(j), Family::of(k)) {
                (Family::A, f) | (f, Family::A) => p.a_partner = Some(f),
                (Family::O, Family::O) => p.within_o += 1,
                (Family::P, Family::P) => p.within_p += 1,
                _ => p.cross += 1,
            }
        }
        p
    }
}

/// The blade of `Phi_i*`, the complement of `Phi_i`.
pub fn dual_blade(i: u8) -> Result<Blade, CalibrationError> {
    Ok(Blade(!phi_blade(i)?.mask() & 0x7fff))
}

/// Landing of a blade among the terms of `Phi`.
pub fn landing(b: Blade) -> Landing {
    if b == Blade(0x7fff) {
        return Landing::Pseudoscalar;
    }
    (1..=15u8)
        .find(|&k| phi_blade(k).expect("in range") == b)
        .map_or(Landing::Elsewhere, Landing::Term)
}

/// Left multiplication of every `Phi` term by `Phi_i*`.
pub fn pair_swap_profile(i: u8) -> Result<SwapProfile, CalibrationError> {
    let d = dual_blade(i)?;
    let landings: Vec<Landing> = (1..=15u8)
        .map(|j| landing(d.mul(phi_blade(j).expect("in range")).1))
        .collect();
    Ok(SwapProfile::from_landings(&landings))
}
