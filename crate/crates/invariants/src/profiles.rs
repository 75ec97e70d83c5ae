//! Action of the primaries on the terms of `Phi`.

use serde::{Deserialize, Serialize};

use sedenion_calibrations::named::phi_blade;
use sedenion_calibrations::sharp::{landing, Family, Landing, SwapProfile};
use sedenion_core::rational::one;
use sedenion_core::Multivector;
use sedenion_maps::GenMap;

use crate::candidate::{primaries, Pairing, Primary};

/// Row kind of the action table. Octonion mixed invariants split by whether
/// every pair maps to the fourth generator `o4`, basis mask 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RowKind {
    Cyclic,
    Mixed,
    MixedO4,
    MixedOther,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionRow {
    pub part: Family,
    pub kind: RowKind,
    /// `(Phi_A, within O, within P, O with P)`.
    pub expected: (usize, usize, usize, usize),
    pub members: usize,
    /// Primaries whose profile differs from `expected`.
    pub mismatched: Vec<String>,
}

impl ActionRow {
    pub fn pass(&self) -> bool {
        self.members > 0 && self.mismatched.is_empty()
    }
}

pub const ACTION_ROWS: [(Family, RowKind, (usize, usize, usize, usize)); 7] = [
    (Family::A, RowKind::Cyclic, (0, 0, 0, 4)),
    (Family::A, RowKind::Mixed, (0, 0, 0, 4)),
    (Family::O, RowKind::Cyclic, (0, 2, 2, 0)),
    (Family::O, RowKind::MixedO4, (1, 0, 3, 0)),
    (Family::O, RowKind::MixedOther, (1, 2, 1, 0)),
    (Family::P, RowKind::Cyclic, (0, 0, 0, 4)),
    (Family::P, RowKind::Mixed, (1, 0, 0, 3)),
];

/// Every pair maps to `±o4` (mask 8) under the `Cl(15)` generator map.
pub fn all_pairs_to_o4(p: &Primary) -> bool {
    let map = GenMap::map15();
    p.pairs.iter().all(|&b| map.map_blade(b).map(|(_, o)| o.0 == 8).unwrap_or(false))
}

pub fn row_kind(p: &Primary) -> RowKind {
    match (p.pairing, Family::of(p.subalgebra)) {
        (Pairing::Cyclic, _) => RowKind::Cyclic,
        (Pairing::Mixed, Family::O) if all_pairs_to_o4(p) => RowKind::MixedO4,
        (Pairing::Mixed, Family::O) => RowKind::MixedOther,
        (Pairing::Mixed, _) => RowKind::Mixed,
    }
}

/// Where each `Phi_j` goes under conjugation by the all-positive rotor.
pub fn landings(p: &Primary) -> Vec<Landing> {
    let rotor = p.with_signs([1; 4]).rotor();
    (1..=15u8)
        .map(|j| {
            let x = Multivector::blade(15, phi_blade(j).expect("in range"), one());
            let y = rotor.conjugate(&x);
            match y.len() {
                1 => landing(y.blades().next().expect("one term")),
                _ => Landing::Elsewhere,
            }
        })
        .collect()
}

pub fn action_profile(p: &Primary) -> SwapProfile {
    SwapProfile::from_landings(&landings(p))
}

/// The action table, one row per `(part, kind)`.
pub fn action_table() -> Vec<ActionRow> {
    let all = primaries();
    ACTION_ROWS
        .iter()
        .map(|&(part, kind, expected)| {
            let members: Vec<&Primary> =
                all.iter().filter(|p| Family::of(p.subalgebra) == part && row_kind(p) == kind).collect();
            let mismatched = members
                .iter()
                .filter(|p| action_profile(p).counts() != expected)
                .map(|p| p.with_signs([1; 4]).to_string())
                .collect();
            ActionRow { part, kind, expected, members: members.len(), mismatched }
        })
        .collect()
}
