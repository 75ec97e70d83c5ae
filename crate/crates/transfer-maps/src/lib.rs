//! Maps from `Cl(3)`, `Cl(7)` and `Cl(15)` to the Cayley-Dickson algebras of
//! level 2, 3 and 4.
//!
//! A generator is sent to a signed pure basis element; a blade is sent to the
//! left-to-right product of its generator images in ascending index order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use sedenion_cd::{cd_mul, CdBasis, CdElement};
use sedenion_core::{Blade, Multivector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("no generator map for Cl({0})")]
    UnsupportedDimension(u8),
    #[error("{blade} lies outside Cl({dim})")]
    OutOfRange { blade: String, dim: u8 },
    #[error("loop members are not a closed 7-element subalgebra")]
    NotALoop,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenMap {
    pub dim: u8,
    pub level: u8,
    /// `images[k - 1]` is the image of `e_k`.
    pub images: Vec<(i8, CdBasis)>,
}

impl GenMap {
    /// `(e1, e2, e3) -> (o1, o2, o12)`.
    pub fn map3() -> GenMap {
        GenMap::identity_on_masks(3, 2)
    }

    /// `e_k -> o_mask(k)` with the image of `e7` negated.
    pub fn map7() -> GenMap {
        let mut m = GenMap::identity_on_masks(7, 3);
        m.images[6].0 = -1;
        m
    }

    /// `e_k -> o_mask(k)`, all signs positive.
    pub fn map15() -> GenMap {
        GenMap::identity_on_masks(15, 4)
    }

    pub fn for_dim(dim: u8) -> Result<GenMap, MapError> {
        match dim {
            3 => Ok(GenMap::map3()),
            7 => Ok(GenMap::map7()),
            15 => Ok(GenMap::map15()),
            d => Err(MapError::UnsupportedDimension(d)),
        }
    }

    fn identity_on_masks(dim: u8, level: u8) -> GenMap {
        GenMap { dim, level, images: (1..=dim as u32).map(|k| (1, CdBasis(k))).collect() }
    }

    fn check(&self, b: Blade) -> Result<(), MapError> {
        if b.mask() >> self.dim != 0 {
            return Err(MapError::OutOfRange { blade: b.to_string(), dim: self.dim });
        }
        Ok(())
    }

    /// Signed basis image of a blade.
    pub fn map_blade(&self, b: Blade) -> Result<(i8, CdBasis), MapError> {
        self.check(b)?;
        let mut acc = (1i8, CdBasis::ONE);
        for k in b.indices() {
            let (s, g) = self.images[k as usize - 1];
            let (t, p) = cd_mul(acc.1, g);
            acc = (acc.0 * s * t, p);
        }
        Ok(acc)
    }

    /// Termwise linear extension.
    pub fn map_multivector(&self, x: &Multivector) -> Result<CdElement, MapError> {
        let mut terms: Vec<(CdBasis, Rational)> = Vec::with_capacity(x.len());
        for (b, c) in x.terms() {
            let (s, img) = self.map_blade(b)?;
            terms.push((img, if s < 0 { -c.clone() } else { c.clone() }));
        }
        Ok(CdElement::from_terms(self.level, terms))
    }

    /// Inverse image of a basis element as a generator index, if it is one.
    pub fn preimage(&self, target: CdBasis) -> Option<(i8, u8)> {
        self.images.iter().position(|&(_, g)| g == target).map(|i| (self.images[i].0, i as u8 + 1))
    }

    /// The necessary automorphism condition on a signed candidate
    /// `s1 e_ij + s2 e_kl + ...`: the sum maps to zero and the ordered product
    /// of the signed blades maps to +1.
    pub fn automorphism_filter(&self, candidate: &[(i8, Blade)]) -> Result<bool, MapError> {
        let sum = Multivector::from_terms(
            self.dim,
            candidate.iter().map(|&(s, b)| (b, Rational::from_integer(s.into()))),
        )
        .map_err(|_| MapError::OutOfRange { blade: format!("{candidate:?}"), dim: self.dim })?;
        if !self.map_multivector(&sum)?.is_zero() {
            return Ok(false);
        }
        let mut sign = 1i8;
        let mut prod = Blade::SCALAR;
        for &(s, b) in candidate {
            let (t, p) = prod.mul(b);
            sign *= s * t;
            prod = p;
        }
        let (t, img) = self.map_blade(prod)?;
        Ok(img == CdBasis::ONE && sign * t == 1)
    }
}

/// The grade-7 blade of `Cl(15)` whose generators map onto a closed loop.
pub fn loop_to_form(members: &[u32]) -> Result<Blade, MapError> {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let closed = sorted.len() == 7
        && sorted.iter().all(|&m| (1..16).contains(&m))
        && sorted.iter().all(|&a| sorted.iter().all(|&b| a == b || sorted.binary_search(&(a ^ b)).is_ok()));
    if !closed {
        return Err(MapError::NotALoop);
    }
    let map = GenMap::map15();
    let indices: Vec<u8> = sorted
        .iter()
        .map(|&m| map.preimage(CdBasis(m)).expect("every pure sedenion unit has a preimage").1)
        .collect();
    Ok(Blade::from_indices(&indices))
}
