use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use sedenion_calibrations::fixtures::{subalgebra_rows, SubalgebraRow};
use sedenion_calibrations::named::{build, NamedForm};
use sedenion_cd::AlgebraTag;
use sedenion_core::rational::zero;
use sedenion_core::{Blade, Multivector};

use crate::FanoError;

/// A signed quaternion triple. Positive sign orients the cycle `a -> b -> c`
/// for `a < b < c`; negative reverses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Line {
    pub members: [u8; 3],
    pub sign: i8,
}

impl Line {
    pub fn cycle(&self) -> [u8; 3] {
        let [a, b, c] = self.members;
        if self.sign > 0 {
            [a, b, c]
        } else {
            [a, c, b]
        }
    }

    /// Directed edges of the cycle.
    pub fn edges(&self) -> [(u8, u8); 3] {
        let [a, b, c] = self.cycle();
        [(a, b), (b, c), (c, a)]
    }

    pub fn label(&self) -> String {
        let s = if self.sign < 0 { '-' } else { '+' };
        format!("{s}{}", Blade::from_indices(&self.members).to_hex())
    }
}

pub fn vertex_name(v: u8) -> String {
    format!("e{v:X}")
}

/// Seven lines on seven vertices, every vertex pair on exactly one line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoPlane {
    pub vertices: [u8; 7],
    pub lines: Vec<Line>,
}

impl FanoPlane {
    pub fn from_form(form: &Multivector) -> Result<FanoPlane, FanoError> {
        if form.len() != 7 {
            return Err(FanoError::TermCount(form.len()));
        }
        let lines: Vec<Line> = form
            .terms()
            .map(|(b, c)| {
                let ix: Vec<u8> = b.indices().collect();
                match ix[..] {
                    [x, y, z] => Ok(Line { members: [x, y, z], sign: if *c < zero() { -1 } else { 1 } }),
                    _ => Err(FanoError::BadTerm(b.to_hex())),
                }
            })
            .collect::<Result<_, _>>()?;
        FanoPlane::from_lines(lines)
    }

    /// Lines are kept sorted by members.
    pub fn from_lines(mut lines: Vec<Line>) -> Result<FanoPlane, FanoError> {
        lines.sort();
        if lines.len() != 7 {
            return Err(FanoError::TermCount(lines.len()));
        }
        let set: BTreeSet<u8> = lines.iter().flat_map(|l| l.members).collect();
        let vertices: Vec<u8> = set.into_iter().collect();
        let vertices: [u8; 7] = vertices.as_slice().try_into().map_err(|_| FanoError::VertexCount(vertices.len()))?;
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                let n = lines.iter().filter(|l| l.members.contains(&a) && l.members.contains(&b)).count();
                if n != 1 {
                    return Err(FanoError::Incidence(a, b, n));
                }
            }
        }
        Ok(FanoPlane { vertices, lines })
    }
}

/// One octonion-like subalgebra in the volume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneRecord {
    pub index: u8,
    pub plane: FanoPlane,
    pub class: AlgebraTag,
    /// Face, Plane, Cone or Folly.
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoVolume {
    pub planes: Vec<PlaneRecord>,
}

impl FanoVolume {
    /// Planes are the 7-blades of `phi`; lines and class tags come from the
    /// subalgebra rows.
    pub fn new(phi: &Multivector, rows: &[SubalgebraRow]) -> Result<FanoVolume, FanoError> {
        let planes = rows
            .iter()
            .map(|r| {
                if phi.coeff(r.phi) == zero() {
                    return Err(FanoError::NotInCalibration(r.index));
                }
                let plane = FanoPlane::from_form(&r.theta)?;
                if plane.vertices.iter().ne(r.phi.indices().collect::<Vec<_>>().iter()) {
                    return Err(FanoError::VertexCount(plane.vertices.len()));
                }
                Ok(PlaneRecord { index: r.index, plane, class: r.class, label: r.label.clone() })
            })
            .collect::<Result<_, _>>()?;
        Ok(FanoVolume { planes })
    }

    pub fn vertices(&self) -> Vec<u8> {
        let set: BTreeSet<u8> = self.planes.iter().flat_map(|p| p.plane.vertices).collect();
        set.into_iter().collect()
    }

    /// Each quaternion triple with the indices of the planes containing it.
    pub fn quaternions(&self) -> BTreeMap<[u8; 3], Vec<u8>> {
        let mut out: BTreeMap<[u8; 3], Vec<u8>> = BTreeMap::new();
        for p in &self.planes {
            for l in &p.plane.lines {
                out.entry(l.members).or_default().push(p.index);
            }
        }
        out
    }
}

/// The sedenion volume from `Phi` and the subalgebra table.
pub fn fano_volume() -> Result<FanoVolume, FanoError> {
    let phi = build(NamedForm::Phi).expect("fixed name");
    FanoVolume::new(&phi, &subalgebra_rows())
}
