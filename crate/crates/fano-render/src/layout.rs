//! Fixed coordinates in SVG user units.

use itertools::Itertools;

use crate::incidence::FanoPlane;
use crate::FanoError;

pub type Point = (f64, f64);

/// Triangle corners for the generators 1, 2 and 4.
const PLANE_CORNERS: [Point; 3] = [(200.0, 50.0), (40.0, 327.0), (360.0, 327.0)];

/// Tetrahedron corners for the generators 1, 2, 4 and 8, before projection.
const VOLUME_CORNERS: [[f64; 3]; 4] = [[0.0, -1.0, 0.0], [-0.866, 0.5, 0.0], [0.866, 0.5, 0.0], [0.0, 0.0, 1.2]];

fn mean<const N: usize>(corners: &[[f64; N]], v: u8) -> [f64; N] {
    let mut acc = [0.0; N];
    let mut n = 0.0;
    for (bit, c) in corners.iter().enumerate() {
        if v >> bit & 1 == 1 {
            for (a, x) in acc.iter_mut().zip(c) {
                *a += x;
            }
            n += 1.0;
        }
    }
    acc.map(|a| a / n)
}

/// Slot `v` in `1..=7`: corner, edge midpoint or centroid by bit count.
pub fn plane_slot(v: u8) -> Point {
    let [x, y] = mean(&PLANE_CORNERS.map(|(x, y)| [x, y]), v);
    (x, y)
}

/// Vertex to slot, the first assignment in lexicographic order that puts
/// every line on a triple `{a, b, a^b}`.
pub fn plane_slots(p: &FanoPlane) -> Result<Vec<(u8, u8)>, FanoError> {
    (1..=7u8)
        .permutations(7)
        .find(|perm| {
            let slot = |v: u8| perm[p.vertices.iter().position(|&w| w == v).expect("member")];
            p.lines.iter().all(|l| {
                let [a, b, c] = l.members.map(slot);
                a ^ b == c
            })
        })
        .map(|perm| p.vertices.iter().copied().zip(perm).collect())
        .ok_or(FanoError::NoLayout)
}

/// Oblique projection of the tetrahedron point for `v` in `1..=15`.
pub fn volume_point(v: u8) -> Point {
    let [x, y, z] = mean(&VOLUME_CORNERS, v);
    let (px, py) = (x + 0.25 * z, y - 0.45 * z);
    (260.0 + 200.0 * px, 300.0 + 200.0 * py)
}

pub fn distance(a: Point, b: Point) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// The point lying between the other two, if the three are collinear.
pub fn middle_of(p: [Point; 3]) -> Option<usize> {
    (0..3).find(|&m| {
        let (a, b) = (p[(m + 1) % 3], p[(m + 2) % 3]);
        (distance(a, p[m]) + distance(p[m], b) - distance(a, b)).abs() < 1e-6
    })
}

/// Centre of the circle through three points.
pub fn circumcentre(p: [Point; 3]) -> Point {
    let [(ax, ay), (bx, by), (cx, cy)] = p;
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    ((a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d, (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d)
}
