//! SVG 1.1, DOT and JSON emitters. Coordinates are printed to one decimal.

use std::fmt::Write;

use serde::Serialize;

use crate::incidence::{vertex_name, FanoPlane, FanoVolume, Line};
use crate::layout::{circumcentre, distance, middle_of, plane_slot, plane_slots, volume_point, Point};
use crate::FanoError;

const ARROW_DEFS: &str = "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>\n";

fn header(out: &mut String, w: u32, h: u32, title: &str) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<title>{title}</title>");
}

fn mid(a: Point, b: Point) -> Point {
    ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
}

fn vertex(out: &mut String, v: u8, p: Point) {
    let _ = writeln!(
        out,
        "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"13\" fill=\"white\" stroke=\"black\"/><text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
        p.0,
        p.1,
        p.0,
        p.1 + 4.0,
        vertex_name(v)
    );
}

fn arrow_segment(out: &mut String, from: Point, to: Point) {
    let _ = writeln!(
        out,
        "<path d=\"M{:.1},{:.1} L{:.1},{:.1}\" stroke=\"black\" marker-end=\"url(#arrow)\"/>",
        from.0,
        from.1,
        to.0,
        to.1
    );
}

fn draw_line(out: &mut String, line: &Line, pos: impl Fn(u8) -> Point) {
    let pts = line.members.map(&pos);
    let edges = line.edges();
    let _ = writeln!(out, "<g class=\"line\" id=\"line{}\">", &line.label()[1..]);
    if let Some(m) = middle_of(pts) {
        let (a, b) = ((m + 1) % 3, (m + 2) % 3);
        let x = line.members[a];
        let _ = writeln!(
            out,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>",
            pts[a].0,
            pts[a].1,
            pts[b].0,
            pts[b].1
        );
        let (start, end) = if edges.contains(&(x, line.members[m])) { (a, b) } else { (b, a) };
        arrow_segment(out, pts[start], mid(pts[start], pts[m]));
        arrow_segment(out, pts[m], mid(pts[m], pts[end]));
    } else {
        let c = circumcentre(pts);
        let r = distance(c, pts[0]);
        let _ = writeln!(out, "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{r:.1}\" fill=\"none\" stroke=\"black\"/>", c.0, c.1);
        for (u, v) in edges {
            let (p, q) = (pos(u), pos(v));
            let (dx, dy) = ((p.0 - c.0) + (q.0 - c.0), (p.1 - c.1) + (q.1 - c.1));
            let n = dx.hypot(dy);
            let m = (c.0 + r * dx / n, c.1 + r * dy / n);
            let sweep = u8::from((p.0 - c.0) * (q.1 - c.1) - (p.1 - c.1) * (q.0 - c.0) > 0.0);
            let _ = writeln!(
                out,
                "<path d=\"M{:.1},{:.1} A{r:.1},{r:.1} 0 0 {sweep} {:.1},{:.1}\" fill=\"none\" stroke=\"black\" marker-end=\"url(#arrow)\"/>",
                p.0,
                p.1,
                m.0,
                m.1
            );
        }
    }
    out.push_str("</g>\n");
}

/// The plane on the standard triangle and incircle. Arrows follow each
/// line's cycle: `a -> b -> c` for a positive term `e_abc`, reversed for a
/// negative one.
pub fn plane_svg(p: &FanoPlane) -> Result<String, FanoError> {
    let slots = plane_slots(p)?;
    let pos = |v: u8| plane_slot(slots.iter().find(|s| s.0 == v).expect("member").1);
    let mut out = String::new();
    header(&mut out, 400, 400, "Fano plane");
    out.push_str(ARROW_DEFS);
    for l in &p.lines {
        draw_line(&mut out, l, pos);
    }
    for &v in &p.vertices {
        vertex(&mut out, v, pos(v));
    }
    let labels: Vec<String> = p.lines.iter().map(Line::label).collect();
    let _ = writeln!(out, "<text x=\"200\" y=\"385\" font-size=\"12\" text-anchor=\"middle\">{}</text>", labels.join(" "));
    out.push_str("</svg>\n");
    Ok(out)
}

/// Directed triples, one edge chain per line.
pub fn plane_dot(p: &FanoPlane) -> String {
    let mut out = String::from("digraph fano_plane {\n  node [shape=circle];\n");
    for &v in &p.vertices {
        let _ = writeln!(out, "  {};", vertex_name(v));
    }
    for l in &p.lines {
        let [a, b, c] = l.cycle().map(vertex_name);
        let _ = writeln!(out, "  {a} -> {b} -> {c} -> {a} [label=\"{}\"];", l.label());
    }
    out.push_str("}\n");
    out
}

/// Tetrahedron projection of all fifteen planes, with a legend of plane
/// markers and their class tags.
pub fn volume_svg(vol: &FanoVolume) -> String {
    let mut out = String::new();
    header(&mut out, 820, 560, "Fano volume");
    out.push_str("<g class=\"bottom-face\">\n");
    let [a, b, c] = [1, 2, 4].map(volume_point);
    let _ = writeln!(
        out,
        "<polygon points=\"{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}\" fill=\"#eeeeee\" stroke=\"black\" stroke-width=\"2\"/>",
        a.0, a.1, b.0, b.1, c.0, c.1
    );
    let _ = writeln!(out, "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" text-anchor=\"middle\">Φ_A bottom face</text>", (b.0 + c.0) / 2.0, b.1 + 30.0);
    out.push_str("</g>\n<g class=\"quaternions\">\n");
    for (t, planes) in vol.quaternions() {
        let [p, q, r] = t.map(volume_point);
        let _ = writeln!(
            out,
            "<polygon class=\"q{}\" points=\"{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}\" fill=\"none\" stroke=\"#777777\" stroke-width=\"0.6\" data-planes=\"{}\"/>",
            t.map(|v| format!("{v:X}")).concat(),
            p.0,
            p.1,
            q.0,
            q.1,
            r.0,
            r.1,
            planes.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
        );
    }
    out.push_str("</g>\n<g class=\"planes\">\n");
    for (k, rec) in vol.planes.iter().enumerate() {
        let pts: Vec<Point> = rec.plane.vertices.iter().map(|&v| volume_point(v)).collect();
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / 7.0;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / 7.0;
        let _ = writeln!(
            out,
            "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"blue\"/><text x=\"{:.1}\" y=\"{:.1}\" font-size=\"8\" fill=\"blue\">{}</text>",
            cx - 4.0,
            cy - 4.0,
            cx + 6.0,
            cy + 3.0,
            rec.index
        );
        let members: String = rec.plane.vertices.iter().map(|v| format!("{v:X}")).collect();
        let _ = writeln!(
            out,
            "<text x=\"560\" y=\"{}\" font-size=\"12\">Φ{} {} {} e{}</text>",
            60 + 20 * k,
            rec.index,
            rec.class,
            rec.label,
            members
        );
    }
    out.push_str("</g>\n<g class=\"vertices\">\n");
    for v in vol.vertices() {
        vertex(&mut out, v, volume_point(v));
    }
    out.push_str("</g>\n");
    out.push_str("<text x=\"20\" y=\"545\" font-size=\"11\">Vertices 9 to F are projected onto the base; the plane they appear to form is a false plane.</text>\n");
    out.push_str("</svg>\n");
    out
}

/// Incidence graph: one box per plane joined to its seven vertices.
pub fn volume_dot(vol: &FanoVolume) -> String {
    let mut out = String::from("graph fano_volume {\n  node [shape=circle];\n");
    for v in vol.vertices() {
        let _ = writeln!(out, "  {};", vertex_name(v));
    }
    for rec in &vol.planes {
        let _ = writeln!(out, "  P{} [shape=box, label=\"Φ{} {} {}\"];", rec.index, rec.index, rec.class, rec.label);
        for &v in &rec.plane.vertices {
            let _ = writeln!(out, "  P{} -- {};", rec.index, vertex_name(v));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct PlaneJson {
    index: u8,
    members: Vec<String>,
    class: String,
    label: String,
    orientation: Vec<String>,
}

#[derive(Serialize)]
struct QuaternionJson {
    members: Vec<String>,
    planes: Vec<u8>,
}

#[derive(Serialize)]
struct VolumeJson {
    vertices: Vec<String>,
    planes: Vec<PlaneJson>,
    quaternions: Vec<QuaternionJson>,
}

/// `{vertices, planes: [{members, class, orientation}], quaternions}`.
pub fn volume_json(vol: &FanoVolume) -> String {
    let doc = VolumeJson {
        vertices: vol.vertices().into_iter().map(vertex_name).collect(),
        planes: vol
            .planes
            .iter()
            .map(|r| PlaneJson {
                index: r.index,
                members: r.plane.vertices.iter().map(|&v| vertex_name(v)).collect(),
                class: r.class.to_string(),
                label: r.label.clone(),
                orientation: r.plane.lines.iter().map(Line::label).collect(),
            })
            .collect(),
        quaternions: vol
            .quaternions()
            .into_iter()
            .map(|(t, planes)| QuaternionJson { members: t.iter().map(|&v| vertex_name(v)).collect(), planes })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::volume_point;

    #[test]
    fn volume_points_are_distinct() {
        for a in 1..=15u8 {
            for b in a + 1..=15 {
                assert!(distance(volume_point(a), volume_point(b)) > 20.0, "{a} {b}");
            }
        }
    }
}
