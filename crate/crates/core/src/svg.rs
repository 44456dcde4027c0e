//! SVG rendering of an instance and a matching.

use std::fmt::Write;

use crate::geometry::{Color, GeometryClass, Instance, Matching};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// Renders points with arrival labels and matching edges. Circle instances
/// also draw the unit circle; other geometries are fitted to the viewport.
pub fn render_svg(inst: &Instance, m: &Matching) -> String {
    let pos: Vec<(f64, f64)> = inst.points().iter().map(|p| p.to_f64()).collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
    if inst.geometry() != GeometryClass::Circle {
        lo_x = pos.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        hi_x = pos.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        lo_y = pos.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        hi_y = pos.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-12);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let cx = (lo_x + hi_x) / 2.0;
    let cy = (lo_y + hi_y) / 2.0;
    let map = |(x, y): (f64, f64)| (SIZE / 2.0 + (x - cx) * scale, SIZE / 2.0 - (y - cy) * scale);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="640" height="640" viewBox="0 0 640 640">"#
    );
    let _ = writeln!(s, r#"<rect width="640" height="640" fill="white"/>"#);
    if inst.geometry() == GeometryClass::Circle {
        let (x, y) = map((0.0, 0.0));
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="none" stroke="silver"/>"#,
            scale
        );
    }
    for (a, b) in m.edges() {
        let (x1, y1) = map(pos[a]);
        let (x2, y2) = map(pos[b]);
        let _ = writeln!(
            s,
            r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="2"/>"#
        );
    }
    for (i, p) in inst.points().iter().enumerate() {
        let (x, y) = map(pos[i]);
        let fill = match p.color {
            Some(Color::Blue) => "#1f5fd6",
            Some(Color::Red) => "#d62f1f",
            None => "#333333",
        };
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="5.000" fill="{fill}"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-size="13" font-family="sans-serif">{}</text>"#,
            x + 7.0,
            y - 7.0,
            p.arrival
        );
    }
    s.push_str("</svg>\n");
    s
}
