//! SVG pictures of laminations in the unit disk.

use std::f64::consts::TAU;
use std::fmt::Write;

use lamina::{is_critical, Angle, Chord, Lamination};
use num_traits::ToPrimitive;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// Draw leaves as arcs orthogonal to the circle.
    pub hyperbolic: bool,
    pub label: bool,
    pub size: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { hyperbolic: false, label: false, size: 512 }
    }
}

pub const MIN_SIZE: u32 = 64;

fn turns(a: &Angle) -> f64 {
    a.as_rational().to_f64().expect("angle in [0, 1)")
}

/// Screen coordinates; `y` points down so angles run counter-clockwise on screen.
fn point(t: f64) -> (f64, f64) {
    ((TAU * t).cos(), -(TAU * t).sin())
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    // avoid "-0.000000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

fn leaf_path(c: &Chord, hyperbolic: bool) -> String {
    let (t1, t2) = (turns(c.lo()), turns(c.hi()));
    let (x1, y1) = point(t1);
    let (x2, y2) = point(t2);
    let mut span = (t2 - t1) * TAU;
    if span > TAU / 2.0 {
        span = TAU - span;
    }
    let straight = format!("M {} {} L {} {}", num(x1), num(y1), num(x2), num(y2));
    if !hyperbolic || (span - TAU / 2.0).abs() < 1e-12 {
        return straight;
    }
    // circle orthogonal to the unit circle through both endpoints
    let r = (span / 2.0).tan();
    let k = 1.0 / (span / 2.0).cos();
    let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
    let norm = (mx * mx + my * my).sqrt();
    let (cx, cy) = (mx / norm * k, my / norm * k);
    let cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
    let sweep = u8::from(cross > 0.0);
    format!("M {} {} A {} {} 0 0 {} {} {}", num(x1), num(y1), num(r), num(r), sweep, num(x2), num(y2))
}

/// Deterministic document: leaves in ascending order, then labels.
pub fn render_svg(l: &Lamination, opts: &RenderOptions) -> String {
    let mut s = String::new();
    let size = opts.size.max(MIN_SIZE);
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="-1.1 -1.1 2.2 2.2">"#
    )
    .unwrap();
    writeln!(s, r#"<circle class="circle" cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.006"/>"#).unwrap();
    let d = l.degree();
    for c in l.leaves() {
        let path = leaf_path(c, opts.hyperbolic);
        if is_critical(d, c) {
            writeln!(
                s,
                r#"<path class="leaf critical" d="{path}" fill="none" stroke="crimson" stroke-width="0.006" stroke-dasharray="0.03 0.02"/>"#
            )
            .unwrap();
        } else {
            writeln!(s, r#"<path class="leaf" d="{path}" fill="none" stroke="navy" stroke-width="0.006"/>"#).unwrap();
        }
    }
    if opts.label {
        for v in l.vertices() {
            let (x, y) = point(turns(&v));
            writeln!(
                s,
                r#"<text class="label" x="{}" y="{}" font-size="0.05" text-anchor="middle" dominant-baseline="middle">{v}</text>"#,
                num(1.05 * x),
                num(1.05 * y)
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    s
}
