//! Static SVG 1.1 rendering of 2-D instances, with optional cover and
//! inscribed-homothet overlays.
//!
//! The drawing uses instance coordinates directly inside a flipped group
//! (SVG's y axis points down), so the figure reads with y up. Every shape
//! carries a class — `body`, `member`, `cover`, `inscribed` — and styling
//! lives in one embedded stylesheet.

use std::fmt::Write as _;

use nonsep_core::geometry::{ConvexBody, Family, Homothet, Vector};

/// Renders the family (and overlays) to a standalone SVG document.
pub fn render_svg(
    family: &Family,
    cover: Option<&Homothet>,
    inscribed: Option<&Homothet>,
) -> String {
    let body = family.body();
    let identity = Homothet::new(Vector::zeros(2), 1.0).expect("unit homothet");

    let mut shapes: Vec<(&'static str, &Homothet)> = vec![("body", &identity)];
    for member in family.members() {
        shapes.push(("member", member));
    }
    if let Some(c) = cover {
        shapes.push(("cover", c));
    }
    if let Some(i) = inscribed {
        shapes.push(("inscribed", i));
    }

    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (_, h) in &shapes {
        let (lo, hi) = bounds(body, h);
        min_x = min_x.min(lo[0]);
        min_y = min_y.min(lo[1]);
        max_x = max_x.max(hi[0]);
        max_y = max_y.max(hi[1]);
    }
    let pad = 0.05 * ((max_x - min_x).max(max_y - min_y)).max(1e-9);
    min_x -= pad;
    min_y -= pad;
    max_x += pad;
    max_y += pad;
    let width = max_x - min_x;
    let height = max_y - min_y;
    let stroke = width.max(height) / 300.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"{} {} {} {}\" width=\"640\" height=\"{}\">",
        fmt(min_x),
        fmt(-max_y),
        fmt(width),
        fmt(height),
        fmt(640.0 * height / width),
    );
    let _ = writeln!(
        out,
        "  <style>\n    .body {{ fill: none; stroke: #333333; stroke-width: {sw}; \
         stroke-dasharray: {dash}; }}\n    .member {{ fill: #4878b855; stroke: #1f3f66; \
         stroke-width: {sw}; }}\n    .cover {{ fill: none; stroke: #c03030; \
         stroke-width: {sw2}; }}\n    .inscribed {{ fill: none; stroke: #2e8540; \
         stroke-width: {sw2}; }}\n  </style>",
        sw = fmt(stroke),
        sw2 = fmt(1.5 * stroke),
        dash = fmt(4.0 * stroke),
    );
    // Flip the y axis so the figure reads with y up.
    out.push_str("  <g transform=\"scale(1 -1)\">\n");
    for (class, h) in &shapes {
        out.push_str("    ");
        out.push_str(&shape_svg(body, h, class));
        out.push('\n');
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// Axis-aligned bounds of `translation + scale * body`.
fn bounds(body: &ConvexBody, h: &Homothet) -> (Vector, Vector) {
    match body {
        ConvexBody::Ball { center, radius } => {
            let c = h.translation().add(&center.scale(h.scale()));
            let r = h.scale() * radius;
            (
                Vector::new(vec![c[0] - r, c[1] - r]),
                Vector::new(vec![c[0] + r, c[1] + r]),
            )
        }
        ConvexBody::Polytope { vertices } => {
            let mut lo = vec![f64::INFINITY; 2];
            let mut hi = vec![f64::NEG_INFINITY; 2];
            for v in vertices {
                let p = h.translation().add(&v.scale(h.scale()));
                for r in 0..2 {
                    lo[r] = lo[r].min(p[r]);
                    hi[r] = hi[r].max(p[r]);
                }
            }
            (Vector::new(lo), Vector::new(hi))
        }
    }
}

fn shape_svg(body: &ConvexBody, h: &Homothet, class: &str) -> String {
    match body {
        ConvexBody::Ball { center, radius } => {
            let c = h.translation().add(&center.scale(h.scale()));
            format!(
                "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                fmt(c[0]),
                fmt(c[1]),
                fmt(h.scale() * radius),
            )
        }
        ConvexBody::Polytope { vertices } => {
            let mut points = String::new();
            for (i, v) in vertices.iter().enumerate() {
                let p = h.translation().add(&v.scale(h.scale()));
                if i > 0 {
                    points.push(' ');
                }
                let _ = write!(points, "{},{}", fmt(p[0]), fmt(p[1]));
            }
            format!("<polygon class=\"{class}\" points=\"{points}\"/>")
        }
    }
}

fn fmt(x: f64) -> String {
    format!("{x}")
}
