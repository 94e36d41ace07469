use std::fmt::Write;

use super::drawing::Drawing;

/// Render as a standalone SVG document. Edges tagged `dashed` are drawn dashed.
///
/// This is the only place coordinates are converted to floats.
pub fn render_svg(d: &Drawing, scale: f64) -> String {
    let scale = if scale.is_finite() && scale > 0.0 { scale } else { 50.0 };
    let pts: Vec<(f64, f64)> = d.vertices().iter().map(|p| p.to_f64()).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 0.5;
    let w = (x1 - x0 + 2.0 * pad) * scale;
    let h = (y1 - y0 + 2.0 * pad) * scale;
    // SVG y grows downward.
    let tx = |x: f64| (x - x0 + pad) * scale;
    let ty = |y: f64| (y1 - y + pad) * scale;
    let dashed: std::collections::HashSet<(usize, usize)> = d.dashed_pairs().into_iter().collect();
    let stroke = (scale * 0.03).max(0.5);
    let radius = (scale * 0.06).max(1.0);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="{stroke:.2}" stroke-linecap="round">"#);
    for &(i, j) in d.edges() {
        let (a, b) = (pts[i], pts[j]);
        let style = if dashed.contains(&(i, j)) {
            format!(r#" stroke-dasharray="{:.2},{:.2}" stroke="gray""#, stroke * 4.0, stroke * 3.0)
        } else {
            String::new()
        };
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"{style}/>"#,
            tx(a.0),
            ty(a.1),
            tx(b.0),
            ty(b.1)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g fill="black">"#);
    for &(x, y) in &pts {
        let _ = writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="{radius:.2}"/>"#, tx(x), ty(y));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}
