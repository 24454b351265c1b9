use std::fmt::Write;

use super::{is_internal_label, SurfacePresentation};

#[derive(Clone, Debug)]
pub struct SvgOptions {
    pub width: f64,
    pub margin: f64,
    pub show_labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { width: 480.0, margin: 20.0, show_labels: true }
    }
}

type Segment = (usize, (f64, f64), (f64, f64));

/// SVG 1.1 drawing of the polygons with side labels and trajectory segments.
pub fn render_svg(s: &SurfacePresentation, segments: &[Segment], opts: &SvgOptions) -> String {
    let pts: Vec<(f64, f64)> = s.polygons.iter().flat_map(|p| p.vertices.iter().map(|v| v.to_f64())).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let scale = (opts.width - 2.0 * opts.margin) / (x1 - x0).max(1e-9);
    let height = (y1 - y0) * scale + 2.0 * opts.margin;
    // flip y so the picture is upright
    let map = |(x, y): (f64, f64)| ((x - x0) * scale + opts.margin, (y1 - y) * scale + opts.margin);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.1}\" height=\"{:.1}\">",
        opts.width, height
    );
    for (p, poly) in s.polygons.iter().enumerate() {
        let coords: Vec<String> = poly
            .vertices
            .iter()
            .map(|v| {
                let (x, y) = map(v.to_f64());
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"#eef3fb\" stroke=\"#223\" stroke-width=\"1.2\"/>",
            coords.join(" ")
        );
        if !opts.show_labels {
            continue;
        }
        let c = map(poly.centroid().to_f64());
        for k in 0..poly.len() {
            let label = s.labels[p][k];
            if is_internal_label(label) {
                continue;
            }
            let m = map(poly.vertex(k).midpoint(poly.vertex(k + 1)).to_f64());
            // nudge the label toward the polygon's center
            let (x, y) = (m.0 + 0.12 * (c.0 - m.0), m.1 + 0.12 * (c.1 - m.1));
            let text = if label.is_ascii_lowercase() {
                format!("{}′", label.to_ascii_uppercase())
            } else {
                label.to_string()
            };
            let _ = writeln!(
                out,
                "  <text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"13\" text-anchor=\"middle\">{text}</text>"
            );
        }
    }
    for &(_, a, b) in segments {
        let (a, b) = (map(a), map(b));
        let _ = writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#c22\" stroke-width=\"1\"/>",
            a.0, a.1, b.0, b.1
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::hexagon;

    #[test]
    fn emits_one_polygon_and_labels() {
        let svg = render_svg(&hexagon(), &[(0, (0.0, 0.0), (0.5, 0.1))], &SvgOptions::default());
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<text").count(), 6);
        assert_eq!(svg.matches("<line").count(), 1);
    }
}
