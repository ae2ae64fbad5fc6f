//! Diagram of a configuration: the axis, the three semicircles, their radii to
//! the vertices, and the vertices themselves.

use std::fmt::Write;

use crate::geometry::{Semicircle, TripleConfig, UpperHalfPoint};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 0.05;

struct Frame {
    scale: f64,
    x0: f64,
    ox: f64,
    oy: f64,
}

impl Frame {
    fn fit(t: &TripleConfig) -> Self {
        let circles = t.circles();
        let xmin = circles.iter().map(|s| s.center_x - s.radius).fold(f64::INFINITY, f64::min);
        let xmax = circles.iter().map(|s| s.center_x + s.radius).fold(f64::NEG_INFINITY, f64::max);
        let ymax = circles.iter().map(|s| s.radius).fold(0.0, f64::max);
        let (w, h) = (WIDTH * (1.0 - 2.0 * MARGIN), HEIGHT * (1.0 - 2.0 * MARGIN));
        let scale = (w / (xmax - xmin)).min(h / ymax);
        // Center the drawing; the axis sits on the bottom margin.
        let ox = 0.5 * (WIDTH - scale * (xmax - xmin));
        let oy = HEIGHT - 0.5 * (HEIGHT - scale * ymax);
        Frame { scale, x0: xmin, ox, oy }
    }

    fn x(&self, x: f64) -> f64 {
        self.ox + self.scale * (x - self.x0)
    }

    fn y(&self, y: f64) -> f64 {
        self.oy - self.scale * y
    }
}

/// Renders the configuration as a fixed-size SVG document.
pub fn render_svg(t: &TripleConfig) -> String {
    let f = Frame::fit(t);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<line x1="0.000" y1="{:.3}" x2="{WIDTH:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
        f.oy, f.oy
    );
    let arcs: [(&str, Semicircle, &str); 3] =
        [("a", t.circle_a, "#1f77b4"), ("b", t.circle_b, "#2ca02c"), ("c", t.circle_c, "#d62728")];
    for (name, s, color) in arcs {
        let r = f.scale * s.radius;
        let _ = writeln!(
            out,
            r#"<path id="circle-{name}" d="M {:.3} {:.3} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            f.x(s.center_x - s.radius),
            f.oy,
            f.x(s.center_x + s.radius),
            f.oy
        );
    }
    let spokes: [(Semicircle, [UpperHalfPoint; 2], &str); 3] = [
        (t.circle_a, [t.vertex_c, t.vertex_b], "#1f77b4"),
        (t.circle_b, [t.vertex_a, t.vertex_c], "#2ca02c"),
        (t.circle_c, [t.vertex_a, t.vertex_b], "#d62728"),
    ];
    for (s, ends, color) in spokes {
        for v in ends {
            let _ = writeln!(
                out,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="0.75" stroke-dasharray="4 3"/>"#,
                f.x(s.center_x),
                f.oy,
                f.x(v.x),
                f.y(v.y)
            );
        }
    }
    for (name, v) in [("A", t.vertex_a), ("B", t.vertex_b), ("C", t.vertex_c)] {
        let (x, y) = (f.x(v.x), f.y(v.y));
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">{name}</text>"#,
            x + 5.0,
            y - 5.0
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_triple;

    fn example() -> TripleConfig {
        let sc = |x, r| Semicircle::new(x, r).unwrap();
        build_triple(sc(-2.0, 3.0), sc(0.0, 2.0), sc(2.0, 3.0)).unwrap()
    }

    #[test]
    fn fits_viewport_with_margin() {
        let f = Frame::fit(&example());
        // Bounding box is [-5, 5] x [0, 3]; height limits: 360 / 3 = 120 < 720 / 10.
        assert!((f.scale - 72.0).abs() < 1e-12);
        assert!((f.x(-5.0) - 40.0).abs() < 1e-9 && (f.x(5.0) - 760.0).abs() < 1e-9);
        assert!(f.y(3.0) >= 0.0 && f.oy <= HEIGHT);
    }

    #[test]
    fn contains_every_element() {
        let s = render_svg(&example());
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
        assert_eq!(s.matches("<path").count(), 3);
        assert_eq!(s.matches("stroke-dasharray").count(), 6);
        assert_eq!(s.matches("<circle").count(), 3);
    }

    #[test]
    fn deterministic() {
        assert_eq!(render_svg(&example()), render_svg(&example()));
    }
}
