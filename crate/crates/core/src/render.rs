//! Standalone SVG drawings: regular polygon with vertex 0 at the top and
//! labels running counterclockwise.

use std::fmt::Write;

use crate::geometry::{Edge, EdgeSet};

const CANVAS: f64 = 800.0;
const RADIUS: f64 = 330.0;
const LABEL_RADIUS: f64 = 362.0;

#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    /// Drawn heavier than ordinary blocker edges.
    pub special: Option<EdgeSet>,
    /// Drawn dotted.
    pub removed: Option<EdgeSet>,
    /// A triangulation drawn in gray underneath.
    pub witness: Option<EdgeSet>,
    pub title: Option<String>,
}

fn position(v: usize, n: usize, radius: f64) -> (f64, f64) {
    let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * v as f64 / n as f64;
    (
        CANVAS / 2.0 + radius * angle.cos(),
        CANVAS / 2.0 - radius * angle.sin(),
    )
}

fn line(out: &mut String, e: Edge, n: usize, class: &str) {
    let (x1, y1) = position(e.a(), n, RADIUS);
    let (x2, y2) = position(e.b(), n, RADIUS);
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn render_svg(b: &EdgeSet, opts: &RenderOptions) -> String {
    let n = b.n();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    out.push_str(
        "  <style>\n\
         \x20   .boundary { fill: none; stroke: #888; stroke-width: 1.5; }\n\
         \x20   .witness { stroke: #b0b0b0; stroke-width: 3; }\n\
         \x20   .edge { stroke: #1f3a93; stroke-width: 2; }\n\
         \x20   .special { stroke: #111; stroke-width: 5; }\n\
         \x20   .removed { stroke: #c0392b; stroke-width: 2; stroke-dasharray: 2 5; }\n\
         \x20   .vertex { fill: #fff; stroke: #111; stroke-width: 1.5; }\n\
         \x20   text { font: 16px sans-serif; text-anchor: middle; dominant-baseline: central; }\n\
         \x20 </style>\n",
    );
    if let Some(title) = &opts.title {
        let _ = writeln!(out, "  <title>{}</title>", escape(title));
    }
    let points: Vec<String> = (0..n)
        .map(|v| {
            let (x, y) = position(v, n, RADIUS);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"  <polygon class="boundary" points="{}"/>"#,
        points.join(" ")
    );
    if let Some(w) = &opts.witness {
        for e in w.iter() {
            line(&mut out, e, n, "witness");
        }
    }
    for e in b.iter() {
        let special = opts.special.as_ref().is_some_and(|s| s.contains(e));
        line(&mut out, e, n, if special { "special" } else { "edge" });
    }
    if let Some(r) = &opts.removed {
        for e in r.iter() {
            line(&mut out, e, n, "removed");
        }
    }
    for v in 0..n {
        let (x, y) = position(v, n, RADIUS);
        let (lx, ly) = position(v, n, LABEL_RADIUS);
        let _ = writeln!(
            out,
            r#"  <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="5"/>"#
        );
        let _ = writeln!(out, r#"  <text x="{lx:.2}" y="{ly:.2}">{v}</text>"#);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b65() -> EdgeSet {
        EdgeSet::from_pairs(6, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn structure() {
        let svg = render_svg(&b65(), &RenderOptions::default());
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg.matches(r#"class="edge""#).count(), 5);
        assert!(!svg.contains(r#"class="witness""#));
        assert_eq!(svg, render_svg(&b65(), &RenderOptions::default()));
    }

    #[test]
    fn vertex_zero_is_on_top() {
        let (x, y) = position(0, 6, RADIUS);
        assert!((x - 400.0).abs() < 1e-9 && y < 400.0);
        let (x1, _) = position(1, 6, RADIUS);
        assert!(x1 < 400.0, "counterclockwise from the top moves left");
    }

    #[test]
    fn overlays() {
        let w = EdgeSet::from_pairs(6, [(0, 2), (0, 3), (0, 4)]).unwrap();
        let special = EdgeSet::from_pairs(6, [(2, 5)]).unwrap();
        let svg = render_svg(
            &b65(),
            &RenderOptions {
                witness: Some(w),
                special: Some(special.clone()),
                removed: Some(special),
                title: Some("a <b>".into()),
            },
        );
        assert_eq!(svg.matches(r#"class="witness""#).count(), 3);
        assert_eq!(svg.matches(r#"class="special""#).count(), 1);
        assert_eq!(svg.matches(r#"class="removed""#).count(), 1);
        assert!(svg.contains("<title>a &lt;b&gt;</title>"));
    }
}
