//! Static SVG drawing of an arc model.
//!
//! One reference circle with the `k` tick marks, then one concentric band
//! per vertex carrying its labeled arc. Pure text output, deterministic for
//! a given model.

use crate::arcs::ArcRep;
use crate::graph::Graph;
use std::fmt::Write;

const SIZE: f64 = 640.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER: f64 = 300.0;
const INNER: f64 = 70.0;

fn point(radius: f64, angle: f64) -> (f64, f64) {
    (
        CENTER + radius * angle.cos(),
        CENTER + radius * angle.sin(),
    )
}

fn tick_angle(i: usize, k: usize) -> f64 {
    -std::f64::consts::FRAC_PI_2 + (i as f64) * std::f64::consts::TAU / (k as f64)
}

/// Renders the model. Vertices are drawn inner-to-outer in index order,
/// full-circle vertices as closed rings.
pub fn arc_svg(g: &Graph, rep: &ArcRep) -> String {
    let k = rep.k;
    let mut verts: Vec<usize> = rep.vertices().collect();
    verts.sort_unstable();
    let rings = verts.len().max(1);
    let step = ((OUTER - 20.0 - INNER) / rings as f64).min(26.0);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" font-family=\"monospace\" font-size=\"12\">"
    );
    let _ = writeln!(
        svg,
        "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{OUTER}\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\"/>"
    );
    for i in 0..k {
        let a = tick_angle(i, k);
        let (x1, y1) = point(OUTER - 6.0, a);
        let (x2, y2) = point(OUTER + 6.0, a);
        let (tx, ty) = point(OUTER + 18.0, a);
        let _ = writeln!(
            svg,
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#888\" stroke-width=\"1\"/>"
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#666\">{i}</text>"
        );
    }
    let palette = [
        "#1b6ca8", "#b54708", "#2e7d32", "#7b1fa2", "#c2185b", "#00695c", "#5d4037", "#455a64",
    ];
    for (ring, &v) in verts.iter().enumerate() {
        let radius = INNER + step * ring as f64;
        let color = palette[ring % palette.len()];
        let label = g.label(v);
        if rep.full.contains(&v) {
            let _ = writeln!(
                svg,
                "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{radius:.2}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"3\"/>"
            );
            let (tx, ty) = point(radius + 9.0, tick_angle(0, k.max(1)));
            let _ = writeln!(
                svg,
                "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" fill=\"{color}\">{label}</text>"
            );
            continue;
        }
        let (l, r) = rep.arcs[&v];
        let start = (l + 1) % k;
        let end = (r + k - 1) % k;
        let span = (end + k - start) % k;
        let a0 = tick_angle(start, k);
        let a1 = tick_angle(end, k);
        if span == 0 {
            // Single-point arc: draw a dot on the tick.
            let (cx, cy) = point(radius, a0);
            let _ = writeln!(
                svg,
                "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\" fill=\"{color}\"/>"
            );
        } else {
            let (x0, y0) = point(radius, a0);
            let (x1, y1) = point(radius, a1);
            let large = if span * 2 > k { 1 } else { 0 };
            let _ = writeln!(
                svg,
                "  <path d=\"M {x0:.2} {y0:.2} A {radius:.2} {radius:.2} 0 {large} 1 {x1:.2} {y1:.2}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"3\" stroke-linecap=\"round\"/>"
            );
        }
        let mid = tick_angle(start, k) + (span as f64 / 2.0) * std::f64::consts::TAU / k as f64;
        let (tx, ty) = point(radius + 9.0, mid);
        let _ = writeln!(
            svg,
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" fill=\"{color}\">{label}</text>"
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::construct_representation;

    #[test]
    fn svg_is_wellformed_and_deterministic() {
        let g = Graph::parse("a b\nb c\nc d").unwrap();
        let rep = construct_representation(&g).unwrap();
        let one = arc_svg(&g, &rep);
        let two = arc_svg(&g, &rep);
        assert_eq!(one, two);
        assert!(one.starts_with("<svg"));
        assert!(one.ends_with("</svg>\n"));
        for label in ["a", "b", "c", "d"] {
            assert!(one.contains(&format!(">{label}</text>")) || one.contains(label));
        }
    }

    #[test]
    fn svg_draws_full_circles() {
        let g = Graph::parse("x").unwrap();
        let rep = construct_representation(&g).unwrap();
        let svg = arc_svg(&g, &rep);
        assert!(svg.contains("stroke-width=\"3\""));
    }
}
