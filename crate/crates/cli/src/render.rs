//! DOT and SVG output. SVG coordinates are a visual aid only.

use std::collections::VecDeque;
use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use num_complex::Complex64;
use tessera::{PlaneGraph, Subgraph};

pub fn dot(g: &PlaneGraph) -> String {
    let mut out = String::from("graph tessera {\n  node [shape=point];\n");
    for v in 0..g.n_vertices() {
        let style = if g.is_complete(v) { "" } else { " [color=gray]" };
        let _ = writeln!(out, "  {v}{style};");
    }
    for e in 0..g.n_edges() {
        let (a, b) = g.edge_endpoints(e);
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Copy, PartialEq)]
enum Geometry {
    Hyperbolic,
    Euclidean,
    Spherical,
}

fn geometry(g: &PlaneGraph) -> (Geometry, f64, f64) {
    let m = g.meta();
    let p = m.p.unwrap_or(6) as f64;
    let q = m.q.unwrap_or(3) as f64;
    let s = (p - 2.0) * (q - 2.0);
    if s > 4.0 {
        (Geometry::Hyperbolic, p, q)
    } else if s == 4.0 {
        (Geometry::Euclidean, p, q)
    } else {
        (Geometry::Spherical, p, q)
    }
}

/// Positions from vertex 0 outward: neighbours of a placed vertex are spread at
/// equal angles in rotation order, one edge length away. Exact for regular
/// patches, approximate otherwise.
fn layout(g: &PlaneGraph) -> Vec<Complex64> {
    let n = g.n_vertices();
    let mut pos = vec![Complex64::new(0.0, 0.0); n];
    if n == 0 {
        return pos;
    }
    let (geom, p, q) = geometry(g);
    if geom == Geometry::Spherical {
        for (v, z) in pos.iter_mut().enumerate() {
            *z = Complex64::from_polar(0.8, TAU * v as f64 / n as f64);
        }
        return pos;
    }
    // Euclidean steps are scaled so the picture fits; hyperbolic ones use the
    // disk radius of an edge from the centre.
    let step = match geom {
        Geometry::Hyperbolic => {
            // cosh of half an edge is cos(π/q)/sin(π/p); a point at hyperbolic
            // distance 2h from the centre sits at radius tanh(h).
            let half = ((PI / q).cos() / (PI / p).sin()).acosh();
            half.tanh()
        }
        _ => 1.0,
    };
    let to_origin = |a: Complex64, z: Complex64| match geom {
        Geometry::Hyperbolic => (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z),
        _ => z - a,
    };
    let from_origin = |a: Complex64, w: Complex64| match geom {
        Geometry::Hyperbolic => (w + a) / (Complex64::new(1.0, 0.0) + a.conj() * w),
        _ => w + a,
    };
    let mut placed = vec![false; n];
    placed[0] = true;
    // Incomplete vertices have partial rotations, so their angles are only a
    // guess: expand them after everything reachable through complete ones.
    for pass_complete in [true, false] {
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| placed[v]).collect();
        while let Some(v) = queue.pop_front() {
            if pass_complete && !g.is_complete(v) {
                continue;
            }
            let rot = g.rotation(v);
            let k = rot.len();
            // Anchor on an already placed neighbour, else start at angle 0.
            let anchor = rot.iter().position(|&d| placed[g.target(d)]);
            let base = match anchor {
                Some(i) => (i, to_origin(pos[v], pos[g.target(rot[i])]).arg()),
                None => (0, 0.0),
            };
            for j in 0..k {
                let d = rot[(base.0 + j) % k];
                let w = g.target(d);
                if placed[w] {
                    continue;
                }
                let angle = base.1 + TAU * j as f64 / k as f64;
                pos[w] = from_origin(pos[v], Complex64::from_polar(step, angle));
                placed[w] = true;
                queue.push_back(w);
            }
        }
    }
    if geom == Geometry::Euclidean {
        let r = pos.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for z in &mut pos {
            *z /= r * 1.05;
        }
    }
    pos
}

/// Geodesic between two points of the disk: an SVG arc, or a line through
/// the centre.
fn segment(a: Complex64, b: Complex64, hyperbolic: bool, scale: f64) -> String {
    let map = |z: Complex64| (scale * (1.0 + z.re), scale * (1.0 - z.im));
    let (ax, ay) = map(a);
    let (bx, by) = map(b);
    let cross = a.re * b.im - a.im * b.re;
    if !hyperbolic || cross.abs() < 1e-9 || a.norm() < 1e-9 || b.norm() < 1e-9 {
        return format!("M{ax:.3},{ay:.3}L{bx:.3},{by:.3}");
    }
    // Circle through a, b and the inverse of a.
    let c = {
        let a2 = a.norm_sqr() + 1.0;
        let b2 = b.norm_sqr() + 1.0;
        let det = 2.0 * cross;
        Complex64::new((a2 * b.im - b2 * a.im) / det, (b2 * a.re - a2 * b.re) / det)
    };
    let r = (c - a).norm() * scale;
    // The centre lies across the chord from the origin. With the origin on the
    // left of a→b the arc turns clockwise around it, which is sweep 1 once y
    // points down.
    let sweep = if cross > 0.0 { 1 } else { 0 };
    format!("M{ax:.3},{ay:.3}A{r:.3},{r:.3} 0 0 {sweep} {bx:.3},{by:.3}")
}

pub fn svg(g: &PlaneGraph, highlight: Option<&Subgraph>) -> String {
    let scale = 400.0;
    let pos = layout(g);
    let hyperbolic = geometry(g).0 == Geometry::Hyperbolic;
    let size = 2.0 * scale;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {size} {size}\" width=\"{size}\" height=\"{size}\">\n"
    );
    if hyperbolic {
        let _ = writeln!(out, "<circle cx=\"{scale}\" cy=\"{scale}\" r=\"{scale}\" fill=\"none\" stroke=\"#999\"/>");
    }
    if let Some(s) = highlight {
        for &f in &s.faces {
            let darts = g.face_darts(f);
            let mut path = String::new();
            for (i, &d) in darts.iter().enumerate() {
                let seg = segment(pos[g.origin(d)], pos[g.target(d)], hyperbolic, scale);
                // Drop the repeated move-to after the first side.
                path.push_str(if i == 0 { &seg } else { &seg[seg.find(['L', 'A']).unwrap_or(0)..] });
            }
            let _ = writeln!(out, "<path d=\"{path}Z\" fill=\"#f3c98b\" stroke=\"none\"/>");
        }
    }
    for e in 0..g.n_edges() {
        let (a, b) = g.edge_endpoints(e);
        let on = highlight.is_some_and(|s| s.edges.contains(&e));
        let colour = if on { "#b3541e" } else if g.is_complete(a) && g.is_complete(b) { "#333" } else { "#bbb" };
        let width = if on { 2.0 } else { 1.0 };
        let d = segment(pos[a], pos[b], hyperbolic, scale);
        let _ = writeln!(out, "<path d=\"{d}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"{width}\"/>");
    }
    out.push_str("</svg>\n");
    out
}
