//! Hand-drawn hosts for the worked examples.
#![allow(dead_code)]

use tessera::generators::from_drawing;
use tessera::graph::io::find_face;
use tessera::{PlaneGraph, Subgraph};

type Pt = (i64, i64);

fn cross(o: Pt, a: Pt, b: Pt) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: Pt, a: Pt, b: Pt) -> bool {
    cross(a, b, p) == 0
        && (a.0.min(b.0)..=a.0.max(b.0)).contains(&p.0)
        && (a.1.min(b.1)..=a.1.max(b.1)).contains(&p.1)
        && p != a
        && p != b
}

fn crosses(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (d1, d2) = (cross(a, b, c), cross(a, b, d));
    let (d3, d4) = (cross(c, d, a), cross(c, d, b));
    (d1 > 0) != (d2 > 0) && d1 != 0 && d2 != 0 && (d3 > 0) != (d4 > 0) && d3 != 0 && d4 != 0
        || on_segment(c, a, b)
        || on_segment(d, a, b)
        || on_segment(a, c, d)
        || on_segment(b, c, d)
}

/// Whether the midpoint of ab is inside the polygon; works in doubled
/// coordinates to stay integral.
fn midpoint_inside(a: Pt, b: Pt, poly: &[Pt]) -> bool {
    let m = (a.0 + b.0, a.1 + b.1);
    let mut inside = false;
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let (p, q) = ((2 * p.0, 2 * p.1), (2 * q.0, 2 * q.1));
        if (p.1 > m.1) != (q.1 > m.1) {
            let t = cross(p, q, m);
            if (t > 0) == (q.1 > p.1) {
                inside = !inside;
            }
        }
    }
    inside
}

/// Greedy shortest-first triangulation around fixed edges, leaving the
/// polygons in `keep` untriangulated.
pub fn fill_drawing(pts: &[Pt], fixed: &[(usize, usize)], keep: &[Vec<usize>], complete: &[bool]) -> PlaneGraph {
    let mut edges: Vec<(usize, usize)> = fixed.to_vec();
    let polys: Vec<Vec<Pt>> = keep.iter().map(|f| f.iter().map(|&v| pts[v]).collect()).collect();
    let mut cand: Vec<(i64, usize, usize)> = Vec::new();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let (dx, dy) = (pts[a].0 - pts[b].0, pts[a].1 - pts[b].1);
            cand.push((dx * dx + dy * dy, a, b));
        }
    }
    cand.sort();
    for (_, a, b) in cand {
        if edges.iter().any(|&(c, d)| (c, d) == (a, b) || (c, d) == (b, a)) {
            continue;
        }
        if pts.iter().any(|&p| on_segment(p, pts[a], pts[b])) {
            continue;
        }
        if edges.iter().any(|&(c, d)| crosses(pts[a], pts[b], pts[c], pts[d])) {
            continue;
        }
        if polys.iter().any(|poly| midpoint_inside(pts[a], pts[b], poly)) {
            continue;
        }
        edges.push((a, b));
    }
    let coords: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x as f64, y as f64)).collect();
    from_drawing(&coords, &edges, complete).expect("drawing")
}

/// Box frame of incomplete vertices around [lo, hi], every `step` units.
fn frame(lo: Pt, hi: Pt, step: i64) -> Vec<Pt> {
    let mut out = Vec::new();
    let mut x = lo.0;
    while x < hi.0 {
        out.push((x, lo.1));
        out.push((x + step.min(hi.0 - x), hi.1));
        x += step;
    }
    let mut y = lo.1;
    while y < hi.1 {
        out.push((hi.0, y));
        out.push((lo.0, y + step.min(hi.1 - y)));
        y += step;
    }
    out.sort();
    out.dedup();
    out
}

/// Two squares, a tree, a pendant square and two hexagons sharing a chord
/// around a quadrilateral hole: 21 vertices, 26 edges, 5 faces.
pub fn five_faces() -> (PlaneGraph, Subgraph) {
    let mut pts: Vec<Pt> = vec![
        (0, 0),
        (2, 0),
        (4, 0),
        (4, 2),
        (6, 2),
        (8, 3),
        (8, 1),
        (2, 2),
        (2, 4),
        (4, 4),
        (4, 6),
        (2, 6),
        (0, 2),
        (-2, -2),
        (-2, -6),
        (0, -8),
        (2, -6),
        (2, -2),
        (-1, -6),
        (0, -4),
        (1, -6),
    ];
    let faces: Vec<Vec<usize>> = vec![
        vec![0, 1, 7, 12],
        vec![1, 2, 3, 7],
        vec![8, 9, 10, 11],
        vec![0, 13, 14, 15, 18, 19],
        vec![0, 19, 20, 15, 16, 17],
    ];
    let mut edges = vec![(3, 4), (4, 5), (4, 6), (7, 8), (15, 18), (15, 20)];
    for f in &faces {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            if !edges.iter().any(|&e| e == (a, b) || e == (b, a)) {
                edges.push((a, b));
            }
        }
    }
    assert_eq!(edges.len(), 26);
    let n = pts.len();
    pts.extend(frame((-6, -12), (12, 10), 3));
    let complete: Vec<bool> = (0..pts.len()).map(|v| v < n).collect();
    let g = fill_drawing(&pts, &edges, &faces, &complete);
    let eids = edges.iter().map(|&(a, b)| g.edge_between(a, b).expect("edge"));
    let fids: Vec<_> = faces.iter().map(|f| find_face(&g, f).expect("face")).collect();
    let s = Subgraph::new(&g, 0..n, eids, fids).expect("subgraph");
    (g, s)
}

/// Nine unit squares: [0,2]², [2,3]×[0,1] and [3,5]×[0,2] in a square grid.
pub fn nine_squares() -> (PlaneGraph, Subgraph) {
    let (w, h) = (12i64, 9i64);
    let id = |x: i64, y: i64| ((y + 3) * w + (x + 3)) as usize;
    let mut coords = Vec::new();
    let mut complete = Vec::new();
    for y in -3..h - 3 {
        for x in -3..w - 3 {
            coords.push((x as f64, y as f64));
            complete.push(x > -3 && y > -3 && x < w - 4 && y < h - 4);
        }
    }
    let mut edges = Vec::new();
    for y in -3..h - 3 {
        for x in -3..w - 3 {
            if x + 1 < w - 3 {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h - 3 {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    let g = from_drawing(&coords, &edges, &complete).expect("grid");
    let cells = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (3, 0), (4, 0), (3, 1), (4, 1)];
    let faces = cells.iter().map(|&(x, y)| find_face(&g, &[id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)]).expect("cell"));
    (g.clone(), Subgraph::face_graph(&g, faces))
}
