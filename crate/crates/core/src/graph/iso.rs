//! Rooted-map codes for isomorphism checks on balls.

use std::collections::VecDeque;

use super::{DartId, PlaneGraph, VertexId};

const OUTSIDE: u64 = u64::MAX;
const END: u64 = u64::MAX - 1;

/// Breadth-first code of the ball of radius `radius` around the origin of
/// `root`, reading rotations counterclockwise from each vertex's entry dart.
/// Two rooted balls are orientation-preservingly isomorphic iff codes agree.
pub fn ball_code(g: &PlaneGraph, root: DartId, radius: usize) -> Vec<u64> {
    let n = g.n_vertices();
    let mut label = vec![u64::MAX; n];
    let mut dist = vec![usize::MAX; n];
    let mut entry = vec![usize::MAX; n];
    let start = g.origin(root);
    label[start] = 0;
    dist[start] = 0;
    entry[start] = root;
    let mut next_label = 1u64;
    let mut queue = VecDeque::from([start]);
    let mut code = Vec::new();
    while let Some(u) = queue.pop_front() {
        let rot = g.rotation(u);
        let k0 = g.dart(entry[u]).rot_index;
        code.push(rot.len() as u64);
        for i in 0..rot.len() {
            let d = rot[(k0 + i) % rot.len()];
            let w = g.target(d);
            if dist[w] == usize::MAX {
                if dist[u] + 1 > radius {
                    code.push(OUTSIDE);
                    continue;
                }
                dist[w] = dist[u] + 1;
                label[w] = next_label;
                next_label += 1;
                entry[w] = g.twin(d);
                queue.push_back(w);
            }
            code.push(if dist[w] <= radius { label[w] } else { OUTSIDE });
        }
        code.push(END);
    }
    code
}

/// Whether the radius-`r` balls around `u` in `a` and `v` in `b` are isomorphic
/// as rooted plane maps (any root dart at `v` is tried).
pub fn balls_isomorphic(a: &PlaneGraph, u: VertexId, b: &PlaneGraph, v: VertexId, r: usize) -> bool {
    if a.degree(u) != b.degree(v) || a.degree(u) == 0 {
        return a.degree(u) == b.degree(v);
    }
    let target = ball_code(a, a.rotation(u)[0], r);
    b.rotation(v).iter().any(|&d| ball_code(b, d, r) == target)
}

/// Rotations and reflections of the rooted ball of radius `radius` around `v`,
/// as vertex maps (`None` outside the ball). The identity is left out, and so
/// is any candidate that fails to be a map isomorphism on the ball, as happens
/// near the edge of a finite patch.
pub fn local_symmetries(g: &PlaneGraph, v: VertexId, radius: usize) -> Vec<Vec<Option<VertexId>>> {
    let rot = g.rotation(v);
    let mut out = Vec::new();
    for reflect in [false, true] {
        for (k, &to) in rot.iter().enumerate() {
            if k == 0 && !reflect {
                continue;
            }
            if let Some(m) = dart_map(g, rot[0], to, reflect, radius) {
                out.push(m);
            }
        }
    }
    out
}

fn dart_map(g: &PlaneGraph, from: DartId, to: DartId, reflect: bool, radius: usize) -> Option<Vec<Option<VertexId>>> {
    let n = g.n_vertices();
    let mut map: Vec<Option<VertexId>> = vec![None; n];
    let mut used = vec![false; n];
    let mut entry: Vec<(DartId, DartId)> = vec![(0, 0); n];
    let mut dist = vec![usize::MAX; n];
    let (a, b) = (g.origin(from), g.origin(to));
    map[a] = Some(b);
    used[b] = true;
    entry[a] = (from, to);
    dist[a] = 0;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == radius {
            continue;
        }
        let image = map[u].unwrap();
        if !g.is_complete(u) || !g.is_complete(image) || g.degree(u) != g.degree(image) {
            return None;
        }
        let (mut d, mut e) = entry[u];
        for _ in 0..g.degree(u) {
            let (w, x) = (g.target(d), g.target(e));
            match map[w] {
                Some(y) if y != x => return None,
                Some(_) => {}
                None => {
                    if used[x] {
                        return None;
                    }
                    map[w] = Some(x);
                    used[x] = true;
                    entry[w] = (g.twin(d), g.twin(e));
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
            d = g.rot_next(d);
            e = if reflect { g.rot_prev(e) } else { g.rot_next(e) };
        }
    }
    Some(map)
}
