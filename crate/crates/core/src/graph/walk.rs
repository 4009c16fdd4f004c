//! Boundary walks.
//!
//! Every walk keeps the region it bounds on its left: D(S) for `bS`, the interior
//! components of the face part for `b_iS`, and the layer's core for `b₁`.
//! Corners therefore see the outside on their right.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::{DartId, FaceId, PlaneGraph, Subgraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Outer,
    Inner,
    Layer,
}

/// One closed walk. A walk of length zero is a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkCycle {
    pub vertices: Vec<VertexId>,
    pub darts: Vec<DartId>,
    /// Component of S (outer) or of the interior (inner) this cycle bounds.
    pub component: usize,
}

impl WalkCycle {
    fn from_darts(g: &PlaneGraph, darts: Vec<DartId>, component: usize) -> Self {
        WalkCycle { vertices: darts.iter().map(|&d| g.origin(d)).collect(), darts, component }
    }

    fn constant(v: VertexId, component: usize) -> Self {
        WalkCycle { vertices: vec![v], darts: Vec::new(), component }
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// True when no vertex repeats.
    pub fn is_simple(&self) -> bool {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v.dedup();
        v.len() == self.vertices.len() && self.len() >= 3
    }

    /// Corner `k` as (v_k, dart back toward v_{k−1}, dart toward v_{k+1}).
    pub fn corner(&self, g: &PlaneGraph, k: usize) -> (VertexId, DartId, DartId) {
        let n = self.darts.len();
        let out = self.darts[k];
        let back = g.twin(self.darts[(k + n - 1) % n]);
        (self.vertices[k], back, out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryWalk {
    pub kind: WalkKind,
    pub cycles: Vec<WalkCycle>,
    /// Total edge count, |bS|.
    pub length: usize,
    /// Distinct vertices, |V(bS)| is its size.
    pub vertex_set: BTreeSet<VertexId>,
    /// Inner walks only: set when the subgraph has no faces.
    pub empty_face_set: bool,
    #[serde(skip)]
    pub host: u64,
}

impl BoundaryWalk {
    fn assemble(g: &PlaneGraph, kind: WalkKind, cycles: Vec<WalkCycle>) -> Self {
        let length = cycles.iter().map(|c| c.len()).sum();
        let vertex_set = cycles.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        BoundaryWalk { kind, cycles, length, vertex_set, empty_face_set: false, host: g.fingerprint() }
    }

    pub fn check_host(&self, g: &PlaneGraph) -> Result<()> {
        if self.host == g.fingerprint() {
            Ok(())
        } else {
            Err(Error::WalkHostMismatch)
        }
    }

    /// Single simple cycle of length ≥ 3.
    pub fn is_simple_cycle(&self) -> bool {
        self.cycles.len() == 1 && self.cycles[0].is_simple()
    }
}

/// The boundary walk bS.
pub fn boundary_walk(g: &PlaneGraph, s: &Subgraph) -> Result<BoundaryWalk> {
    s.require_safe(g)?;
    if s.is_empty() {
        return Err(Error::InvalidSubgraph("empty subgraph".into()));
    }
    let in_edge = |d: DartId| s.edges.contains(&(d / 2));
    // Next S-dart counterclockwise after twin(d): keeps the outside on the right.
    let next = |d: DartId| {
        let mut e = g.rot_next(g.twin(d));
        while !in_edge(e) {
            e = g.rot_next(e);
        }
        e
    };
    let mut visited: HashSet<DartId> = HashSet::new();
    let mut cycles = Vec::new();
    for (ci, comp) in s.components(g).iter().enumerate() {
        if comp.edges.is_empty() {
            let v = *comp.vertices.iter().next().unwrap();
            cycles.push(WalkCycle::constant(v, ci));
            continue;
        }
        let mut darts: Vec<DartId> = comp.edges.iter().flat_map(|&e| [2 * e, 2 * e + 1]).collect();
        darts.sort_unstable();
        for &start in &darts {
            if visited.contains(&start) {
                continue;
            }
            if s.faces.contains(&g.face_of(g.twin(start))) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = start;
            loop {
                visited.insert(d);
                cyc.push(d);
                d = next(d);
                if d == start {
                    break;
                }
            }
            cycles.push(WalkCycle::from_darts(g, cyc, ci));
        }
    }
    Ok(BoundaryWalk::assemble(g, WalkKind::Outer, cycles))
}

/// Interior components of the face part: faces joined across shared edges.
pub fn interior_components(g: &PlaneGraph, s: &Subgraph) -> Vec<BTreeSet<FaceId>> {
    let faces: Vec<FaceId> = s.faces.iter().copied().collect();
    let idx = |f: FaceId| faces.binary_search(&f).ok();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &f) in faces.iter().enumerate() {
        for &d in g.face_darts(f) {
            if let Some(j) = idx(g.face_of(g.twin(d))) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut comps: Vec<BTreeSet<FaceId>> = Vec::new();
    let mut slot = vec![usize::MAX; faces.len()];
    for i in 0..faces.len() {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = comps.len();
            comps.push(BTreeSet::new());
        }
        comps[slot[r]].insert(faces[i]);
    }
    comps
}

/// The inner boundary walk b_iS of the face part of `s`.
pub fn inner_boundary_walk(g: &PlaneGraph, s: &Subgraph) -> Result<BoundaryWalk> {
    let s0 = s.face_part(g);
    s0.require_safe(g)?;
    if s0.faces.is_empty() {
        let mut w = BoundaryWalk::assemble(g, WalkKind::Inner, Vec::new());
        w.empty_face_set = true;
        return Ok(w);
    }
    let mut cycles = Vec::new();
    for (ci, comp) in interior_components(g, &s0).iter().enumerate() {
        let inside = |f: FaceId| comp.contains(&f);
        let mut boundary: Vec<DartId> = comp
            .iter()
            .flat_map(|&f| g.face_darts(f).iter().copied())
            .filter(|&d| !inside(g.face_of(g.twin(d))))
            .collect();
        boundary.sort_unstable();
        let mut visited = vec![false; boundary.len()];
        // Turn as far right as the component allows, which walks through pinch
        // points without splitting the walk there.
        let next = |d: DartId| {
            let mut e = g.rot_prev(g.twin(d));
            while inside(g.face_of(g.rot_prev(e))) {
                e = g.rot_prev(e);
            }
            e
        };
        for i in 0..boundary.len() {
            if visited[i] {
                continue;
            }
            let start = boundary[i];
            let mut cyc = Vec::new();
            let mut d = start;
            loop {
                let j = boundary.binary_search(&d).expect("walk left the component boundary");
                visited[j] = true;
                cyc.push(d);
                d = next(d);
                if d == start {
                    break;
                }
            }
            cycles.push(WalkCycle::from_darts(g, cyc, ci));
        }
    }
    Ok(BoundaryWalk::assemble(g, WalkKind::Inner, cycles))
}

/// The layer walk b₁ around `b`: the boundary of the induced complement on
/// V ∖ V(b), reversed so that `b` lies on its left.
pub fn outer_layer_walk(g: &PlaneGraph, b: &Subgraph) -> Result<BoundaryWalk> {
    b.require_safe(g)?;
    if b.is_empty() {
        return Err(Error::InvalidSubgraph("empty subgraph".into()));
    }
    let in_b = |v: VertexId| b.vertices.contains(&v);
    // Candidate vertices: those of faces touching V(b), outside V(b).
    let mut layer: BTreeSet<VertexId> = BTreeSet::new();
    for &v in &b.vertices {
        for f in g.faces_at(v) {
            for w in g.face_vertices(f) {
                if !in_b(w) {
                    layer.insert(w);
                }
            }
        }
    }
    if layer.is_empty() {
        return Err(Error::UnsafeSubgraph(*b.vertices.iter().next().unwrap()));
    }
    if let Some(&w) = layer.iter().find(|&&w| !g.is_complete(w)) {
        return Err(Error::UnsafeSubgraph(w));
    }
    let t_dart = |d: DartId| !in_b(g.origin(d)) && !in_b(g.target(d));
    let t_face = |f: FaceId| !g.is_outer(f) && g.face_vertices(f).all(|w| !in_b(w));
    let next = |d: DartId| {
        let mut e = g.rot_prev(g.twin(d));
        while !t_dart(e) {
            e = g.rot_prev(e);
        }
        e
    };
    let mut starts: Vec<DartId> = Vec::new();
    let mut cycles = Vec::new();
    for &w in &layer {
        if g.rotation(w).iter().all(|&d| !t_dart(d)) {
            cycles.push(WalkCycle::constant(w, 0));
            continue;
        }
        starts.extend(g.rotation(w).iter().copied().filter(|&d| t_dart(d) && !t_face(g.face_of(d))));
    }
    starts.sort_unstable();
    let mut visited: BTreeSet<DartId> = BTreeSet::new();
    for &start in &starts {
        if visited.contains(&start) {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = start;
        loop {
            if !g.is_complete(g.origin(d)) {
                return Err(Error::UnsafeSubgraph(g.origin(d)));
            }
            visited.insert(d);
            cyc.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        cycles.push(WalkCycle::from_darts(g, cyc, 0));
    }
    // Constant cycles were pushed in vertex order ahead of traced ones; order all
    // cycles by their first dart, constants first by vertex id.
    cycles.sort_by_key(|c| (c.darts.first().copied().map_or(0, |d| d + 1), c.vertices[0]));
    for (i, c) in cycles.iter_mut().enumerate() {
        c.component = i;
    }
    Ok(BoundaryWalk::assemble(g, WalkKind::Layer, cycles))
}
