//! Interior, closure, balls, vertex/edge boundaries and Euler characteristics.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::walk::{boundary_walk, inner_boundary_walk};
use super::{EdgeId, PlaneGraph, Subgraph, VertexId};
use crate::error::{Error, Result};

/// S⁻: the induced subgraph on the vertices of S off its boundary walk.
pub fn interior(g: &PlaneGraph, s: &Subgraph) -> Result<Subgraph> {
    let walk = boundary_walk(g, s)?;
    let inner = s.vertices.iter().copied().filter(|v| !walk.vertex_set.contains(v));
    Subgraph::induced(g, inner)
}

/// S⁻ together with the depth of S.
pub fn interior_and_depth(g: &PlaneGraph, s: &Subgraph) -> Result<(Subgraph, usize)> {
    s.require_safe(g)?;
    if s.is_empty() {
        return Ok((Subgraph::empty(g), 0));
    }
    let first = interior(g, s)?;
    let mut depth = 0;
    let mut cur = first.clone();
    while !cur.is_empty() {
        depth += 1;
        cur = interior(g, &cur)?;
    }
    Ok((first, depth))
}

/// Vertex counts |V(bS_n)| of the layer decomposition S_N = S, S_{n−1} = S_n⁻,
/// listed from the innermost layer outward (s_0 first).
pub fn layer_sizes(g: &PlaneGraph, s: &Subgraph) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = s.clone();
    while !cur.is_empty() {
        let walk = boundary_walk(g, &cur)?;
        out.push(walk.vertex_set.len());
        let inner = cur.vertices.iter().copied().filter(|v| !walk.vertex_set.contains(v));
        cur = Subgraph::induced(g, inner)?;
    }
    out.reverse();
    Ok(out)
}

/// S⁺: the face graph of all faces incident to V(S).
pub fn face_closure(g: &PlaneGraph, s: &Subgraph) -> Result<Subgraph> {
    s.require_safe(g)?;
    if s.is_empty() {
        return Err(Error::InvalidSubgraph("empty subgraph".into()));
    }
    let faces: BTreeSet<_> = s.vertices.iter().flat_map(|&v| g.faces_at(v).collect::<Vec<_>>()).collect();
    let mut out = Subgraph::face_graph(g, faces);
    out.host = s.host;
    Ok(out)
}

/// n-fold face closure of `core`.
pub fn quasi_ball(g: &PlaneGraph, core: &Subgraph, n: usize) -> Result<Subgraph> {
    let mut cur = core.clone();
    for _ in 0..n {
        cur = face_closure(g, &cur)?;
    }
    Ok(cur)
}

/// The induced subgraph on vertices within distance `n` of `v`.
pub fn combinatorial_ball(g: &PlaneGraph, v: VertexId, n: usize) -> Result<Subgraph> {
    let mut dist: BTreeMap<VertexId, usize> = BTreeMap::new();
    dist.insert(v, 0);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        if !g.is_complete(u) {
            return Err(Error::UnsafeSubgraph(u));
        }
        if du == n {
            continue;
        }
        for w in g.neighbors(u) {
            if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(du + 1);
                queue.push_back(w);
            }
        }
    }
    Subgraph::induced(g, dist.into_keys())
}

/// ∂S, d₀S and d₁S.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexEdgeBoundaries {
    pub edge_boundary: BTreeSet<EdgeId>,
    pub inner_vertex_boundary: BTreeSet<VertexId>,
    pub outer_vertex_boundary: BTreeSet<VertexId>,
}

pub fn edge_and_vertex_boundaries(g: &PlaneGraph, s: &Subgraph) -> Result<VertexEdgeBoundaries> {
    s.require_safe(g)?;
    let mut out = VertexEdgeBoundaries {
        edge_boundary: BTreeSet::new(),
        inner_vertex_boundary: BTreeSet::new(),
        outer_vertex_boundary: BTreeSet::new(),
    };
    for &v in &s.vertices {
        for &d in g.rotation(v) {
            let w = g.target(d);
            if !s.vertices.contains(&w) {
                out.edge_boundary.insert(d / 2);
                out.inner_vertex_boundary.insert(v);
                out.outer_vertex_boundary.insert(w);
            }
        }
    }
    Ok(out)
}

/// χ(S) and χ(D(S)°).
pub fn euler_characteristics(g: &PlaneGraph, s: &Subgraph) -> Result<(i64, i64)> {
    let chi = s.vertices.len() as i64 - s.edges.len() as i64 + s.faces.len() as i64;
    let walk = inner_boundary_walk(g, s)?;
    let mut per_comp: BTreeMap<usize, i64> = BTreeMap::new();
    for c in &walk.cycles {
        *per_comp.entry(c.component).or_default() += 1;
    }
    let chi_int = per_comp.values().map(|l| 2 - l).sum();
    Ok((chi, chi_int))
}
