//! Rotation-system plane graphs.
//!
//! A [`PlaneGraph`] is a finite patch of a tessellation: every vertex carries its
//! counterclockwise rotation and a completeness flag. Complete vertices have their
//! full neighbourhood present; incomplete vertices sit on the rim of the patch.

use std::collections::{HashMap, VecDeque};
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod dual;
pub mod io;
pub mod iso;
pub mod ops;
pub mod subgraph;
pub mod walk;

pub use subgraph::Subgraph;
pub use walk::{BoundaryWalk, WalkCycle, WalkKind};

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub origin: VertexId,
    pub twin: DartId,
    pub rot_index: usize,
}

/// Generator parameters carried alongside a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<String>,
    /// Recomputed on load; stored for readers of the JSON.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub safe_height: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    rot: Vec<Vec<DartId>>,
    complete: Vec<bool>,
    darts: Vec<Dart>,
    dart_face: Vec<FaceId>,
    faces: Vec<Vec<DartId>>,
    outer: Option<FaceId>,
    meta: GraphMeta,
    fingerprint: u64,
}

impl PlaneGraph {
    /// Builds a graph from counterclockwise neighbour lists.
    ///
    /// Edge `e` owns darts `2e` (from the smaller endpoint) and `2e + 1`.
    pub fn build(rotations: &[Vec<VertexId>], complete: &[bool], mut meta: GraphMeta) -> Result<Self> {
        let n = rotations.len();
        if complete.len() != n {
            return Err(Error::InconsistentRotation(format!(
                "{} rotations but {} completeness flags",
                n,
                complete.len()
            )));
        }
        if n == 0 {
            return Err(Error::InconsistentRotation("empty graph".into()));
        }
        let mut dart_of: HashMap<(VertexId, VertexId), DartId> = HashMap::new();
        let mut darts: Vec<Dart> = Vec::new();
        for (v, nbrs) in rotations.iter().enumerate() {
            for &w in nbrs {
                if w >= n {
                    return Err(Error::InconsistentRotation(format!("vertex {v} lists unknown vertex {w}")));
                }
                if w == v {
                    return Err(Error::SelfLoop(v));
                }
                if w > v {
                    if dart_of.contains_key(&(v, w)) {
                        return Err(Error::ParallelEdge(v, w));
                    }
                    let id = darts.len();
                    dart_of.insert((v, w), id);
                    dart_of.insert((w, v), id + 1);
                    darts.push(Dart { id, origin: v, twin: id + 1, rot_index: 0 });
                    darts.push(Dart { id: id + 1, origin: w, twin: id, rot_index: 0 });
                }
            }
        }
        let mut rot = Vec::with_capacity(n);
        let mut seen = vec![false; darts.len()];
        for (v, nbrs) in rotations.iter().enumerate() {
            let mut list = Vec::with_capacity(nbrs.len());
            for (i, &w) in nbrs.iter().enumerate() {
                let d = *dart_of.get(&(v, w)).ok_or_else(|| {
                    Error::InconsistentRotation(format!("vertex {v} lists {w} but {w} does not list {v}"))
                })?;
                if seen[d] {
                    return Err(Error::ParallelEdge(v, w));
                }
                seen[d] = true;
                darts[d].rot_index = i;
                list.push(d);
            }
            rot.push(list);
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            let (a, b) = (darts[d].origin, darts[darts[d].twin].origin);
            return Err(Error::InconsistentRotation(format!("vertex {b} lists {a} but {a} does not list {b}")));
        }

        let mut g = PlaneGraph {
            rot,
            complete: complete.to_vec(),
            darts,
            dart_face: Vec::new(),
            faces: Vec::new(),
            outer: None,
            meta: GraphMeta::default(),
            fingerprint: 0,
        };
        g.trace_faces();
        g.check_euler()?;
        g.outer = g.find_outer()?;
        if let Some(o) = g.outer {
            for &d in &g.faces[o] {
                let v = g.darts[d].origin;
                if g.complete[v] {
                    return Err(Error::OuterFace(format!("complete vertex {v} lies on the outer face")));
                }
            }
        }
        meta.safe_height = g.compute_safe_height(0);
        g.meta = meta;
        let mut h = DefaultHasher::new();
        rotations.hash(&mut h);
        complete.hash(&mut h);
        g.fingerprint = h.finish();
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let nd = self.darts.len();
        self.dart_face = vec![usize::MAX; nd];
        for start in 0..nd {
            if self.dart_face[start] != usize::MAX {
                continue;
            }
            let f = self.faces.len();
            let mut cyc = Vec::new();
            let mut d = start;
            loop {
                self.dart_face[d] = f;
                cyc.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            self.faces.push(cyc);
        }
    }

    fn check_euler(&self) -> Result<()> {
        let (v, e, f) = (self.n_vertices() as i64, self.n_edges() as i64, self.faces.len() as i64);
        let comps = self.component_count() as i64;
        // An isolated vertex contributes no face under tracing; account for it.
        let isolated = (0..self.n_vertices()).filter(|&x| self.rot[x].is_empty()).count() as i64;
        if comps != 1 {
            return Err(Error::NonPlanar(format!("graph has {comps} components")));
        }
        let f_eff = if isolated == 1 && v == 1 { 1 } else { f };
        if v - e + f_eff != 2 {
            return Err(Error::NonPlanar(format!("V - E + F = {} - {} + {} != 2", v, e, f_eff)));
        }
        Ok(())
    }

    fn component_count(&self) -> usize {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        comps
    }

    fn find_outer(&self) -> Result<Option<FaceId>> {
        let incomplete: Vec<VertexId> = (0..self.n_vertices()).filter(|&v| !self.complete[v]).collect();
        if incomplete.is_empty() {
            return Ok(None);
        }
        let mut mark = vec![false; self.n_vertices()];
        let mut best: Option<(usize, FaceId)> = None;
        for (f, cyc) in self.faces.iter().enumerate() {
            for &d in cyc {
                mark[self.darts[d].origin] = true;
            }
            if incomplete.iter().all(|&v| mark[v]) {
                let len = cyc.len();
                if best.map_or(true, |(l, _)| len > l) {
                    best = Some((len, f));
                }
            }
            for &d in cyc {
                mark[self.darts[d].origin] = false;
            }
        }
        match best {
            Some((_, f)) => Ok(Some(f)),
            None if self.n_edges() == 0 => Ok(None),
            None => Err(Error::OuterFace("no face contains every incomplete vertex".into())),
        }
    }

    fn compute_safe_height(&self, center: VertexId) -> Option<usize> {
        if center >= self.n_vertices() || !self.complete[center] {
            return None;
        }
        let dist = self.bfs_distances(center);
        let mut worst = usize::MAX;
        for (v, d) in dist.iter().enumerate() {
            if let Some(d) = d {
                if !self.complete[v] {
                    worst = worst.min(*d);
                }
            }
        }
        if worst == usize::MAX {
            // Closed graph: everything is safe.
            Some(dist.iter().flatten().copied().max().unwrap_or(0))
        } else {
            Some(worst - 1)
        }
    }

    pub fn bfs_distances(&self, from: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n_vertices()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn n_vertices(&self) -> usize {
        self.rot.len()
    }

    pub fn n_edges(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn n_darts(&self) -> usize {
        self.darts.len()
    }

    /// Number of traced faces, including the outer face when there is one.
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn outer_face(&self) -> Option<FaceId> {
        self.outer
    }

    pub fn is_outer(&self, f: FaceId) -> bool {
        self.outer == Some(f)
    }

    /// Faces other than the outer face.
    pub fn real_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).filter(move |&f| !self.is_outer(f))
    }

    pub fn is_complete(&self, v: VertexId) -> bool {
        self.complete[v]
    }

    pub fn complete_flags(&self) -> &[bool] {
        &self.complete
    }

    pub fn meta(&self) -> &GraphMeta {
        &self.meta
    }

    /// Replaces the metadata; the recomputed safe height is kept.
    pub fn set_meta(&mut self, meta: GraphMeta) {
        let safe = self.meta.safe_height;
        self.meta = GraphMeta { safe_height: safe, ..meta };
    }

    pub fn safe_height(&self) -> Option<usize> {
        self.meta.safe_height
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn dart(&self, d: DartId) -> Dart {
        self.darts[d]
    }

    pub fn origin(&self, d: DartId) -> VertexId {
        self.darts[d].origin
    }

    pub fn target(&self, d: DartId) -> VertexId {
        self.darts[d ^ 1].origin
    }

    pub fn twin(&self, d: DartId) -> DartId {
        d ^ 1
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        d / 2
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.darts[2 * e].origin, self.darts[2 * e + 1].origin)
    }

    /// Next dart counterclockwise around the origin.
    pub fn rot_next(&self, d: DartId) -> DartId {
        let Dart { origin, rot_index, .. } = self.darts[d];
        let r = &self.rot[origin];
        r[(rot_index + 1) % r.len()]
    }

    /// Next dart clockwise around the origin.
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let Dart { origin, rot_index, .. } = self.darts[d];
        let r = &self.rot[origin];
        r[(rot_index + r.len() - 1) % r.len()]
    }

    /// Successor of `d` along the face on its left.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_prev(d ^ 1)
    }

    /// Face on the left of `d`; it occupies the sector counterclockwise after `d`.
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    pub fn face_darts(&self, f: FaceId) -> &[DartId] {
        &self.faces[f]
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn face_vertices(&self, f: FaceId) -> impl Iterator<Item = VertexId> + '_ {
        self.faces[f].iter().map(move |&d| self.darts[d].origin)
    }

    pub fn face_edges(&self, f: FaceId) -> impl Iterator<Item = EdgeId> + '_ {
        self.faces[f].iter().map(|&d| d / 2)
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rot[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rot[v].iter().map(move |&d| self.darts[d ^ 1].origin)
    }

    /// Faces around `v` in counterclockwise order.
    pub fn faces_at(&self, v: VertexId) -> impl Iterator<Item = FaceId> + '_ {
        self.rot[v].iter().map(move |&d| self.dart_face[d])
    }

    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.rot[u].iter().copied().find(|&d| self.darts[d ^ 1].origin == v)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.dart_between(u, v).map(|d| d / 2)
    }

    /// Neighbour lists in rotation order, the inverse of [`PlaneGraph::build`].
    pub fn rotation_lists(&self) -> Vec<Vec<VertexId>> {
        (0..self.n_vertices()).map(|v| self.neighbors(v).collect()).collect()
    }

    /// A face is trusted when it is not the outer face.
    pub fn is_real_face(&self, f: FaceId) -> bool {
        !self.is_outer(f)
    }

    pub fn complete_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n_vertices()).filter(move |&v| self.complete[v])
    }

    /// Checks the tessellation conditions on the complete region and returns
    /// human-readable violations (empty when the audit passes).
    pub fn audit_tessellation(&self) -> Vec<String> {
        let mut out = Vec::new();
        for v in self.complete_vertices() {
            let fs: Vec<FaceId> = self.faces_at(v).collect();
            if fs.iter().any(|&f| self.is_outer(f)) {
                out.push(format!("complete vertex {v} touches the outer face"));
            }
            let mut sorted = fs.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != fs.len() {
                out.push(format!("a face repeats around vertex {v}"));
            }
            for &d in &self.rot[v] {
                if self.dart_face[d] == self.dart_face[d ^ 1] {
                    out.push(format!("edge {} borders one face twice", d / 2));
                }
            }
        }
        let mut near: Vec<FaceId> = self
            .complete_vertices()
            .flat_map(|v| self.faces_at(v).collect::<Vec<_>>())
            .filter(|&f| !self.is_outer(f))
            .collect();
        near.sort_unstable();
        near.dedup();
        for &f in &near {
            let vs: Vec<VertexId> = self.face_vertices(f).collect();
            let mut s = vs.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != vs.len() {
                out.push(format!("face {f} is not a simple polygon"));
            }
            if vs.len() < 3 {
                out.push(format!("face {f} has degree {}", vs.len()));
            }
            // Any other face sharing two or more vertices must share exactly one edge.
            let mut shared: HashMap<FaceId, Vec<VertexId>> = HashMap::new();
            for &v in &s {
                let mut fs: Vec<FaceId> = self.faces_at(v).filter(|&h| h != f).collect();
                fs.sort_unstable();
                fs.dedup();
                for h in fs {
                    shared.entry(h).or_default().push(v);
                }
            }
            let mut keys: Vec<_> = shared.into_iter().filter(|(_, vs)| vs.len() >= 2).collect();
            keys.sort();
            for (h, common) in keys {
                if self.is_outer(h) {
                    continue;
                }
                let edges_f: Vec<EdgeId> = self.face_edges(f).collect();
                let n_shared_edges = self.face_edges(h).filter(|e| edges_f.contains(e)).count();
                if common.len() != 2 || n_shared_edges != 1 {
                    out.push(format!("faces {f} and {h} meet in {} vertices", common.len()));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}
