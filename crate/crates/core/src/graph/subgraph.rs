use std::collections::BTreeSet;

use serde::Serialize;

use super::{EdgeId, FaceId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

/// A closed vertex/edge/face triple over a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgraph {
    #[serde(skip)]
    pub host: u64,
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    pub faces: BTreeSet<FaceId>,
}

impl Subgraph {
    pub fn empty(g: &PlaneGraph) -> Self {
        Subgraph { host: g.fingerprint(), vertices: BTreeSet::new(), edges: BTreeSet::new(), faces: BTreeSet::new() }
    }

    /// Validates ids and the closure conditions.
    pub fn new(
        g: &PlaneGraph,
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = EdgeId>,
        faces: impl IntoIterator<Item = FaceId>,
    ) -> Result<Self> {
        let s = Subgraph {
            host: g.fingerprint(),
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
            faces: faces.into_iter().collect(),
        };
        s.validate(g)?;
        Ok(s)
    }

    pub fn validate(&self, g: &PlaneGraph) -> Result<()> {
        if self.host != g.fingerprint() {
            return Err(Error::InvalidSubgraph("subgraph belongs to another host".into()));
        }
        if let Some(&v) = self.vertices.iter().next_back() {
            if v >= g.n_vertices() {
                return Err(Error::InvalidSubgraph(format!("unknown vertex {v}")));
            }
        }
        for &e in &self.edges {
            if e >= g.n_edges() {
                return Err(Error::InvalidSubgraph(format!("unknown edge {e}")));
            }
            let (a, b) = g.edge_endpoints(e);
            if !self.vertices.contains(&a) || !self.vertices.contains(&b) {
                return Err(Error::InvalidSubgraph(format!("edge {a}-{b} has an endpoint outside the vertex set")));
            }
        }
        for &f in &self.faces {
            if f >= g.n_faces() {
                return Err(Error::UnknownFace(f));
            }
            if g.is_outer(f) {
                return Err(Error::InvalidSubgraph("the outer face is not a face of the tessellation".into()));
            }
            if g.face_edges(f).any(|e| !self.edges.contains(&e)) {
                return Err(Error::InvalidSubgraph(format!("face {f} is missing one of its edges")));
            }
        }
        Ok(())
    }

    pub fn vertex(g: &PlaneGraph, v: VertexId) -> Self {
        let mut s = Self::empty(g);
        s.vertices.insert(v);
        s
    }

    pub fn edge(g: &PlaneGraph, e: EdgeId) -> Self {
        let mut s = Self::empty(g);
        let (a, b) = g.edge_endpoints(e);
        s.vertices.extend([a, b]);
        s.edges.insert(e);
        s
    }

    /// Union of the closed faces in `faces`.
    pub fn face_graph(g: &PlaneGraph, faces: impl IntoIterator<Item = FaceId>) -> Self {
        let mut s = Self::empty(g);
        for f in faces {
            s.faces.insert(f);
            for &d in g.face_darts(f) {
                s.vertices.insert(g.origin(d));
                s.edges.insert(d / 2);
            }
        }
        s
    }

    /// Induced subgraph on `vs`; every vertex must be complete so that all of
    /// its edges and faces are known.
    pub fn induced(g: &PlaneGraph, vs: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut s = Self::empty(g);
        s.vertices = vs.into_iter().collect();
        for &v in &s.vertices {
            if !g.is_complete(v) {
                return Err(Error::UnsafeSubgraph(v));
            }
        }
        for &v in &s.vertices {
            for &d in g.rotation(v) {
                if s.vertices.contains(&g.target(d)) {
                    s.edges.insert(d / 2);
                }
                let f = g.face_of(d);
                if !s.faces.contains(&f) && g.face_vertices(f).all(|w| s.vertices.contains(&w)) {
                    s.faces.insert(f);
                }
            }
        }
        Ok(s)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn union(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            host: self.host,
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
            faces: self.faces.union(&other.faces).copied().collect(),
        }
    }

    /// The face graph S₀: faces of S with their vertices and edges.
    pub fn face_part(&self, g: &PlaneGraph) -> Subgraph {
        let mut s = Self::face_graph(g, self.faces.iter().copied());
        s.host = self.host;
        s
    }

    pub fn is_face_graph(&self, g: &PlaneGraph) -> bool {
        let fp = self.face_part(g);
        fp.vertices == self.vertices && fp.edges == self.edges
    }

    pub fn is_induced(&self, g: &PlaneGraph) -> bool {
        match Subgraph::induced(g, self.vertices.iter().copied()) {
            Ok(ind) => ind == *self,
            Err(_) => false,
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// All vertices complete in the host.
    pub fn require_safe(&self, g: &PlaneGraph) -> Result<()> {
        if self.host != g.fingerprint() {
            return Err(Error::WalkHostMismatch);
        }
        match self.vertices.iter().find(|&&v| !g.is_complete(v)) {
            Some(&v) => Err(Error::UnsafeSubgraph(v)),
            None => Ok(()),
        }
    }

    /// Connected components (through edges of S), ordered by smallest vertex.
    pub fn components(&self, g: &PlaneGraph) -> Vec<Subgraph> {
        let verts: Vec<VertexId> = self.vertices.iter().copied().collect();
        let idx = |v: VertexId| verts.binary_search(&v).ok();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &e in &self.edges {
            let (a, b) = g.edge_endpoints(e);
            let (ia, ib) = (idx(a).unwrap(), idx(b).unwrap());
            let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comp_of = vec![usize::MAX; verts.len()];
        let mut out: Vec<Subgraph> = Vec::new();
        for i in 0..verts.len() {
            let r = find(&mut parent, i);
            if comp_of[r] == usize::MAX {
                comp_of[r] = out.len();
                let mut s = Subgraph::empty(g);
                s.host = self.host;
                out.push(s);
            }
            out[comp_of[r]].vertices.insert(verts[i]);
        }
        for &e in &self.edges {
            let (a, _) = g.edge_endpoints(e);
            let r = find(&mut parent, idx(a).unwrap());
            out[comp_of[r]].edges.insert(e);
        }
        for &f in &self.faces {
            let a = g.face_vertices(f).next().unwrap();
            let r = find(&mut parent, idx(a).unwrap());
            out[comp_of[r]].faces.insert(f);
        }
        out
    }

    pub fn degree_sum(&self, g: &PlaneGraph) -> usize {
        self.vertices.iter().map(|&v| g.degree(v)).sum()
    }

    pub fn face_degree_sum(&self, g: &PlaneGraph) -> usize {
        self.faces.iter().map(|&f| g.face_degree(f)).sum()
    }
}
