//! `tessera-graph-v1` interchange and subgraph files.

use serde::{Deserialize, Serialize};

use super::{FaceId, GraphMeta, PlaneGraph, Subgraph, VertexId};
use crate::error::{Error, Result};

pub const FORMAT: &str = "tessera-graph-v1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: VertexId,
    pub rotation: Vec<VertexId>,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub format: String,
    pub vertices: Vec<VertexRecord>,
    #[serde(default)]
    pub meta: GraphMeta,
}

impl GraphFile {
    pub fn from_graph(g: &PlaneGraph) -> Self {
        let rot = g.rotation_lists();
        GraphFile {
            format: FORMAT.into(),
            vertices: rot
                .into_iter()
                .enumerate()
                .map(|(id, rotation)| VertexRecord { id, rotation, complete: g.is_complete(id) })
                .collect(),
            meta: g.meta().clone(),
        }
    }

    pub fn into_graph(self) -> Result<PlaneGraph> {
        if self.format != FORMAT {
            return Err(Error::Input(format!("unsupported format {:?}", self.format)));
        }
        let n = self.vertices.len();
        let mut rot = vec![None; n];
        let mut complete = vec![false; n];
        for rec in self.vertices {
            if rec.id >= n || rot[rec.id].is_some() {
                return Err(Error::Input(format!("vertex ids must be dense and unique, got {}", rec.id)));
            }
            complete[rec.id] = rec.complete;
            rot[rec.id] = Some(rec.rotation);
        }
        let rot: Vec<Vec<VertexId>> = rot.into_iter().map(|r| r.unwrap()).collect();
        PlaneGraph::build(&rot, &complete, self.meta)
    }
}

pub fn graph_to_json(g: &PlaneGraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<PlaneGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    file.into_graph()
}

/// A face given by id or by its vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FaceRef {
    Id(FaceId),
    Cycle(Vec<VertexId>),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SubgraphFile {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    #[serde(default)]
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default)]
    pub faces: Vec<FaceRef>,
    /// Close the vertex set to the induced subgraph instead of reading edges and faces.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub induced: bool,
}

impl SubgraphFile {
    pub fn from_subgraph(g: &PlaneGraph, s: &Subgraph) -> Self {
        SubgraphFile {
            vertices: s.vertices.iter().copied().collect(),
            edges: s
                .edges
                .iter()
                .map(|&e| {
                    let (a, b) = g.edge_endpoints(e);
                    [a, b]
                })
                .collect(),
            faces: s.faces.iter().map(|&f| FaceRef::Id(f)).collect(),
            induced: false,
        }
    }

    pub fn resolve(&self, g: &PlaneGraph) -> Result<Subgraph> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n_vertices()) {
            return Err(Error::Input(format!("unknown vertex {v}")));
        }
        if self.induced {
            return Subgraph::induced(g, self.vertices.iter().copied());
        }
        let mut edges = Vec::new();
        for &[a, b] in &self.edges {
            if a >= g.n_vertices() || b >= g.n_vertices() {
                return Err(Error::Input(format!("unknown edge {a}-{b}")));
            }
            edges.push(g.edge_between(a, b).ok_or(Error::NotAdjacent(a, b))?);
        }
        let mut faces = Vec::new();
        for f in &self.faces {
            faces.push(match f {
                FaceRef::Id(id) => *id,
                FaceRef::Cycle(cyc) => find_face(g, cyc)?,
            });
        }
        Subgraph::new(g, self.vertices.iter().copied(), edges, faces)
    }
}

/// The face whose boundary is `cycle`, read in either direction.
pub fn find_face(g: &PlaneGraph, cycle: &[VertexId]) -> Result<FaceId> {
    let bad = || Error::Input(format!("no face with vertex cycle {cycle:?}"));
    let &first = cycle.first().ok_or_else(bad)?;
    if first >= g.n_vertices() {
        return Err(bad());
    }
    let mut rev: Vec<VertexId> = cycle.to_vec();
    rev.reverse();
    for f in g.faces_at(first) {
        if g.is_outer(f) {
            continue;
        }
        let vs: Vec<VertexId> = g.face_vertices(f).collect();
        if vs.len() != cycle.len() {
            continue;
        }
        let same = |c: &[VertexId]| (0..vs.len()).any(|k| (0..vs.len()).all(|i| vs[(i + k) % vs.len()] == c[i]));
        if same(cycle) || same(&rev) {
            return Ok(f);
        }
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::regular_patch;

    #[test]
    fn roundtrip_keeps_ids() {
        let g = regular_patch(5, 4, 3).unwrap();
        let text = graph_to_json(&g);
        let h = graph_from_json(&text).unwrap();
        assert_eq!(g.rotation_lists(), h.rotation_lists());
        assert_eq!(g.complete_flags(), h.complete_flags());
        assert_eq!(g.meta(), h.meta());
        assert_eq!(text, graph_to_json(&h));
    }

    #[test]
    fn subgraph_file_by_cycle() {
        let g = regular_patch(4, 4, 3).unwrap();
        let f = g.real_faces().find(|&f| g.face_vertices(f).all(|v| g.is_complete(v))).unwrap();
        let cyc: Vec<_> = g.face_vertices(f).collect();
        let file = SubgraphFile {
            vertices: cyc.clone(),
            edges: (0..4).map(|i| [cyc[i], cyc[(i + 1) % 4]]).collect(),
            faces: vec![FaceRef::Cycle(cyc.iter().rev().copied().collect())],
            induced: false,
        };
        let s = file.resolve(&g).unwrap();
        assert_eq!(s, Subgraph::face_graph(&g, [f]));
        let text = serde_json::to_string(&SubgraphFile::from_subgraph(&g, &s)).unwrap();
        let back: SubgraphFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.resolve(&g).unwrap(), s);
    }
}
