use super::{FaceId, GraphMeta, PlaneGraph};
use crate::error::{Error, Result};

/// The dual graph. On a patch only faces whose vertices are all complete
/// become dual vertices; a dual vertex is complete when every vertex of its face
/// has all of its faces kept, so that all its dual faces exist. Dual vertex `i`
/// is the `i`-th kept face in id order.
pub fn dual(g: &PlaneGraph) -> Result<(PlaneGraph, Vec<FaceId>)> {
    let kept: Vec<FaceId> = g
        .real_faces()
        .filter(|&f| g.face_vertices(f).all(|v| g.is_complete(v)))
        .collect();
    if kept.is_empty() {
        return Err(Error::EmptyDual);
    }
    let index = |f: FaceId| kept.binary_search(&f).ok();
    let mut rotations = Vec::with_capacity(kept.len());
    let mut complete = Vec::with_capacity(kept.len());
    for &f in &kept {
        let rot: Vec<usize> = g.face_darts(f).iter().filter_map(|&d| index(g.face_of(g.twin(d)))).collect();
        let full = g.face_vertices(f).all(|v| g.faces_at(v).all(|h| index(h).is_some()));
        rotations.push(rot);
        complete.push(full);
    }
    let m = g.meta();
    let meta = GraphMeta {
        p: m.q,
        q: m.p,
        height: m.height,
        seed: m.seed,
        kind: Some("dual".into()),
        ..GraphMeta::default()
    };
    Ok((PlaneGraph::build(&rotations, &complete, meta)?, kept))
}
