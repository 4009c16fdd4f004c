//! Patch generators: regular tilings, platonic solids, randomised degree ranges
//! and straight-line drawings.

mod growth;
mod platonic;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphMeta, PlaneGraph, Subgraph, VertexId};
use growth::{Grower, Regular, Targets};

/// Hard cap on generated patch size.
pub const MAX_VERTICES: usize = 4_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Core {
    #[default]
    Face,
    Vertex,
}

impl Core {
    fn name(self) -> &'static str {
        match self {
            Core::Face => "face",
            Core::Vertex => "vertex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatchKind {
    Regular,
    Perturbed,
    Platonic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchSpec {
    pub p_min: u32,
    pub p_max: u32,
    pub q_min: u32,
    pub q_max: u32,
    pub height: usize,
    pub seed: u64,
    pub kind: PatchKind,
    #[serde(default)]
    pub core: Core,
}

impl PatchSpec {
    pub fn regular(p: u32, q: u32, height: usize) -> Self {
        PatchSpec { p_min: p, p_max: p, q_min: q, q_max: q, height, seed: 0, kind: PatchKind::Regular, core: Core::Face }
    }

    pub fn perturbed(p: (u32, u32), q: (u32, u32), height: usize, seed: u64) -> Self {
        PatchSpec {
            p_min: p.0,
            p_max: p.1,
            q_min: q.0,
            q_max: q.1,
            height,
            seed,
            kind: PatchKind::Perturbed,
            core: Core::Face,
        }
    }

    fn check(&self) -> Result<()> {
        if self.p_min < 3 || self.q_min < 3 {
            return Err(Error::DegreeTooSmall(self.p_min, self.q_min));
        }
        if self.p_min > self.p_max || self.q_min > self.q_max {
            return Err(Error::InfeasibleSpec("lower degree bound exceeds upper bound".into()));
        }
        Ok(())
    }
}

/// Builds the patch a spec describes.
pub fn build_patch(spec: &PatchSpec) -> Result<PlaneGraph> {
    spec.check()?;
    match spec.kind {
        PatchKind::Platonic => platonic(spec.p_min, spec.q_min),
        PatchKind::Regular => {
            if spec.p_min != spec.p_max || spec.q_min != spec.q_max {
                return Err(Error::InfeasibleSpec("a regular patch needs fixed degrees".into()));
            }
            regular_patch_with_core(spec.p_min, spec.q_min, spec.height, spec.core)
        }
        PatchKind::Perturbed => perturbed_patch(spec),
    }
}

fn is_spherical(p: u32, q: u32) -> bool {
    // 1/p + 1/q > 1/2
    2 * (p + q) > p * q
}

/// The (p,q)-regular patch grown `height` face-closure layers around a face.
/// Spherical parameters give the whole platonic solid.
pub fn regular_patch(p: u32, q: u32, height: usize) -> Result<PlaneGraph> {
    regular_patch_with_core(p, q, height, Core::Face)
}

pub fn regular_patch_with_core(p: u32, q: u32, height: usize, core: Core) -> Result<PlaneGraph> {
    if p < 3 || q < 3 {
        return Err(Error::DegreeTooSmall(p, q));
    }
    if is_spherical(p, q) {
        return platonic(p, q);
    }
    let mut grower = match core {
        Core::Face => Grower::face_core(q, MAX_VERTICES),
        Core::Vertex => Grower::vertex_core(MAX_VERTICES),
    };
    let mut t = Regular { p, q };
    for _ in 0..height {
        grower.grow(&mut t)?;
    }
    let (rot, complete) = grower.finish();
    let meta = GraphMeta {
        p: Some(p),
        q: Some(q),
        height: Some(height),
        kind: Some("regular".into()),
        core: Some(core.name().into()),
        ..GraphMeta::default()
    };
    PlaneGraph::build(&rot, &complete, meta)
}

/// One of the five platonic solids, by vertex degree `p` and face degree `q`.
pub fn platonic(p: u32, q: u32) -> Result<PlaneGraph> {
    let table = match (p, q) {
        (3, 3) => platonic::TETRAHEDRON,
        (3, 4) => platonic::CUBE,
        (4, 3) => platonic::OCTAHEDRON,
        (5, 3) => platonic::ICOSAHEDRON,
        (3, 5) => platonic::DODECAHEDRON,
        _ if p < 3 || q < 3 => return Err(Error::DegreeTooSmall(p, q)),
        _ => return Err(Error::InfeasibleSpec(format!("({p},{q}) is not a platonic solid"))),
    };
    let rot: Vec<Vec<VertexId>> = table.iter().map(|r| r.to_vec()).collect();
    let meta = GraphMeta { p: Some(p), q: Some(q), kind: Some("platonic".into()), ..GraphMeta::default() };
    PlaneGraph::build(&rot, &vec![true; rot.len()], meta)
}

/// Random degrees within the PatchSpec ranges.
struct Ranged {
    rng: ChaCha8Rng,
    p: (u32, u32),
    q: (u32, u32),
}

impl Targets for Ranged {
    fn vertex(&mut self, faces_at: u32) -> Result<u32> {
        // Triangles cannot span three ring vertices, so every ring vertex of a
        // triangulation needs at least one new edge.
        let slack = if self.q.1 == 3 { 2 } else { 1 };
        let lo = self.p.0.max(faces_at + slack);
        if lo > self.p.1 {
            return Err(Error::Growth(format!("vertex with {faces_at} faces cannot stay within degree {}", self.p.1)));
        }
        Ok(self.rng.gen_range(lo..=self.p.1))
    }

    fn face(&mut self, run: u32) -> Result<u32> {
        let lo = self.q.0.max(run + 1);
        if lo > self.q.1 {
            return Err(Error::Growth(format!("face spanning {run} ring vertices exceeds degree {}", self.q.1)));
        }
        Ok(self.rng.gen_range(lo..=self.q.1))
    }
}

const PERTURB_ATTEMPTS: u64 = 64;

/// A patch whose complete vertices and faces have degrees within the PatchSpec
/// ranges, grown layer by layer with seeded random degrees and then audited.
pub fn perturbed_patch(spec: &PatchSpec) -> Result<PlaneGraph> {
    spec.check()?;
    if is_spherical(spec.p_min, spec.q_min) {
        return Err(Error::InfeasibleSpec(format!(
            "1/{} + 1/{} > 1/2 allows positive curvature",
            spec.p_min, spec.q_min
        )));
    }
    if spec.p_min == spec.p_max && spec.q_min == spec.q_max {
        let mut g = regular_patch_with_core(spec.p_min, spec.q_min, spec.height, spec.core)?;
        g.set_meta(GraphMeta { seed: spec.seed, ..g.meta().clone() });
        return Ok(g);
    }
    let mut last = String::new();
    for attempt in 0..PERTURB_ATTEMPTS {
        let rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_mul(PERTURB_ATTEMPTS).wrapping_add(attempt));
        let mut t = Ranged { rng, p: (spec.p_min, spec.p_max), q: (spec.q_min, spec.q_max) };
        let first_face = t.face(1)?;
        let mut grower = match spec.core {
            Core::Face => Grower::face_core(first_face, MAX_VERTICES),
            Core::Vertex => Grower::vertex_core(MAX_VERTICES),
        };
        let grown = (0..spec.height).try_for_each(|_| grower.grow(&mut t));
        if let Err(e) = grown {
            last = e.to_string();
            continue;
        }
        let (rot, complete) = grower.finish();
        let meta = GraphMeta {
            p: Some(spec.p_min),
            q: Some(spec.q_min),
            p_max: Some(spec.p_max),
            q_max: Some(spec.q_max),
            height: Some(spec.height),
            seed: spec.seed,
            kind: Some("perturbed".into()),
            core: Some(spec.core.name().into()),
            ..GraphMeta::default()
        };
        let g = match PlaneGraph::build(&rot, &complete, meta) {
            Ok(g) => g,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        let mut problems = g.audit_tessellation();
        problems.extend(degree_audit(&g, (spec.p_min, spec.p_max), (spec.q_min, spec.q_max)));
        if problems.is_empty() {
            return Ok(g);
        }
        last = problems.join("; ");
    }
    Err(Error::InfeasibleSpec(format!("no valid patch after {PERTURB_ATTEMPTS} attempts: {last}")))
}

/// Degree violations on the complete region: vertex degrees outside `p`,
/// degrees of faces touching a complete vertex outside `q`.
pub fn degree_audit(g: &PlaneGraph, p: (u32, u32), q: (u32, u32)) -> Vec<String> {
    let mut out = Vec::new();
    for v in g.complete_vertices() {
        let d = g.degree(v) as u32;
        if d < p.0 || d > p.1 {
            out.push(format!("vertex {v} has degree {d}"));
        }
        for f in g.faces_at(v) {
            let k = g.face_degree(f) as u32;
            if k < q.0 || k > q.1 {
                out.push(format!("face {f} has degree {k}"));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A plane graph from a straight-line drawing: rotations are read off the
/// angles around each vertex.
pub fn from_drawing(coords: &[(f64, f64)], edges: &[(VertexId, VertexId)], complete: &[bool]) -> Result<PlaneGraph> {
    let n = coords.len();
    let mut nbrs: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::Input(format!("edge {a}-{b} names an unknown vertex")));
        }
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    for (v, list) in nbrs.iter_mut().enumerate() {
        let (x, y) = coords[v];
        list.sort_by(|&a, &b| {
            let ta = (coords[a].1 - y).atan2(coords[a].0 - x);
            let tb = (coords[b].1 - y).atan2(coords[b].0 - x);
            ta.total_cmp(&tb)
        });
    }
    PlaneGraph::build(&nbrs, complete, GraphMeta { kind: Some("drawing".into()), ..GraphMeta::default() })
}

/// A random subgraph on complete vertices: one to three connected chunks of
/// random sizes, each induced edge kept with probability 0.85 and each face
/// whose edges survived kept with probability 0.75. The result may be
/// disconnected, non-induced or have holes.
pub fn random_safe_subgraph<R: Rng>(g: &PlaneGraph, rng: &mut R, max_vertices: usize) -> Result<Subgraph> {
    let complete: Vec<VertexId> = g.complete_vertices().collect();
    if complete.is_empty() || max_vertices == 0 {
        return Err(Error::RegionTooSmall("no complete vertex".into()));
    }
    let mut vertices = BTreeSet::new();
    for _ in 0..rng.gen_range(1..=3) {
        let target = rng.gen_range(1..=max_vertices);
        let start = complete[rng.gen_range(0..complete.len())];
        let mut chunk = vec![start];
        vertices.insert(start);
        for _ in 1..target {
            let frontier: Vec<VertexId> = chunk
                .iter()
                .flat_map(|&v| g.neighbors(v).collect::<Vec<_>>())
                .filter(|&w| g.is_complete(w) && !vertices.contains(&w))
                .collect();
            if frontier.is_empty() {
                break;
            }
            let w = frontier[rng.gen_range(0..frontier.len())];
            vertices.insert(w);
            chunk.push(w);
        }
    }
    let mut edges = BTreeSet::new();
    for &v in &vertices {
        for &d in g.rotation(v) {
            if d % 2 == 0 && vertices.contains(&g.target(d)) && rng.gen_bool(0.85) {
                edges.insert(d / 2);
            }
        }
    }
    let mut faces = BTreeSet::new();
    for &v in &vertices {
        for f in g.faces_at(v) {
            if !faces.contains(&f) && g.face_edges(f).all(|e| edges.contains(&e)) && rng.gen_bool(0.75) {
                faces.insert(f);
            }
        }
    }
    Subgraph::new(g, vertices, edges, faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::kappa;
    use crate::scalar::ExactScalar;

    #[test]
    fn platonic_counts() {
        for (p, q, v, f) in [(3, 3, 4, 4), (3, 4, 8, 6), (4, 3, 6, 8), (5, 3, 12, 20), (3, 5, 20, 12)] {
            let g = platonic(p, q).unwrap();
            assert_eq!(g.n_vertices(), v);
            assert_eq!(g.n_faces(), f);
            assert!(g.real_faces().all(|x| g.face_degree(x) == q as usize));
            assert!(g.audit_tessellation().is_empty());
        }
    }

    #[test]
    fn spherical_parameters_give_solids() {
        assert_eq!(regular_patch(3, 3, 7).unwrap().n_vertices(), 4);
    }

    #[test]
    fn regular_patches_are_regular() {
        for (p, q) in [(6, 3), (4, 4), (3, 6), (7, 3), (3, 7), (4, 5), (5, 4)] {
            let g = regular_patch(p, q, 3).unwrap();
            assert!(g.audit_tessellation().is_empty(), "({p},{q})");
            assert!(degree_audit(&g, (p, p), (q, q)).is_empty(), "({p},{q})");
            assert!(g.complete_vertices().count() > 0);
        }
    }

    #[test]
    fn face_zero_is_the_core() {
        let g = regular_patch(5, 4, 2).unwrap();
        assert_eq!(g.face_degree(0), 4);
        assert_eq!(g.face_vertices(0).take(2).collect::<Vec<_>>(), vec![0, 1]);
        assert!(g.face_vertices(0).all(|v| g.bfs_distances(v)[0] <= Some(1) || g.is_complete(v)));
    }

    #[test]
    fn euclidean_curvature_vanishes() {
        let g = regular_patch(6, 3, 2).unwrap();
        assert_eq!(kappa(&g, g.complete_vertices()).unwrap(), ExactScalar::zero());
    }

    #[test]
    fn vertex_core_layers() {
        let g = regular_patch_with_core(7, 3, 3, Core::Vertex).unwrap();
        let d = g.bfs_distances(0);
        let count = |k| d.iter().filter(|&&x| x == Some(k)).count();
        assert_eq!((count(1), count(2), count(3)), (7, 21, 56));
    }

    #[test]
    fn deterministic_output() {
        let a = regular_patch(7, 3, 3).unwrap();
        let b = regular_patch(7, 3, 3).unwrap();
        assert_eq!(a.rotation_lists(), b.rotation_lists());
    }

    #[test]
    fn perturbed_audit() {
        let spec = PatchSpec::perturbed((7, 9), (3, 3), 3, 1);
        let g = perturbed_patch(&spec).unwrap();
        assert!(degree_audit(&g, (7, 9), (3, 3)).is_empty());
        assert!(g.complete_vertices().any(|v| g.degree(v) != 7) || g.complete_vertices().count() < 3);
        let again = perturbed_patch(&spec).unwrap();
        assert_eq!(g.rotation_lists(), again.rotation_lists());
    }

    #[test]
    fn perturbed_fixed_ranges_match_regular() {
        let spec = PatchSpec::perturbed((5, 5), (4, 4), 2, 9);
        let g = perturbed_patch(&spec).unwrap();
        assert_eq!(g.rotation_lists(), regular_patch(5, 4, 2).unwrap().rotation_lists());
    }

    #[test]
    fn perturbed_rejects_spherical() {
        let spec = PatchSpec::perturbed((3, 4), (3, 4), 2, 0);
        assert!(matches!(perturbed_patch(&spec), Err(Error::InfeasibleSpec(_))));
    }

    #[test]
    fn mixed_faces_and_vertices() {
        let spec = PatchSpec::perturbed((4, 5), (4, 6), 3, 4);
        let g = perturbed_patch(&spec).unwrap();
        assert!(g.audit_tessellation().is_empty());
        assert!(degree_audit(&g, (4, 5), (4, 6)).is_empty());
    }

    #[test]
    fn drawing_square() {
        let coords = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let g = from_drawing(&coords, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[false; 4]).unwrap();
        assert_eq!(g.n_faces(), 2);
    }
}
