//! Finite triangulations against puffed balls, and the vertex-isoperimetric
//! bound for triangulations with large vertex degrees.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::puffed::PuffedSequence;
use crate::error::{Error, Result};
use crate::generators::{degree_audit, perturbed_patch, PatchSpec};
use crate::graph::ops::{edge_and_vertex_boundaries, face_closure};
use crate::graph::walk::boundary_walk;
use crate::graph::{FaceId, GraphMeta, PlaneGraph, Subgraph, VertexId};
use crate::isoperimetry::growth_rate;
use crate::scalar::ExactScalar;
use crate::surd::QuadSurd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransferMode {
    /// Same vertex count, boundary no longer.
    T4,
    /// Same boundary length, at least as many vertices.
    T3,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub mode: TransferMode,
    pub p: u32,
    /// |V(T)|
    pub t_vertices: usize,
    /// |bT|
    pub t_boundary: usize,
    /// |V(bT)|
    pub t_boundary_vertices: usize,
    /// Index m of the puffed ball returned.
    pub n: usize,
    /// |b𝓟_m|
    pub puffed_boundary: usize,
    pub holds: bool,
    #[serde(skip)]
    pub host: PlaneGraph,
    pub witness: Subgraph,
}

/// Checks that `t` is a triangulated disk whose interior vertices (the complete
/// ones) have degree ≥ p; returns (|V|, |bT|, |V(bT)|).
fn triangulation_shape(t: &PlaneGraph, p: u32) -> Result<(usize, usize, usize)> {
    for f in t.real_faces() {
        if t.face_degree(f) != 3 {
            return Err(Error::NotTriangulation(f, t.face_degree(f)));
        }
    }
    let audit = degree_audit(t, (p, u32::MAX), (3, 3));
    if !audit.is_empty() {
        return Err(Error::DegreeAuditFailed(audit.join("; ")));
    }
    let outer = t.outer_face().ok_or_else(|| Error::Input("triangulation has no boundary".into()))?;
    let on_boundary: BTreeSet<VertexId> = t.face_vertices(outer).collect();
    Ok((t.n_vertices(), t.face_degree(outer), on_boundary.len()))
}

/// A puffed ball in the p-regular triangulation matching `t` by vertex count
/// (T4) or by boundary length (T3), with the inequality checked.
pub fn transfer_triangulation(t: &PlaneGraph, p: u32, mode: TransferMode) -> Result<TransferReport> {
    if p < 6 {
        return Err(Error::Input(format!("p = {p}: triangulations here need vertex degree at least 6")));
    }
    let (nv, len, nbv) = triangulation_shape(t, p)?;
    let (seq, n) = match mode {
        TransferMode::T4 => (PuffedSequence::new(p, nv)?, nv),
        TransferMode::T3 => {
            // Boundary lengths grow by at most one per step after the first,
            // so the last index with |b𝓟_m| = |bT| exists once we overshoot.
            let mut size = (2 * nv).max(16);
            loop {
                let seq = PuffedSequence::new(p, size)?;
                if seq.boundary_length(seq.len()) > len {
                    let m = seq.boundary_lengths().iter().rposition(|&b| b == len).map(|i| i + 1);
                    let m = m.ok_or_else(|| Error::Growth(format!("no puffed ball has boundary {len}")))?;
                    break (seq, m);
                }
                size *= 2;
            }
        }
    };
    let b = seq.boundary_length(n);
    let holds = match mode {
        TransferMode::T4 => b <= nbv,
        TransferMode::T3 => b == len && n >= nv,
    };
    let witness = seq.ball(n)?;
    Ok(TransferReport {
        mode,
        p,
        t_vertices: nv,
        t_boundary: len,
        t_boundary_vertices: nbv,
        n,
        puffed_boundary: b,
        holds,
        host: seq.host().clone(),
        witness,
    })
}

/// The face graph `s` as a standalone plane graph; vertices are renumbered in
/// increasing order and those with all their faces in `s` are complete.
pub fn extract_disk(g: &PlaneGraph, s: &Subgraph) -> Result<PlaneGraph> {
    s.require_safe(g)?;
    let index: BTreeMap<VertexId, usize> = s.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut rot = Vec::with_capacity(index.len());
    let mut complete = Vec::with_capacity(index.len());
    for &v in &s.vertices {
        rot.push(g.rotation(v).iter().filter(|&&d| s.edges.contains(&(d / 2))).map(|&d| index[&g.target(d)]).collect());
        complete.push(g.faces_at(v).all(|f| s.faces.contains(&f)));
    }
    let meta = GraphMeta { kind: Some("disk".into()), ..GraphMeta::default() };
    PlaneGraph::build(&rot, &complete, meta)
}

/// A seeded triangulated disk with interior degrees in [p, p+1]: random faces
/// of a perturbed patch grown from a face at a complete vertex while the
/// boundary stays a simple cycle.
pub fn random_triangulation(p: u32, seed: u64) -> Result<PlaneGraph> {
    let height = if p <= 6 { 5 } else { 3 };
    let host = perturbed_patch(&PatchSpec::perturbed((p, p + 1), (3, 3), height, seed))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let usable = |f: FaceId| host.is_real_face(f) && host.face_vertices(f).all(|v| host.is_complete(v));
    let start = host.complete_vertices().next().ok_or_else(|| Error::RegionTooSmall("no complete vertex".into()))?;
    let first = host.faces_at(start).next().unwrap();
    let target = rng.gen_range(1..=40usize);
    let mut faces = BTreeSet::from([first]);
    let mut stuck = 0;
    while faces.len() < target && stuck < 50 {
        let mut frontier: Vec<FaceId> = faces
            .iter()
            .flat_map(|&f| host.face_darts(f).iter().map(|&d| host.face_of(host.twin(d))).collect::<Vec<_>>())
            .filter(|f| usable(*f) && !faces.contains(f))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        let Some(&f) = frontier.choose(&mut rng) else { break };
        faces.insert(f);
        let s = Subgraph::face_graph(&host, faces.iter().copied());
        if boundary_walk(&host, &s)?.is_simple_cycle() {
            stuck = 0;
        } else {
            faces.remove(&f);
            stuck += 1;
        }
    }
    let s = Subgraph::face_graph(&host, faces);
    extract_disk(&host, &s)
}

#[derive(Clone, Debug, Serialize)]
pub struct J1Row {
    pub height: usize,
    pub vertices: u64,
    pub outer_boundary: u64,
    pub ratio: ExactScalar,
    /// Read off the patch rather than extended by the layer equality.
    pub measured: bool,
    pub above_bound: bool,
    /// (ratio − bound)/bound, when the bound is positive.
    pub relative_gap: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthCheck {
    /// Average degree over the largest safe ball.
    pub average_degree: ExactScalar,
    pub estimate: f64,
    /// ln(((c−4) + √((c−2)(c−6)))/2), for c ≥ 6.
    pub bound: Option<f64>,
    /// estimate ≥ (1 − GROWTH_TOLERANCE)·bound.
    pub holds: Option<bool>,
}

pub const GROWTH_TOLERANCE: f64 = 0.1;

#[derive(Clone, Debug, Serialize)]
pub struct J1Report {
    pub p: u32,
    pub bound: QuadSurd,
    pub bound_approx: f64,
    pub rows: Vec<J1Row>,
    /// The layer equality s_{N+1} = s_N + (p−6)|V(B_N)| + 6 on every measured height.
    pub layer_equality: bool,
    pub growth: Option<GrowthCheck>,
    pub pass: bool,
}

/// ((p−6) + √((p−2)(p−6)))/2.
pub fn j1_bound(p: u32) -> QuadSurd {
    let p = p as i64;
    QuadSurd::new(ExactScalar::ratio(p - 6, 2), ExactScalar::ratio(1, 2), BigInt::from((p - 2) * (p - 6)))
}

/// j₁ ratios |d₁𝓑_N| / |V(𝓑_N)| of quasi-balls around vertex 0 for N ≤ height.
///
/// Heights beyond the patch's safe region are filled in with the layer
/// equality, which holds exactly in the p-regular triangulation and is checked
/// on every measured height first; other hosts report measured rows only.
pub fn triangulation_j1_bounds(g: &PlaneGraph, p: u32, height: usize) -> Result<J1Report> {
    if p < 6 {
        return Err(Error::Input(format!("p = {p}: triangulations here need vertex degree at least 6")));
    }
    let audit = degree_audit(g, (p, u32::MAX), (3, 3));
    if !audit.is_empty() {
        return Err(Error::DegreeAuditFailed(audit.join("; ")));
    }
    let bound = j1_bound(p);
    let bound_approx = bound.to_f64();
    let mut rows = Vec::new();
    // (|V(B_N)|, |V(bB_N)|) for measured N ≥ 1
    let mut layers: Vec<(u64, u64)> = Vec::new();
    let mut degree_sum = (0u64, 0u64);
    let mut cur = Subgraph::vertex(g, 0);
    for h in 1..=height {
        cur = match face_closure(g, &cur) {
            Ok(next) => next,
            Err(Error::UnsafeSubgraph(_)) => break,
            Err(e) => return Err(e),
        };
        let bd = match edge_and_vertex_boundaries(g, &cur) {
            Ok(b) => b,
            Err(Error::UnsafeSubgraph(_)) => break,
            Err(e) => return Err(e),
        };
        let nv = cur.vertices.len() as u64;
        let ring = boundary_walk(g, &cur)?.vertex_set.len() as u64;
        degree_sum = (cur.vertices.iter().map(|&v| g.degree(v) as u64).sum(), nv);
        layers.push((nv, ring));
        rows.push(row(h, nv, bd.outer_vertex_boundary.len() as u64, true, &bound, bound_approx));
    }
    let regular = g.meta().kind.as_deref() == Some("regular") && g.meta().p == Some(p);
    let step = |v: u64, s: u64| s + (p as u64 - 6) * v + 6;
    let mut layer_equality = layers.windows(2).all(|w| w[1].1 == step(w[0].0, w[0].1));
    // In a triangulation d₁𝓑_N is the next sphere.
    layer_equality &= rows.iter().zip(layers.iter().skip(1)).all(|(r, l)| r.outer_boundary == l.1);
    if regular && layer_equality {
        if let Some(&(mut v, mut s)) = layers.last() {
            for h in layers.len() + 1..=height {
                s = step(v, s);
                v += s;
                let next = step(v, s);
                rows.push(row(h, v, next, false, &bound, bound_approx));
            }
        }
    }
    let growth = match g.safe_height() {
        Some(n) if n >= 2 && degree_sum.1 > 0 => {
            let est = growth_rate(g, 0, n)?;
            let c = ExactScalar::ratio(degree_sum.0 as i64, degree_sum.1 as i64);
            let cf = c.to_f64();
            let bound = (cf >= 6.0).then(|| (((cf - 4.0) + ((cf - 2.0) * (cf - 6.0)).sqrt()) / 2.0).ln());
            let holds = bound.map(|b| est.mu >= (1.0 - GROWTH_TOLERANCE) * b);
            Some(GrowthCheck { average_degree: c, estimate: est.mu, bound, holds })
        }
        _ => None,
    };
    let pass = layer_equality && !rows.is_empty() && rows.iter().all(|r| r.above_bound);
    Ok(J1Report { p, bound, bound_approx, rows, layer_equality, growth, pass })
}

fn row(height: usize, vertices: u64, outer: u64, measured: bool, bound: &QuadSurd, approx: f64) -> J1Row {
    let ratio = ExactScalar::ratio(outer as i64, vertices as i64);
    let above_bound = bound.cmp_rational(&ratio) != Ordering::Greater;
    let relative_gap = (approx > 0.0).then(|| (ratio.to_f64() - approx) / approx);
    J1Row { height, vertices, outer_boundary: outer, ratio, measured, above_bound, relative_gap }
}
