//! Combinatorial curvature, left turns and the Gauss-Bonnet identities.

mod audit;

pub use audit::{exhaustive_gauss_bonnet, sampled_gauss_bonnet, GbAudit};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ops::{euler_characteristics, interior};
use crate::graph::walk::{boundary_walk, inner_boundary_walk, outer_layer_walk};
use crate::graph::{BoundaryWalk, DartId, FaceId, PlaneGraph, Subgraph, VertexId, WalkKind};
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Outer,
    Inner,
}

/// 1/2 − 1/deg f.
fn face_excess(g: &PlaneGraph, f: FaceId) -> ExactScalar {
    let k = g.face_degree(f) as i64;
    ExactScalar::ratio(k - 2, 2 * k)
}

/// κ(v) = 1 − deg v / 2 + Σ 1/deg f.
pub fn kappa_vertex(g: &PlaneGraph, v: VertexId) -> Result<ExactScalar> {
    if !g.is_complete(v) {
        return Err(Error::UnsafeVertex(v));
    }
    let mut k = ExactScalar::ratio(2 - g.degree(v) as i64, 2);
    for f in g.faces_at(v) {
        k += ExactScalar::ratio(1, g.face_degree(f) as i64);
    }
    Ok(k)
}

/// Σ κ(v) over `vs`.
pub fn kappa(g: &PlaneGraph, vs: impl IntoIterator<Item = VertexId>) -> Result<ExactScalar> {
    let mut total = ExactScalar::zero();
    for v in vs {
        total += kappa_vertex(g, v)?;
    }
    Ok(total)
}

/// Faces swept counterclockwise from `from` up to (not including) `to`; the
/// whole rotation when the two darts coincide.
fn sector_faces(g: &PlaneGraph, from: DartId, to: DartId) -> Vec<FaceId> {
    let mut out = Vec::new();
    let mut d = from;
    loop {
        out.push(g.face_of(d));
        d = g.rot_next(d);
        if d == to {
            break;
        }
    }
    out
}

fn corner_from_darts(g: &PlaneGraph, back: DartId, out: DartId, side: Side) -> (ExactScalar, Vec<FaceId>) {
    let faces = match side {
        Side::Outer => sector_faces(g, back, out),
        Side::Inner => sector_faces(g, out, back),
    };
    let mut sum = ExactScalar::zero();
    for &f in &faces {
        sum += face_excess(g, f);
    }
    let half = ExactScalar::ratio(1, 2);
    let turn = match side {
        Side::Outer => sum - half,
        Side::Inner => half - sum,
    };
    (turn, faces)
}

/// Left turn at the corner (v; prev, next) and the number of faces on the chosen side.
pub fn corner_turn(
    g: &PlaneGraph,
    v: VertexId,
    prev: VertexId,
    next: VertexId,
    side: Side,
) -> Result<(ExactScalar, usize)> {
    let back = g.dart_between(v, prev).ok_or(Error::NotAdjacent(v, prev))?;
    let out = g.dart_between(v, next).ok_or(Error::NotAdjacent(v, next))?;
    if !g.is_complete(v) {
        return Err(Error::UnsafeVertex(v));
    }
    let (t, faces) = corner_from_darts(g, back, out, side);
    Ok((t, faces.len()))
}

#[derive(Clone, Debug, Serialize)]
pub struct CornerTurn {
    pub vertex: VertexId,
    pub prev: Option<VertexId>,
    pub next: Option<VertexId>,
    pub faces: Vec<FaceId>,
    pub turn: ExactScalar,
    /// Edges strictly inside the corner sector: ℰ for outer, 𝔢 for inner.
    pub edges: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleTurn {
    pub total: ExactScalar,
    pub edge_count: usize,
    pub corners: Vec<CornerTurn>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TurnReport {
    pub side: Side,
    pub cycles: Vec<CycleTurn>,
    pub total: ExactScalar,
    pub edge_count: usize,
}

/// τ_o or τ_i of a whole walk, with per-corner detail.
pub fn walk_turn(g: &PlaneGraph, w: &BoundaryWalk, side: Side) -> Result<TurnReport> {
    w.check_host(g)?;
    let expected = match w.kind {
        WalkKind::Outer => Side::Outer,
        WalkKind::Inner | WalkKind::Layer => Side::Inner,
    };
    if side != expected {
        return Err(Error::Input(format!("side {side:?} does not match a {:?} walk", w.kind)));
    }
    let mut cycles = Vec::with_capacity(w.cycles.len());
    let mut total = ExactScalar::zero();
    let mut edge_count = 0;
    for c in &w.cycles {
        let mut ct = CycleTurn { total: ExactScalar::zero(), edge_count: 0, corners: Vec::new() };
        if c.is_empty() {
            let v = c.vertices[0];
            let k = kappa_vertex(g, v)?;
            let turn = match side {
                Side::Outer => ExactScalar::one() - k,
                Side::Inner => k - ExactScalar::one(),
            };
            ct.edge_count = g.degree(v);
            ct.total = turn.clone();
            ct.corners.push(CornerTurn { vertex: v, prev: None, next: None, faces: g.faces_at(v).collect(), turn, edges: g.degree(v) });
        } else {
            let n = c.len();
            for k in 0..n {
                let (v, back, out) = c.corner(g, k);
                if !g.is_complete(v) {
                    return Err(Error::UnsafeVertex(v));
                }
                let (turn, faces) = corner_from_darts(g, back, out, side);
                let edges = faces.len() - 1;
                ct.total += &turn;
                ct.edge_count += edges;
                ct.corners.push(CornerTurn {
                    vertex: v,
                    prev: Some(c.vertices[(k + n - 1) % n]),
                    next: Some(c.vertices[(k + 1) % n]),
                    faces,
                    turn,
                    edges,
                });
            }
        }
        total += &ct.total;
        edge_count += ct.edge_count;
        cycles.push(ct);
    }
    Ok(TurnReport { side, cycles, total, edge_count })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GbVariant {
    /// κ(S) + τ_o(bS) = χ(S)
    I,
    /// κ(S⁻) + τ_i(b_iS) = χ(D(S)°)
    II,
    /// κ(S) + τ_i(b₁) = 2 − m′
    Complement,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaussBonnetReport {
    pub variant: GbVariant,
    pub kappa: ExactScalar,
    pub turn: TurnReport,
    pub lhs: ExactScalar,
    pub rhs: ExactScalar,
    pub pass: bool,
}

pub fn gauss_bonnet_check(g: &PlaneGraph, s: &Subgraph, variant: GbVariant) -> Result<GaussBonnetReport> {
    let (kappa_part, turn, rhs) = match variant {
        GbVariant::I => {
            let w = boundary_walk(g, s)?;
            let turn = walk_turn(g, &w, Side::Outer)?;
            let chi = s.vertices.len() as i64 - s.edges.len() as i64 + s.faces.len() as i64;
            (kappa(g, s.vertices.iter().copied())?, turn, ExactScalar::from_int(chi))
        }
        GbVariant::II => {
            let w = inner_boundary_walk(g, s)?;
            let turn = walk_turn(g, &w, Side::Inner)?;
            let minus = interior(g, s)?;
            let (_, chi_int) = euler_characteristics(g, s)?;
            (kappa(g, minus.vertices.iter().copied())?, turn, ExactScalar::from_int(chi_int))
        }
        GbVariant::Complement => {
            let w = outer_layer_walk(g, s)?;
            let turn = walk_turn(g, &w, Side::Inner)?;
            let m = w.cycles.len() as i64;
            (kappa(g, s.vertices.iter().copied())?, turn, ExactScalar::from_int(2 - m))
        }
    };
    let lhs = &kappa_part + &turn.total;
    let pass = lhs == rhs;
    Ok(GaussBonnetReport { variant, kappa: kappa_part, turn, lhs, rhs, pass })
}

/// (𝔢(S), ℰ(S)): inward edges along b_iS and outward edges along bS.
pub fn edge_counts(g: &PlaneGraph, s: &Subgraph) -> Result<(usize, usize)> {
    let inner = walk_turn(g, &inner_boundary_walk(g, s)?, Side::Inner)?;
    let outer = walk_turn(g, &boundary_walk(g, s)?, Side::Outer)?;
    Ok((inner.edge_count, outer.edge_count))
}
