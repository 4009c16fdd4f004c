//! Isoperimetric ratios, the sharp constant Φ, exhaustive minima and growth.

mod bounds;
mod enumerate;

pub use bounds::{verify_bounds, BoundsReport, LowerCheck, UpperWitness};
pub use enumerate::{
    brute_force_min_ratio, brute_force_min_ratio_with, enumerate_connected, MinRatio, Roots, SetStats,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ops::edge_and_vertex_boundaries;
use crate::graph::walk::boundary_walk;
use crate::graph::{PlaneGraph, Subgraph, VertexId};
use crate::scalar::ExactScalar;
use crate::surd::QuadSurd;

/// √square, kept exactly as its square.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiValue {
    pub p: u32,
    pub q: u32,
    pub square: ExactScalar,
    pub approx: f64,
}

/// Φ(p,q) = (p−2)·√(1 − 4/((p−2)(q−2))).
pub fn phi(p: u32, q: u32) -> Result<PhiValue> {
    if p < 3 || q < 3 {
        return Err(Error::DegreeTooSmall(p, q));
    }
    let (a, b) = (p as i64 - 2, q as i64 - 2);
    if a * b < 4 {
        return Err(Error::SphericalParameters(p, q));
    }
    // (a)²(1 − 4/(ab)) = a(ab − 4)/b
    let square = ExactScalar::ratio(a * (a * b - 4), b);
    let approx = square.to_f64().sqrt();
    Ok(PhiValue { p, q, square, approx })
}

impl PhiValue {
    /// The same bound divided by a positive integer.
    pub fn over(&self, k: u32) -> PhiValue {
        let k2 = ExactScalar::from_int(k as i64 * k as i64);
        PhiValue { p: self.p, q: self.q, square: &self.square / &k2, approx: self.approx / k as f64 }
    }

    pub fn as_surd(&self) -> QuadSurd {
        QuadSurd::sqrt_of(&self.square)
    }

    /// r ≥ √square for a rational r, exactly.
    pub fn le_ratio(&self, r: &ExactScalar) -> bool {
        r.signum() >= 0 && r * r >= self.square
    }

    /// r ≤ √square for a rational r, exactly.
    pub fn ge_ratio(&self, r: &ExactScalar) -> bool {
        r.signum() <= 0 || r * r <= self.square
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ratio {
    /// |∂S| / |V(S)|
    EdgeVertex,
    /// |bS| / |F(S)|
    FaceBoundary,
    /// |∂S| / Σ deg v
    EdgeSigma,
    /// |bS| / Σ deg f
    FaceSigma,
    /// |d₀S| / |V(S)|
    J0,
    /// |d₁S| / |V(S)|
    J1,
}

impl Ratio {
    pub const ALL: [Ratio; 6] =
        [Ratio::EdgeVertex, Ratio::FaceBoundary, Ratio::EdgeSigma, Ratio::FaceSigma, Ratio::J0, Ratio::J1];

    pub fn needs_faces(self) -> bool {
        matches!(self, Ratio::FaceBoundary | Ratio::FaceSigma)
    }

    pub fn name(self) -> &'static str {
        match self {
            Ratio::EdgeVertex => "edge-vertex",
            Ratio::FaceBoundary => "face-boundary",
            Ratio::EdgeSigma => "edge-sigma",
            Ratio::FaceSigma => "face-sigma",
            Ratio::J0 => "j0",
            Ratio::J1 => "j1",
        }
    }

    /// The lower bound a graph with degrees ≥ p and face degrees ≥ q satisfies.
    pub fn lower_bound(self, p: u32, q: u32) -> Option<PhiValue> {
        match self {
            Ratio::EdgeVertex => phi(p, q).ok(),
            Ratio::FaceBoundary => phi(q, p).ok(),
            Ratio::EdgeSigma => phi(p, q).ok().map(|x| x.over(p)),
            Ratio::FaceSigma => phi(q, p).ok().map(|x| x.over(q)),
            Ratio::J0 | Ratio::J1 => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoRatios {
    pub i_edge: ExactScalar,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_face: Option<ExactScalar>,
    pub i_edge_sigma: ExactScalar,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_face_sigma: Option<ExactScalar>,
    pub j0: ExactScalar,
    pub j1: ExactScalar,
}

impl IsoRatios {
    pub fn get(&self, r: Ratio) -> Option<&ExactScalar> {
        match r {
            Ratio::EdgeVertex => Some(&self.i_edge),
            Ratio::FaceBoundary => self.i_face.as_ref(),
            Ratio::EdgeSigma => Some(&self.i_edge_sigma),
            Ratio::FaceSigma => self.i_face_sigma.as_ref(),
            Ratio::J0 => Some(&self.j0),
            Ratio::J1 => Some(&self.j1),
        }
    }
}

fn frac(n: usize, d: usize) -> ExactScalar {
    ExactScalar::ratio(n as i64, d as i64)
}

pub fn subgraph_ratios(g: &PlaneGraph, s: &Subgraph) -> Result<IsoRatios> {
    let b = edge_and_vertex_boundaries(g, s)?;
    let walk = boundary_walk(g, s)?;
    let nv = s.vertices.len();
    let nf = s.faces.len();
    let face = |d: usize| (nf > 0).then(|| frac(walk.length, d));
    Ok(IsoRatios {
        i_edge: frac(b.edge_boundary.len(), nv),
        i_face: face(nf),
        i_edge_sigma: frac(b.edge_boundary.len(), s.degree_sum(g)),
        i_face_sigma: face(s.face_degree_sum(g)),
        j0: frac(b.inner_vertex_boundary.len(), nv),
        j1: frac(b.outer_vertex_boundary.len(), nv),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthEstimate {
    pub ball_sizes: Vec<usize>,
    pub log_ratios: Vec<f64>,
    pub mu: f64,
    /// Fit window start used for `mu`.
    pub window_start: usize,
}

/// Sizes of B_n(v0) for n ≤ n_max and an estimate of the exponential growth rate.
///
/// The estimate fits ln|B_n| = c + μn + k·ln n over the upper half of the
/// range, so that polynomial growth reads as μ ≈ 0 rather than as a slowly
/// decaying slope.
pub fn growth_rate(g: &PlaneGraph, v0: VertexId, n_max: usize) -> Result<GrowthEstimate> {
    let dist = g.bfs_distances(v0);
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = *d {
            if d < n_max && !g.is_complete(v) {
                return Err(Error::UnsafeSubgraph(v));
            }
        }
    }
    let mut ball_sizes = vec![0usize; n_max + 1];
    for d in dist.iter().flatten() {
        if *d <= n_max {
            ball_sizes[*d] += 1;
        }
    }
    for n in 1..=n_max {
        ball_sizes[n] += ball_sizes[n - 1];
    }
    let log_ratios: Vec<f64> = ball_sizes.windows(2).map(|w| (w[1] as f64 / w[0] as f64).ln()).collect();
    let window_start = (n_max / 2).max(1);
    let pts: Vec<(f64, f64)> =
        (window_start..=n_max).map(|n| (n as f64, (ball_sizes[n] as f64).ln())).collect();
    let mu = if pts.len() >= 4 {
        fit_exp_poly(&pts)
    } else {
        log_ratios.last().copied().unwrap_or(0.0)
    };
    Ok(GrowthEstimate { ball_sizes, log_ratios, mu: mu.max(0.0), window_start })
}

/// Least squares for y = c + μx + k·ln x; returns μ.
fn fit_exp_poly(pts: &[(f64, f64)]) -> f64 {
    let rows: Vec<[f64; 3]> = pts.iter().map(|&(x, _)| [1.0, x, x.ln()]).collect();
    let mut a = [[0.0f64; 3]; 3];
    let mut b = [0.0f64; 3];
    for (r, &(_, y)) in rows.iter().zip(pts) {
        for i in 0..3 {
            b[i] += r[i] * y;
            for j in 0..3 {
                a[i][j] += r[i] * r[j];
            }
        }
    }
    // Cramer's rule on the 3×3 normal equations.
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(&a);
    let mut m = a;
    for i in 0..3 {
        m[i][1] = b[i];
    }
    det(&m) / d
}
