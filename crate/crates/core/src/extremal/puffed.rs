//! Puffed balls in the p-regular triangulation.
//!
//! 𝓟_1 is a vertex v₀, 𝓟_2..𝓟_{p+1} add the neighbours of v₀ in rotation
//! order, and afterwards each sphere S_{k+1} is filled counterclockwise,
//! starting at a vertex with two parents in S_k whose predecessor has one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{regular_patch_with_core, Core};
use crate::graph::walk::boundary_walk;
use crate::graph::{PlaneGraph, Subgraph, VertexId};

/// The fill order of a puffed-ball sequence and its boundary lengths.
#[derive(Clone, Debug)]
pub struct PuffedSequence {
    pub p: u32,
    host: PlaneGraph,
    order: Vec<VertexId>,
    /// Number of neighbours already in the ball when the vertex was added.
    parents: Vec<usize>,
    /// `boundary[n - 1] = |b𝓟_n|`.
    boundary: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PuffedBall {
    pub p: u32,
    pub n: usize,
    #[serde(skip)]
    pub host: PlaneGraph,
    pub ball: Subgraph,
    pub boundary_length: usize,
}

impl PuffedSequence {
    /// Fill order for at least `n_max` vertices.
    pub fn new(p: u32, n_max: usize) -> Result<Self> {
        if p < 6 {
            return Err(Error::Input(format!("p = {p}: triangulations here need vertex degree at least 6")));
        }
        let host = host_for(p, n_max.max(1))?;
        let rings = ccw_rings(&host, n_max)?;
        let mut order = Vec::with_capacity(n_max);
        for ring in &rings {
            order.extend_from_slice(ring);
        }
        order.truncate(n_max.max(1));
        let mut seq = PuffedSequence { p, host, order, parents: Vec::new(), boundary: Vec::new() };
        seq.count();
        Ok(seq)
    }

    /// |b𝓟_n| for every prefix, from |E| and the faces already closed:
    /// each edge is walked once per side whose face is not in the ball.
    fn count(&mut self) {
        let g = &self.host;
        let mut inside = vec![false; g.n_vertices()];
        let mut hits = vec![0usize; g.n_faces()];
        let (mut edges, mut face_sides) = (0usize, 0usize);
        for &w in &self.order {
            let parents = g.neighbors(w).filter(|&u| inside[u]).count();
            edges += parents;
            inside[w] = true;
            for f in g.faces_at(w) {
                hits[f] += 1;
                if hits[f] == g.face_degree(f) {
                    face_sides += hits[f];
                }
            }
            self.parents.push(parents);
            self.boundary.push(2 * edges - face_sides);
        }
    }

    pub fn host(&self) -> &PlaneGraph {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    /// Neighbours in 𝓟_{n−1} of the n-th vertex.
    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// |b𝓟_n| for 1 ≤ n ≤ len.
    pub fn boundary_length(&self, n: usize) -> usize {
        self.boundary[n - 1]
    }

    pub fn boundary_lengths(&self) -> &[usize] {
        &self.boundary
    }

    /// δ_n = |b𝓟_{n+1}| − |b𝓟_n| for 1 ≤ n < len.
    pub fn deltas(&self) -> Vec<i64> {
        self.boundary.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect()
    }

    pub fn ball(&self, n: usize) -> Result<Subgraph> {
        if n == 0 || n > self.order.len() {
            return Err(Error::Input(format!("puffed ball {n} outside 1..={}", self.order.len())));
        }
        Subgraph::induced(&self.host, self.order[..n].iter().copied())
    }
}

/// Smallest vertex-core patch whose safe region holds `n` vertices plus one
/// more complete sphere for the rotation order.
fn host_for(p: u32, n: usize) -> Result<PlaneGraph> {
    for height in 2.. {
        let g = regular_patch_with_core(p, 3, height, Core::Vertex)?;
        let Some(safe) = g.safe_height() else { continue };
        if safe < 2 {
            continue;
        }
        let reach = g.bfs_distances(0).iter().flatten().filter(|&&d| d < safe).count();
        if reach >= n {
            return Ok(g);
        }
    }
    unreachable!()
}

/// Spheres S_0, S_1, … around vertex 0, each in fill order, until `n`
/// vertices are covered.
fn ccw_rings(g: &PlaneGraph, n: usize) -> Result<Vec<Vec<VertexId>>> {
    let dist = g.bfs_distances(0);
    let mut rings = vec![vec![0]];
    rings.push(g.neighbors(0).collect());
    let mut covered = 1 + rings[1].len();
    let mut ball: Vec<VertexId> = rings.concat();
    let mut k = 1;
    while covered < n {
        k += 1;
        ball.extend(dist.iter().enumerate().filter(|(_, d)| **d == Some(k)).map(|(v, _)| v));
        let walk = boundary_walk(g, &Subgraph::induced(g, ball.iter().copied())?)?;
        if !walk.is_simple_cycle() {
            return Err(Error::Growth(format!("sphere {k} is not a simple cycle")));
        }
        let cycle = &walk.cycles[0].vertices;
        let parents: Vec<usize> =
            cycle.iter().map(|&w| g.neighbors(w).filter(|&u| dist[u] == Some(k - 1)).count()).collect();
        let m = cycle.len();
        let start = (0..m)
            .find(|&i| parents[i] == 2 && parents[(i + m - 1) % m] == 1)
            .ok_or_else(|| Error::Growth(format!("sphere {k} has no two-parent start")))?;
        let mut ring = cycle[start..].to_vec();
        ring.extend_from_slice(&cycle[..start]);
        covered += ring.len();
        rings.push(ring);
    }
    Ok(rings)
}

/// 𝓟_n in a p-regular triangulation patch sized to fit it.
pub fn puffed_ball(p: u32, n: usize) -> Result<PuffedBall> {
    if n == 0 {
        return Err(Error::Input("puffed balls start at n = 1".into()));
    }
    let seq = PuffedSequence::new(p, n)?;
    let ball = seq.ball(n)?;
    Ok(PuffedBall { p, n, boundary_length: seq.boundary_length(n), ball, host: seq.host })
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaSequence {
    pub p: u32,
    pub n_max: usize,
    /// δ_1..δ_{n_max}.
    pub deltas: Vec<i64>,
    pub first_is_two: bool,
    /// Every δ_n with n ≥ 2 is 0 or 1.
    pub binary: bool,
    /// Every window of p+1 consecutive δ_n (n ≥ 2) contains a 1.
    pub windows_hit: bool,
    /// Longest run of zeros among δ_n, n ≥ 2. It grows like √n when p = 6,
    /// where the boundary of a puffed ball is of order √n.
    pub longest_zero_run: usize,
    pub pass: bool,
}

pub fn delta_sequence(p: u32, n_max: usize) -> Result<DeltaSequence> {
    let seq = PuffedSequence::new(p, n_max + 1)?;
    let deltas = seq.deltas();
    let first_is_two = deltas.first() == Some(&2);
    let tail = deltas.get(1..).unwrap_or(&[]);
    let binary = tail.iter().all(|d| *d == 0 || *d == 1);
    let w = p as usize + 1;
    let windows_hit = tail.len() < w || tail.windows(w).all(|win| win.contains(&1));
    let longest_zero_run = tail.split(|d| *d != 0).map(|run| run.len()).max().unwrap_or(0);
    let pass = first_is_two && binary && windows_hit;
    Ok(DeltaSequence { p, n_max, deltas, first_is_two, binary, windows_hit, longest_zero_run, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_layer_lengths() {
        for p in 6..=8 {
            let seq = PuffedSequence::new(p, p as usize + 1).unwrap();
            for n in 2..=p as usize {
                assert_eq!(seq.boundary_length(n), n, "p={p} n={n}");
            }
            assert_eq!(seq.boundary_length(p as usize + 1), p as usize);
        }
    }

    #[test]
    fn counts_match_walks() {
        for p in 6..=7 {
            let seq = PuffedSequence::new(p, 90).unwrap();
            for n in 1..=90 {
                let b = seq.ball(n).unwrap();
                let walk = boundary_walk(seq.host(), &b).unwrap();
                assert_eq!(walk.length, seq.boundary_length(n), "p={p} n={n}");
                if n >= 3 {
                    assert!(walk.is_simple_cycle(), "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn hexagonal_deltas() {
        let d = delta_sequence(6, 20).unwrap();
        assert_eq!(&d.deltas[..7], &[2, 1, 1, 1, 1, 0, 1]);
        assert!(d.pass);
        // Flat puffed balls have boundary of order √n, so gaps between ones grow.
        let long = delta_sequence(6, 2000).unwrap();
        assert!(long.first_is_two && long.binary && !long.windows_hit);
        assert!(long.longest_zero_run > 7);
    }

    #[test]
    fn hyperbolic_windows() {
        for p in 7..=8 {
            let d = delta_sequence(p, 3000).unwrap();
            assert!(d.pass, "p={p} run={}", d.longest_zero_run);
        }
    }

    #[test]
    fn wheel_closes() {
        let b = puffed_ball(6, 7).unwrap();
        assert_eq!(b.boundary_length, 6);
        assert_eq!(b.ball.vertices.len(), 7);
        assert_eq!(puffed_ball(7, 8).unwrap().boundary_length, 7);
    }
}
