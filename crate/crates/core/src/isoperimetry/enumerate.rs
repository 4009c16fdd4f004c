//! Exhaustive enumeration of connected vertex sets (Redelmeier's method) with
//! the counts every ratio needs maintained incrementally.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use super::Ratio;
use crate::error::{Error, Result};
use crate::graph::{FaceId, PlaneGraph, Subgraph, VertexId};
use crate::scalar::ExactScalar;

/// Which connected sets to visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Roots {
    /// Every set containing this vertex.
    Single(VertexId),
    /// Every set of complete vertices, each once: grown from its smallest vertex.
    All,
}

/// Counts for the current set S (induced on its vertices).
#[derive(Clone, Debug, Default)]
pub struct SetStats {
    pub vertices: Vec<VertexId>,
    pub degree_sum: usize,
    /// |E(S)|
    pub edges: usize,
    /// |d₀S|
    pub d0: usize,
    /// |d₁S|
    pub d1: usize,
    /// |F(S)|
    pub faces: usize,
    pub face_degree_sum: usize,
    /// Edges with a face of S on both sides.
    pub interior_edges: usize,
}

impl SetStats {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// |∂S|
    pub fn edge_boundary(&self) -> usize {
        self.degree_sum - 2 * self.edges
    }

    /// |bS₀| for the face part S₀.
    pub fn face_boundary(&self) -> usize {
        self.face_degree_sum - 2 * self.interior_edges
    }

    /// Numerator and denominator of a ratio; `None` for face ratios without faces.
    /// Face ratios are taken on the face part.
    pub fn ratio_parts(&self, r: Ratio) -> Option<(u64, u64)> {
        let n = self.len() as u64;
        Some(match r {
            Ratio::EdgeVertex => (self.edge_boundary() as u64, n),
            Ratio::EdgeSigma => (self.edge_boundary() as u64, self.degree_sum as u64),
            Ratio::J0 => (self.d0 as u64, n),
            Ratio::J1 => (self.d1 as u64, n),
            Ratio::FaceBoundary if self.faces > 0 => (self.face_boundary() as u64, self.faces as u64),
            Ratio::FaceSigma if self.faces > 0 => (self.face_boundary() as u64, self.face_degree_sum as u64),
            _ => return None,
        })
    }

    pub fn sorted_vertices(&self) -> Vec<VertexId> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }
}

struct Enumerator<'g, F> {
    g: &'g PlaneGraph,
    max: usize,
    root: VertexId,
    multi: bool,
    in_s: Vec<bool>,
    seen: Vec<bool>,
    nbr: Vec<u32>,
    face_count: Vec<u32>,
    stats: SetStats,
    visit: F,
}

impl<'g, F: FnMut(&SetStats)> Enumerator<'g, F> {
    fn new(g: &'g PlaneGraph, max: usize, root: VertexId, multi: bool, visit: F) -> Self {
        let n = g.n_vertices();
        Enumerator {
            g,
            max,
            root,
            multi,
            in_s: vec![false; n],
            seen: vec![false; n],
            nbr: vec![0; n],
            face_count: vec![0; g.n_faces()],
            stats: SetStats::default(),
            visit,
        }
    }

    fn allowed(&self, v: VertexId) -> bool {
        self.g.is_complete(v) && (!self.multi || v > self.root)
    }

    fn face_full(&self, f: FaceId) -> bool {
        !self.g.is_outer(f) && self.face_count[f] as usize == self.g.face_degree(f)
    }

    fn add(&mut self, v: VertexId) {
        let g = self.g;
        let deg = g.degree(v);
        let st = &mut self.stats;
        st.vertices.push(v);
        st.degree_sum += deg;
        st.edges += self.nbr[v] as usize;
        if self.nbr[v] > 0 {
            st.d1 -= 1;
        }
        if (self.nbr[v] as usize) < deg {
            st.d0 += 1;
        }
        self.in_s[v] = true;
        for w in g.neighbors(v) {
            self.nbr[w] += 1;
            if self.in_s[w] {
                if self.nbr[w] as usize == g.degree(w) {
                    st.d0 -= 1;
                }
            } else if self.nbr[w] == 1 {
                st.d1 += 1;
            }
        }
        for &d in g.rotation(v) {
            let f = g.face_of(d);
            self.face_count[f] += 1;
            if self.face_full(f) {
                let st = &mut self.stats;
                st.faces += 1;
                st.face_degree_sum += g.face_degree(f);
                for &e in g.face_darts(f) {
                    if self.face_full(g.face_of(e ^ 1)) {
                        self.stats.interior_edges += 1;
                    }
                }
            }
        }
    }

    fn remove(&mut self, v: VertexId) {
        let g = self.g;
        for &d in g.rotation(v) {
            let f = g.face_of(d);
            if self.face_full(f) {
                self.stats.faces -= 1;
                self.stats.face_degree_sum -= g.face_degree(f);
                for &e in g.face_darts(f) {
                    if self.face_full(g.face_of(e ^ 1)) {
                        self.stats.interior_edges -= 1;
                    }
                }
            }
            self.face_count[f] -= 1;
        }
        let deg = g.degree(v);
        self.in_s[v] = false;
        let st = &mut self.stats;
        for w in g.neighbors(v) {
            if self.in_s[w] {
                if self.nbr[w] as usize == g.degree(w) {
                    st.d0 += 1;
                }
            } else if self.nbr[w] == 1 {
                st.d1 -= 1;
            }
            self.nbr[w] -= 1;
        }
        if (self.nbr[v] as usize) < deg {
            st.d0 -= 1;
        }
        if self.nbr[v] > 0 {
            st.d1 += 1;
        }
        st.edges -= self.nbr[v] as usize;
        st.degree_sum -= deg;
        st.vertices.pop();
    }

    /// Adds `v`, visits, and extends with the untried vertices `rest`.
    fn step(&mut self, v: VertexId, rest: &[VertexId]) {
        self.add(v);
        (self.visit)(&self.stats);
        if self.stats.len() < self.max {
            let mut untried = rest.to_vec();
            let mut marked = Vec::new();
            for w in self.g.neighbors(v) {
                if !self.seen[w] && self.allowed(w) {
                    self.seen[w] = true;
                    marked.push(w);
                    untried.push(w);
                }
            }
            while let Some(u) = untried.pop() {
                self.step(u, &untried);
            }
            for w in marked {
                self.seen[w] = false;
            }
        }
        self.remove(v);
    }

    /// Root in S, its allowed neighbours marked; returns them as the untried list.
    fn start(&mut self) -> Vec<VertexId> {
        let r = self.root;
        self.seen[r] = true;
        self.add(r);
        let mut untried = Vec::new();
        for w in self.g.neighbors(r) {
            if !self.seen[w] && self.allowed(w) {
                self.seen[w] = true;
                untried.push(w);
            }
        }
        untried
    }
}

/// Visits every connected set of complete vertices with at most `max` vertices
/// selected by `roots`. Work is split across the first branching level and
/// the per-branch accumulators are combined in a fixed order, so the result
/// does not depend on scheduling.
pub fn enumerate_connected<A, I, V, M>(
    g: &PlaneGraph,
    roots: Roots,
    max: usize,
    init: I,
    visit: V,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &SetStats) + Sync,
    M: Fn(A, A) -> A,
{
    let root_list: Vec<VertexId> = match roots {
        Roots::Single(r) => {
            if r >= g.n_vertices() || !g.is_complete(r) {
                return Err(Error::RegionTooSmall(format!("root {r} is not a complete vertex")));
            }
            vec![r]
        }
        Roots::All => g.complete_vertices().collect(),
    };
    if root_list.is_empty() || max == 0 {
        return Err(Error::RegionTooSmall("no complete vertex to start from".into()));
    }
    let multi = matches!(roots, Roots::All);
    // Tasks: (root, None) visits the singleton; (root, Some(k)) the k-th branch.
    let mut tasks: Vec<(VertexId, Option<usize>)> = Vec::new();
    for &r in &root_list {
        tasks.push((r, None));
        if max > 1 {
            let width = g.neighbors(r).filter(|&w| g.is_complete(w) && (!multi || w > r)).count();
            tasks.extend((0..width).map(|k| (r, Some(k))));
        }
    }
    let parts: Vec<A> = tasks
        .par_iter()
        .map(|&(r, branch)| {
            let mut acc = init();
            let mut e = Enumerator::new(g, max, r, multi, |s: &SetStats| visit(&mut acc, s));
            let untried = e.start();
            match branch {
                None => (e.visit)(&e.stats),
                Some(k) => {
                    // The k-th pop of the root level sees the first len−1−k entries.
                    let idx = untried.len() - 1 - k;
                    e.step(untried[idx], &untried[..idx]);
                }
            }
            drop(e);
            acc
        })
        .collect();
    let mut it = parts.into_iter();
    let first = it.next().expect("at least one task");
    Ok(it.fold(first, merge))
}

#[derive(Clone, Debug, Serialize)]
pub struct MinRatio {
    pub ratio: Ratio,
    pub minimum: ExactScalar,
    pub witness: Subgraph,
    pub witness_vertices: Vec<VertexId>,
    /// Sets visited, and how many of them had the ratio defined.
    pub visited: u64,
    pub evaluated: u64,
    pub max_vertices: usize,
    pub roots: Roots,
}

#[derive(Clone)]
struct Best {
    num: u64,
    den: u64,
    vertices: Vec<VertexId>,
}

fn better(a: &Best, b: &Best) -> bool {
    let lhs = a.num as u128 * b.den as u128;
    let rhs = b.num as u128 * a.den as u128;
    match lhs.cmp(&rhs) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a.vertices < b.vertices,
    }
}

/// The minimum of `which` over connected induced sets of complete vertices with
/// at most `max_vertices` vertices; face ratios use the set's face part.
///
/// Hosts built as regular patches are vertex-transitive on their complete region,
/// so only sets through vertex 0 are needed; others are searched from every root.
pub fn brute_force_min_ratio(g: &PlaneGraph, max_vertices: usize, which: Ratio) -> Result<MinRatio> {
    let regular = matches!(g.meta().kind.as_deref(), Some("regular"));
    let roots = if regular { Roots::Single(0) } else { Roots::All };
    if let (true, Some(h)) = (regular, g.safe_height()) {
        if h + 1 < max_vertices {
            return Err(Error::RegionTooSmall(format!(
                "sets of {max_vertices} vertices through the centre need safe height {}, patch has {h}",
                max_vertices - 1
            )));
        }
    }
    brute_force_min_ratio_with(g, max_vertices, which, roots)
}

pub fn brute_force_min_ratio_with(g: &PlaneGraph, max_vertices: usize, which: Ratio, roots: Roots) -> Result<MinRatio> {
    type Acc = (Option<Best>, u64, u64);
    let (best, visited, evaluated) = enumerate_connected(
        g,
        roots,
        max_vertices,
        || (None, 0u64, 0u64),
        |acc: &mut Acc, s: &SetStats| {
            acc.1 += 1;
            if let Some((num, den)) = s.ratio_parts(which) {
                acc.2 += 1;
                let cand_better = match &acc.0 {
                    None => true,
                    Some(b) => {
                        let lhs = num as u128 * b.den as u128;
                        let rhs = b.num as u128 * den as u128;
                        lhs < rhs || (lhs == rhs && s.sorted_vertices() < b.vertices)
                    }
                };
                if cand_better {
                    acc.0 = Some(Best { num, den, vertices: s.sorted_vertices() });
                }
            }
        },
        |a: Acc, b: Acc| {
            let best = match (a.0, b.0) {
                (Some(x), Some(y)) => Some(if better(&y, &x) { y } else { x }),
                (x, None) => x,
                (None, y) => y,
            };
            (best, a.1 + b.1, a.2 + b.2)
        },
    )?;
    let best = best.ok_or_else(|| Error::RegionTooSmall(format!("no set had {} defined", which.name())))?;
    let induced = Subgraph::induced(g, best.vertices.iter().copied())?;
    let witness = if which.needs_faces() { induced.face_part(g) } else { induced };
    Ok(MinRatio {
        ratio: which,
        minimum: ExactScalar::ratio(best.num as i64, best.den as i64),
        witness,
        witness_vertices: best.vertices,
        visited,
        evaluated,
        max_vertices,
        roots,
    })
}
