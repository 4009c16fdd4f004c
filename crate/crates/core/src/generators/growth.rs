//! Layer-by-layer growth of tessellation patches.
//!
//! The patch is a disk whose boundary ring is kept counterclockwise. Each layer
//! adds every missing face at every ring vertex, which is one face closure.
//! Degrees come from a [`Targets`] source so that regular and randomised patches
//! share the same code.

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Source of vertex and face degrees during growth.
pub(crate) trait Targets {
    /// Degree for a vertex that currently lies on `faces_at` faces.
    fn vertex(&mut self, faces_at: u32) -> Result<u32>;
    /// Degree for a new face that touches `run` consecutive ring vertices.
    fn face(&mut self, run: u32) -> Result<u32>;
}

pub(crate) struct Regular {
    pub p: u32,
    pub q: u32,
}

impl Targets for Regular {
    fn vertex(&mut self, faces_at: u32) -> Result<u32> {
        if self.p <= faces_at {
            return Err(Error::Growth(format!("a ring vertex already has {faces_at} faces, degree {}", self.p)));
        }
        Ok(self.p)
    }

    fn face(&mut self, run: u32) -> Result<u32> {
        if self.q <= run {
            return Err(Error::Growth(format!("a face of degree {} cannot span {run} ring vertices", self.q)));
        }
        Ok(self.q)
    }
}

/// Half-built patch. Rotations of ring vertices start with the forward ring
/// neighbour and end with the backward one; the gap between them is outside.
pub(crate) struct Grower {
    pub rot: Vec<Vec<VertexId>>,
    pub faces_at: Vec<u32>,
    pub target: Vec<Option<u32>>,
    pub ring: Vec<VertexId>,
    limit: usize,
}

struct Spoke {
    src: VertexId,
    /// Ring position of `src`, counted from the first spoke's source.
    pos: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Grower {
    pub fn face_core(q: u32, limit: usize) -> Self {
        let q = q as usize;
        let rot = (0..q).map(|i| vec![(i + 1) % q, (i + q - 1) % q]).collect();
        Grower { rot, faces_at: vec![1; q], target: vec![None; q], ring: (0..q).collect(), limit }
    }

    pub fn vertex_core(limit: usize) -> Self {
        Grower { rot: vec![Vec::new()], faces_at: vec![0], target: vec![None], ring: vec![0], limit }
    }

    fn target_of(&mut self, v: VertexId, t: &mut impl Targets) -> Result<u32> {
        if let Some(x) = self.target[v] {
            return Ok(x);
        }
        let x = t.vertex(self.faces_at[v])?;
        self.target[v] = Some(x);
        Ok(x)
    }

    fn new_vertex(&mut self) -> Result<VertexId> {
        if self.rot.len() >= self.limit {
            return Err(Error::Growth(format!("patch exceeds {} vertices", self.limit)));
        }
        self.rot.push(Vec::new());
        self.faces_at.push(0);
        self.target.push(None);
        Ok(self.rot.len() - 1)
    }

    /// Adds one layer of faces around the current ring.
    pub fn grow(&mut self, t: &mut impl Targets) -> Result<()> {
        let m = self.ring.len();
        let mut spokes = Vec::new();
        let runs: Vec<u32>;
        if m == 1 {
            // Vertex core: every face is a wedge at the centre.
            let c = self.ring[0];
            let k = self.target_of(c, t)?;
            spokes.extend((0..k).map(|_| Spoke { src: c, pos: 0 }));
            runs = vec![1; k as usize];
        } else {
            let mut gaps = Vec::with_capacity(m);
            for i in 0..m {
                let v = self.ring[i];
                gaps.push(self.target_of(v, t)? - self.faces_at[v]);
            }
            let start = (0..m)
                .find(|&i| gaps[i] >= 2)
                .ok_or_else(|| Error::Growth("no ring vertex has room for a new edge".into()))?;
            for k in 0..m {
                let i = (start + k) % m;
                for _ in 1..gaps[i] {
                    spokes.push(Spoke { src: self.ring[i], pos: k });
                }
            }
            let n = spokes.len();
            runs = (0..n)
                .map(|a| {
                    let b = (a + 1) % n;
                    if b > a {
                        (spokes[b].pos - spokes[a].pos + 1) as u32
                    } else {
                        (m - spokes[a].pos + 1) as u32
                    }
                })
                .collect();
        }
        let n = spokes.len();

        // Extra vertices per face; -1 merges the two spoke ends.
        let mut extra = Vec::with_capacity(n);
        for &r in &runs {
            let qf = t.face(r)? as i64;
            let x = qf - r as i64 - 2;
            if x < -1 {
                return Err(Error::Growth(format!("face of degree {qf} spans {r} ring vertices")));
            }
            extra.push(x);
        }
        let mut parent: Vec<usize> = (0..n).collect();
        for a in 0..n {
            if extra[a] == -1 {
                let (x, y) = (find(&mut parent, a), find(&mut parent, (a + 1) % n));
                if x == y {
                    return Err(Error::Growth("all spoke ends collapse to one vertex".into()));
                }
                parent[x.max(y)] = x.min(y);
            }
        }

        // Allocate new vertices in spoke order.
        let mut class_id = vec![usize::MAX; n];
        let mut ys: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for a in 0..n {
            let r = find(&mut parent, a);
            if class_id[r] == usize::MAX {
                class_id[r] = self.new_vertex()?;
            }
            for _ in 0..extra[a].max(0) {
                let y = self.new_vertex()?;
                ys[a].push(y);
            }
        }
        let end: Vec<VertexId> = (0..n).map(|a| class_id[find(&mut parent, a)]).collect();

        let mut ring = Vec::new();
        for a in 0..n {
            if extra[a] >= 0 {
                ring.push(end[a]);
                ring.extend(ys[a].iter().copied());
            }
        }
        if ring.len() < 3 {
            return Err(Error::Growth(format!("new ring has {} vertices", ring.len())));
        }

        // Old ring: spokes go after the backward neighbour, in ring order.
        // Spokes of one source are consecutive, so this is ring order.
        for (a, s) in spokes.iter().enumerate() {
            self.rot[s.src].push(end[a]);
        }
        for &v in &self.ring {
            self.faces_at[v] = self.target[v].expect("target set before growth");
        }

        // Spoke ends: forward, spoke sources from latest to earliest, backward.
        let len = ring.len();
        let mut pos_in_ring = std::collections::HashMap::with_capacity(len);
        for (i, &v) in ring.iter().enumerate() {
            pos_in_ring.insert(v, i);
        }
        let mut members: std::collections::BTreeMap<VertexId, Vec<usize>> = std::collections::BTreeMap::new();
        for a in 0..n {
            members.entry(end[a]).or_default().push(a);
        }
        for (&w, list) in &members {
            let inside = |a: usize| end[a] == w;
            let first = *list
                .iter()
                .find(|&&a| !inside((a + n - 1) % n))
                .ok_or_else(|| Error::Growth("spoke class wraps the ring".into()))?;
            let i = pos_in_ring[&w];
            let mut r = vec![ring[(i + 1) % len]];
            for k in (0..list.len()).rev() {
                r.push(spokes[(first + k) % n].src);
            }
            r.push(ring[(i + len - 1) % len]);
            self.rot[w] = r;
            self.faces_at[w] = list.len() as u32 + 1;
        }
        for a in 0..n {
            for &y in &ys[a] {
                let i = pos_in_ring[&y];
                self.rot[y] = vec![ring[(i + 1) % len], ring[(i + len - 1) % len]];
                self.faces_at[y] = 1;
            }
        }
        self.ring = ring;
        Ok(())
    }

    /// Canonical relabelling: breadth-first from vertex 0 in rotation order,
    /// each rotation then starting at its smallest neighbour.
    pub fn finish(self) -> (Vec<Vec<VertexId>>, Vec<bool>) {
        let n = self.rot.len();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[0] = 0;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.rot[u] {
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    order.push(w);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        let mut rot = vec![Vec::new(); n];
        let mut complete = vec![false; n];
        for (old, r) in self.rot.into_iter().enumerate() {
            let mut list: Vec<VertexId> = r.into_iter().map(|w| label[w]).collect();
            if let Some(k) = (0..list.len()).min_by_key(|&k| list[k]) {
                list.rotate_left(k);
            }
            rot[label[old]] = list;
            complete[label[old]] = self.target[old] == Some(self.faces_at[old]) && self.faces_at[old] > 0;
        }
        (rot, complete)
    }
}
