//! Vertex-count bounds for subgraphs with a given number of boundary vertices
//! in tessellations of Euclidean type, and the subgraphs that attain them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{degree_audit, regular_patch_with_core, Core};
use crate::graph::ops::quasi_ball;
use crate::graph::walk::boundary_walk;
use crate::graph::{PlaneGraph, Subgraph, VertexId};
use crate::isoperimetry::{enumerate_connected, Roots, SetStats};

/// Vertex degree matching q on the Euclidean line 1/p + 1/q = 1/2.
pub fn euclidean_p(q: u32) -> Result<u32> {
    match q {
        3 => Ok(6),
        4 => Ok(4),
        6 => Ok(3),
        _ => Err(Error::UnsupportedQ(q)),
    }
}

/// ⌊n²/(4q) + n/2 + 1⌋ for q ∈ {3,4}, ⌊n²/24 + n/2 + 3/2⌋ for q = 6.
pub fn weil_bound(q: u32, n: u64) -> Result<u64> {
    euclidean_p(q)?;
    let q = q as u64;
    // Common denominator 4q; the q = 6 constant 3/2 is 6q/(4q).
    let c = if q == 6 { 6 * q } else { 4 * q };
    Ok((n * n + 2 * q * n + c) / (4 * q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilReport {
    pub q: u32,
    /// |V(bS)|
    pub n: u64,
    pub bound: u64,
    /// |V(S)|
    pub observed: u64,
    pub holds: bool,
    pub equality: bool,
}

/// Face degree the host is checked against: the recorded q, else the
/// smallest face degree around a complete vertex.
fn host_q(g: &PlaneGraph) -> Result<u32> {
    if let Some(q) = g.meta().q {
        return Ok(q);
    }
    g.complete_vertices()
        .flat_map(|v| g.faces_at(v).map(|f| g.face_degree(f) as u32).collect::<Vec<_>>())
        .min()
        .ok_or_else(|| Error::RegionTooSmall("no complete vertex".into()))
}

/// Compares |V(S)| with the bound for n = |V(bS)|.
///
/// A vertex of S lies on bS unless every face around it is a face of S, so the
/// count needs no walk.
pub fn weil_verify(g: &PlaneGraph, s: &Subgraph) -> Result<WeilReport> {
    let q = host_q(g)?;
    let p = euclidean_p(q)?;
    let audit = degree_audit(g, (p, u32::MAX), (q, u32::MAX));
    if !audit.is_empty() {
        return Err(Error::DegreeAuditFailed(audit.join("; ")));
    }
    s.require_safe(g)?;
    let interior = s.vertices.iter().filter(|&&v| g.faces_at(v).all(|f| s.faces.contains(&f))).count();
    Ok(report(q, (s.vertices.len() - interior) as u64, s.vertices.len() as u64))
}

pub(crate) fn report(q: u32, n: u64, observed: u64) -> WeilReport {
    let bound = weil_bound(q, n).expect("q checked");
    WeilReport { q, n, bound, observed, holds: observed <= bound, equality: observed == bound }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct WeilScan {
    pub q: u32,
    pub budget: usize,
    pub roots: Option<Roots>,
    pub sets: u64,
    /// Sets with |V(bS)| ≤ `max_boundary`.
    pub small_boundary: u64,
    pub max_boundary: u64,
    pub equalities: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<VertexId>>,
}

/// The bound on every connected induced set of at most `budget` vertices;
/// vertex 0 is the only root on regular hosts, every complete vertex otherwise.
pub fn weil_scan(g: &PlaneGraph, budget: usize, max_boundary: u64) -> Result<WeilScan> {
    let q = host_q(g)?;
    let p = euclidean_p(q)?;
    let audit = degree_audit(g, (p, u32::MAX), (q, u32::MAX));
    if !audit.is_empty() {
        return Err(Error::DegreeAuditFailed(audit.join("; ")));
    }
    let roots = if g.meta().kind.as_deref() == Some("regular") { Roots::Single(0) } else { Roots::All };
    let mut scan = enumerate_connected(
        g,
        roots,
        budget,
        WeilScan::default,
        |acc: &mut WeilScan, s: &SetStats| {
            let set = s.sorted_vertices();
            let inside = |w: VertexId| set.binary_search(&w).is_ok();
            let interior = set.iter().filter(|&&v| g.faces_at(v).all(|f| g.face_vertices(f).all(inside))).count();
            let r = report(q, (set.len() - interior) as u64, set.len() as u64);
            acc.sets += 1;
            if r.n <= max_boundary {
                acc.small_boundary += 1;
            }
            acc.equalities += r.equality as u64;
            if !r.holds {
                acc.violations += 1;
                acc.witness.get_or_insert(set);
            }
        },
        |mut a, b| {
            a.sets += b.sets;
            a.small_boundary += b.small_boundary;
            a.equalities += b.equalities;
            a.violations += b.violations;
            a.witness = a.witness.or(b.witness);
            a
        },
    )?;
    scan.q = q;
    scan.budget = budget;
    scan.roots = Some(roots);
    scan.max_boundary = max_boundary;
    Ok(scan)
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum EqualityOutcome {
    Witness {
        core: &'static str,
        height: usize,
        #[serde(skip)]
        host: Box<PlaneGraph>,
        subgraph: Subgraph,
        report: WeilReport,
    },
    Impossible {
        reason: String,
    },
}

impl EqualityOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, EqualityOutcome::Witness { .. })
    }
}

/// Whether some subgraph of the regular tiling attains the bound, by the
/// residue of n.
pub fn equality_admissible(q: u32, n: u64) -> Result<std::result::Result<(), String>> {
    euclidean_p(q)?;
    if n == 0 {
        return Ok(Err("n must be positive".into()));
    }
    if q == 6 && n == 1 {
        // The bound is ⌊1/24 + 2⌋ = 2, but a one-vertex boundary means S is a vertex.
        return Ok(Err("n = 1 allows only a single vertex, one short of the bound 2".into()));
    }
    if n == 1 || q == 3 {
        return Ok(Ok(()));
    }
    if n % 2 == 1 {
        return Ok(Err(format!("odd n = {n} cannot bound a region of a bipartite tiling")));
    }
    if q == 6 && (n % 12 == 4 || n % 12 == 8) {
        return Ok(Err(format!("n ≡ {} (mod 12) has no depth-zero core", n % 12)));
    }
    Ok(Ok(()))
}

/// 𝓑_N(core) attaining the bound for |V(bS)| = n in the (p,q) regular tiling,
/// with N = ⌊n/2q⌋ and the core picked by t = n mod 2q.
pub fn equality_subgraph(q: u32, n: u64) -> Result<EqualityOutcome> {
    let p = euclidean_p(q)?;
    if let Err(reason) = equality_admissible(q, n)? {
        return Ok(EqualityOutcome::Impossible { reason });
    }
    let (big_n, t) = ((n / (2 * q as u64)) as usize, n % (2 * q as u64));
    let mut height = big_n + 3;
    loop {
        let g = regular_patch_with_core(p, q, height, Core::Vertex)?;
        match build(&g, q, n, big_n, t) {
            Ok((core, s)) => {
                let report = weil_verify(&g, &s)?;
                if report.n != n || !report.equality {
                    return Err(Error::Growth(format!("core {core} gave {report:?} for n = {n}")));
                }
                return Ok(EqualityOutcome::Witness { core, height: big_n, host: Box::new(g), subgraph: s, report });
            }
            Err(Error::UnsafeSubgraph(_)) => height += 2,
            Err(e) => return Err(e),
        }
    }
}

fn build(g: &PlaneGraph, q: u32, n: u64, big_n: usize, t: u64) -> Result<(&'static str, Subgraph)> {
    let d0 = g.rotation(0)[0];
    let one_face = || Subgraph::face_graph(g, [g.face_of(d0)]);
    let two_faces = || Subgraph::face_graph(g, [g.face_of(d0), g.face_of(g.twin(d0))]);
    let (name, core, layers) = match (q, t) {
        _ if n == 1 => ("vertex", Subgraph::vertex(g, 0), 0),
        (_, 0) => ("vertex", Subgraph::vertex(g, 0), big_n),
        (3, 1) => {
            // Wheel plus the triangle beyond the first edge of its boundary.
            let wheel = quasi_ball(g, &Subgraph::vertex(g, 0), 1)?;
            let walk = boundary_walk(g, &wheel)?;
            let f = g.face_of(g.twin(walk.cycles[0].darts[0]));
            let extra = Subgraph::face_graph(g, [f]);
            ("wheel-plus-triangle", wheel.union(&extra), big_n - 1)
        }
        (_, 2) => ("edge", Subgraph::edge(g, d0 / 2), big_n),
        (3, 3) => ("triangle", one_face(), big_n),
        (4, 4) => ("square", one_face(), big_n),
        (6, 6) => ("hexagon", one_face(), big_n),
        (3, 4) => ("two-triangles", two_faces(), big_n),
        (4, 6) => ("two-squares", two_faces(), big_n),
        (6, 10) => ("two-hexagons", two_faces(), big_n),
        (3, 5) => {
            let r = g.rotation(0);
            ("trapezoid", Subgraph::face_graph(g, r[..3].iter().map(|&d| g.face_of(d))), big_n)
        }
        _ => return Err(Error::Input(format!("no core for q = {q}, t = {t}"))),
    };
    Ok((name, quasi_ball(g, &core, layers)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(weil_bound(3, 7).unwrap(), 8);
        assert_eq!(weil_bound(4, 8).unwrap(), 9);
        assert_eq!(weil_bound(6, 12).unwrap(), 13);
        assert_eq!(weil_bound(3, 12).unwrap(), 19);
        assert!(matches!(weil_bound(5, 3), Err(Error::UnsupportedQ(5))));
    }

    #[test]
    fn case_list() {
        assert!(!equality_subgraph(4, 7).unwrap().is_witness());
        assert!(!equality_subgraph(6, 16).unwrap().is_witness());
        let EqualityOutcome::Witness { report, .. } = equality_subgraph(3, 12).unwrap() else { panic!() };
        assert_eq!((report.n, report.observed), (12, 19));
    }

    #[test]
    fn every_small_n() {
        for q in [3, 4, 6] {
            for n in 1..=30 {
                let admissible = equality_admissible(q, n).unwrap().is_ok();
                assert_eq!(equality_subgraph(q, n).unwrap().is_witness(), admissible, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn scan_square_lattice() {
        let g = regular_patch_with_core(4, 4, 8, Core::Vertex).unwrap();
        let s = weil_scan(&g, 8, 12).unwrap();
        assert_eq!(s.violations, 0);
        assert!(s.equalities > 0 && s.small_boundary > 0);
    }

    #[test]
    fn degree_seven_wheel() {
        let g = regular_patch_with_core(7, 3, 3, Core::Vertex).unwrap();
        let s = quasi_ball(&g, &Subgraph::vertex(&g, 0), 1).unwrap();
        let r = weil_verify(&g, &s).unwrap();
        assert_eq!((r.n, r.observed, r.bound), (7, 8, 8));
        assert!(r.equality);
    }
}
