use tessera::extremal::{
    delta_sequence, equality_subgraph, lemma_check, proposition_check, puffed_ball, solve_recurrence,
    transfer_triangulation, triangulation_j1_bounds, weil_verify, EqualityOutcome, TransferMode,
};
use tessera::generators::{from_drawing, regular_patch_with_core, Core};
use tessera::graph::ops::quasi_ball;
use tessera::{Error, ExactScalar, PlaneGraph, Subgraph};

#[test]
fn quasi_balls_by_core() {
    let g = regular_patch_with_core(7, 3, 4, Core::Vertex).unwrap();
    let b2 = quasi_ball(&g, &Subgraph::vertex(&g, 0), 2).unwrap();
    assert_eq!(b2.vertices.len(), 29);
    assert_eq!(tessera::boundary_walk(&g, &b2).unwrap().length, 21);
    let h = regular_patch_with_core(6, 3, 4, Core::Vertex).unwrap();
    assert_eq!(quasi_ball(&h, &Subgraph::vertex(&h, 0), 1).unwrap().vertices.len(), 7);
}

#[test]
fn recurrence_matches_spheres() {
    let r = solve_recurrence(7, 3, &[1, 7, 21, 56]).unwrap();
    assert_eq!(r.t0, ExactScalar::one());
    assert!(r.dominated && r.telescoped);
    assert!(matches!(solve_recurrence(6, 3, &[1, 6]), Err(Error::ParabolicParameters(6, 3))));
}

#[test]
fn proposition_and_lemma_on_balls() {
    let g = regular_patch_with_core(7, 3, 5, Core::Vertex).unwrap();
    let mut s = Subgraph::vertex(&g, 0);
    for _ in 0..2 {
        s = quasi_ball(&g, &s, 1).unwrap();
        let r = proposition_check(&g, &s).unwrap();
        assert!(r.applicable && r.equality == Some(true), "{r:?}");
        assert!(lemma_check(&g, &s, 7, 3).unwrap().holds);
    }
}

#[test]
fn weil_equality_cases() {
    let EqualityOutcome::Witness { report, core, .. } = equality_subgraph(3, 12).unwrap() else { panic!() };
    assert_eq!((core, report.observed), ("vertex", 19));
    assert!(matches!(equality_subgraph(4, 7).unwrap(), EqualityOutcome::Impossible { .. }));
    assert!(matches!(equality_subgraph(6, 16).unwrap(), EqualityOutcome::Impossible { .. }));
}

/// Seven triangles around a vertex of degree 7, drawn with a frame of
/// incomplete vertices so the wheel is safe.
#[test]
fn degree_seven_wheel_drawing() {
    let mut coords = vec![(0.0, 0.0)];
    let tau = std::f64::consts::TAU;
    for k in 0..7 {
        let a = tau * k as f64 / 7.0;
        coords.push((a.cos(), a.sin()));
    }
    for k in 0..14 {
        let a = tau * (k as f64 + 0.5) / 14.0;
        coords.push((2.5 * a.cos(), 2.5 * a.sin()));
    }
    let mut edges = Vec::new();
    for k in 0..7 {
        edges.push((0, 1 + k));
        edges.push((1 + k, 1 + (k + 1) % 7));
    }
    for k in 0..14 {
        edges.push((8 + k, 8 + (k + 1) % 14));
    }
    // Each rim vertex sees three frame vertices, each frame vertex one or two rim vertices.
    for k in 0..7 {
        for j in [2 * k + 13, 2 * k, 2 * k + 1] {
            edges.push((1 + k, 8 + j % 14));
        }
    }
    edges.sort();
    edges.dedup();
    let complete: Vec<bool> = (0..22).map(|v| v < 8).collect();
    let g: PlaneGraph = from_drawing(&coords, &edges, &complete).unwrap();
    assert!(g.complete_vertices().all(|v| g.degree(v) >= 6));
    assert!(g.complete_vertices().all(|v| g.faces_at(v).all(|f| g.face_degree(f) == 3)));
    let s = Subgraph::induced(&g, 0..8).unwrap();
    let r = weil_verify(&g, &s).unwrap();
    assert_eq!((r.n, r.observed, r.bound), (7, 8, 8));
}

#[test]
fn puffed_balls_and_transfer() {
    let d = delta_sequence(6, 20).unwrap();
    assert_eq!(&d.deltas[..7], &[2, 1, 1, 1, 1, 0, 1]);
    assert_eq!(puffed_ball(7, 8).unwrap().boundary_length, 7);
    let g = regular_patch_with_core(7, 3, 4, Core::Vertex).unwrap();
    let b2 = quasi_ball(&g, &Subgraph::vertex(&g, 0), 2).unwrap();
    let t = tessera::extremal::extract_disk(&g, &b2).unwrap();
    let r = transfer_triangulation(&t, 7, TransferMode::T4).unwrap();
    assert!(r.holds && r.puffed_boundary <= 21);
}

#[test]
fn j1_ratios_approach_golden_ratio() {
    let g = regular_patch_with_core(7, 3, 6, Core::Vertex).unwrap();
    let r = triangulation_j1_bounds(&g, 7, 8).unwrap();
    assert_eq!(r.rows[0].ratio, ExactScalar::ratio(21, 8));
    assert_eq!(r.rows[1].ratio, ExactScalar::ratio(56, 29));
    let gaps: Vec<f64> = r.rows.iter().map(|row| row.relative_gap.unwrap()).collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0] && w[1] > 0.0));
}
