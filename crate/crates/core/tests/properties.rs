use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tessera::curvature::edge_counts;
use tessera::extremal::lemma_check;
use tessera::generators::{build_patch, random_safe_subgraph, regular_patch_with_core, Core};
use tessera::graph::io::{graph_from_json, graph_to_json, SubgraphFile};
use tessera::graph::ops::{edge_and_vertex_boundaries, interior, quasi_ball};
use tessera::{boundary_walk, gauss_bonnet_check, Error, GbVariant, PatchSpec, PlaneGraph, Subgraph};

fn host(pick: usize) -> PlaneGraph {
    match pick % 6 {
        0 => regular_patch_with_core(6, 3, 5, Core::Vertex),
        1 => regular_patch_with_core(4, 4, 5, Core::Face),
        2 => regular_patch_with_core(3, 7, 5, Core::Vertex),
        3 => regular_patch_with_core(5, 4, 4, Core::Vertex),
        4 => build_patch(&PatchSpec::perturbed((7, 9), (3, 3), 3, pick as u64)),
        _ => build_patch(&PatchSpec::perturbed((4, 5), (4, 5), 3, pick as u64)),
    }
    .unwrap()
}

fn sample(g: &PlaneGraph, seed: u64) -> Subgraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_safe_subgraph(g, &mut rng, 20).unwrap()
}

fn checked_lemma(g: &PlaneGraph, s: &Subgraph) -> Result<(), TestCaseError> {
    match lemma_check(g, s, 7, 3) {
        Ok(r) => prop_assert!(r.holds, "{:?}", r),
        Err(Error::HypothesisViolation(_)) | Err(Error::UnsafeSubgraph(_)) => {}
        Err(e) => prop_assert!(false, "{}", e),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauss_bonnet_is_exact(pick in 0usize..60, seed in any::<u64>()) {
        let g = host(pick);
        let s = sample(&g, seed);
        for v in [GbVariant::I, GbVariant::II] {
            let r = gauss_bonnet_check(&g, &s, v).unwrap();
            prop_assert!(r.pass, "{:?} {:?}", v, r);
        }
    }

    #[test]
    fn boundary_length_from_counts(pick in 0usize..60, seed in any::<u64>()) {
        let g = host(pick);
        let s = sample(&g, seed);
        let walk = boundary_walk(&g, &s).unwrap();
        prop_assert_eq!(walk.length, 2 * s.edges.len() - s.face_degree_sum(&g));
    }

    #[test]
    fn outward_and_inward_edges(pick in 0usize..60, seed in any::<u64>()) {
        let g = host(pick);
        let s = sample(&g, seed);
        let (inward, outward) = edge_counts(&g, &s).unwrap();
        let cut = edge_and_vertex_boundaries(&g, &s).unwrap().edge_boundary.len();
        prop_assert!(outward >= cut);
        if s.is_induced(&g) {
            prop_assert_eq!(outward, cut);
        }
        let minus = interior(&g, &s).unwrap();
        if !minus.is_empty() {
            let (_, minus_out) = edge_counts(&g, &minus).unwrap();
            prop_assert!(inward >= minus_out);
        }
    }

    #[test]
    fn lemma_on_quasi_balls(seed in 0u64..200, layers in 1usize..3) {
        let g = build_patch(&PatchSpec::perturbed((7, 8), (3, 4), 4, seed)).unwrap();
        let core = match seed % 3 {
            0 => Subgraph::vertex(&g, 0),
            1 => Subgraph::edge(&g, g.rotation(0)[0] / 2),
            _ => Subgraph::face_graph(&g, [g.face_of(g.rotation(0)[0])]),
        };
        let Ok(s) = quasi_ball(&g, &core, layers) else { return Ok(()) };
        checked_lemma(&g, &s)?;
    }

    #[test]
    fn json_round_trip(pick in 0usize..60, seed in any::<u64>()) {
        let g = host(pick);
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        prop_assert_eq!(back.rotation_lists(), g.rotation_lists());
        prop_assert_eq!(back.complete_flags(), g.complete_flags());
        prop_assert_eq!(back.fingerprint(), g.fingerprint());
        let s = sample(&g, seed);
        let text = serde_json::to_string(&SubgraphFile::from_subgraph(&g, &s)).unwrap();
        let file: SubgraphFile = serde_json::from_str(&text).unwrap();
        let r = file.resolve(&back).unwrap();
        prop_assert_eq!((r.vertices, r.edges, r.faces), (s.vertices, s.edges, s.faces));
    }
}
