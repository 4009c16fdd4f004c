//! One line per acceptance criterion. Honest failures are printed, not hidden;
//! the process exits 0 so the rest of the suite still runs.

use std::time::Instant;

use tessera::curvature::{exhaustive_gauss_bonnet, sampled_gauss_bonnet};
use tessera::extremal::{
    delta_sequence, equality_admissible, equality_subgraph, random_triangulation, transfer_triangulation,
    triangulation_j1_bounds, weil_scan, weil_verify, EqualityOutcome, TransferMode,
};
use tessera::generators::{build_patch, regular_patch_with_core, Core};
use tessera::graph::ops::quasi_ball;
use tessera::isoperimetry::{growth_rate, verify_bounds, BoundsReport, Ratio};
use tessera::{kappa, platonic, ExactScalar, PatchSpec, PlaneGraph, Subgraph};

type Outcome = (bool, String);

fn show(x: Option<f64>) -> String {
    x.map_or("none".into(), |x| format!("{x:.4}"))
}

fn main() {
    let start = Instant::now();
    let heptagonal = regular_patch_with_core(7, 3, 11, Core::Vertex).expect("(7,3) patch");
    let bounds = verify_bounds(&heptagonal, 7, 3, 7, 3, 10).expect("(7,3) bounds");
    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(gauss_bonnet)),
        (2, Box::new(platonic_sphere)),
        (3, Box::new(|| lower_bounds(&bounds))),
        (4, Box::new(|| upper_witnesses(&bounds))),
        (5, Box::new(|| sandwich(&bounds))),
        (6, Box::new(weil)),
        (7, Box::new(puffed)),
        (8, Box::new(transfer)),
        (9, Box::new(j1)),
        (10, Box::new(growth)),
    ];
    let mut failed = Vec::new();
    for (n, check) in &criteria {
        let t = Instant::now();
        let (ok, detail) = check();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {n} {verdict}: {detail} ({:.1}s)", t.elapsed().as_secs_f64());
        if !ok {
            failed.push(*n);
        }
    }
    println!("acceptance: {} of {} pass, failing {failed:?}, {:.0}s", criteria.len() - failed.len(), criteria.len(), start.elapsed().as_secs_f64());
}

fn gauss_bonnet() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, q) in [(6, 3), (4, 4), (3, 6), (7, 3), (3, 7), (4, 5), (5, 4)] {
        let g = regular_patch_with_core(p, q, 9, Core::Vertex).expect("patch");
        let exhaustive = exhaustive_gauss_bonnet(&g, 0, 9).expect("exhaustive");
        let sampled = sampled_gauss_bonnet(&g, 500, 0, 40).expect("samples");
        ok &= exhaustive.pass() && sampled.pass() && sampled.checked == 500;
        parts.push(format!(
            "({p},{q}) {}/{} sets {} samples {} failures",
            exhaustive.checked,
            exhaustive.seen,
            sampled.checked,
            exhaustive.failures + sampled.failures
        ));
    }
    (ok, parts.join(", "))
}

fn platonic_sphere() -> Outcome {
    let two = ExactScalar::from_int(2);
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, q) in [(3, 3), (3, 4), (4, 3), (5, 3), (3, 5)] {
        let g = platonic(p, q).expect("solid");
        let k = kappa(&g, 0..g.n_vertices()).expect("kappa");
        ok &= k == two;
        parts.push(format!("({p},{q}) {k}"));
    }
    (ok, format!("sum of curvature {}", parts.join(", ")))
}

fn lower_bounds(heptagonal: &BoundsReport) -> Outcome {
    let g = regular_patch_with_core(4, 5, 9, Core::Vertex).expect("(4,5) patch");
    let square = verify_bounds(&g, 4, 5, 4, 5, 10).expect("(4,5) bounds");
    let mut parts = Vec::new();
    for (name, r) in [("(7,3)", heptagonal), ("(4,5)", &square)] {
        let checked: u64 = r.lower.iter().map(|l| l.checked).sum();
        let violations: u64 = r.lower.iter().map(|l| l.violations).sum();
        parts.push(format!("{name} {checked} comparisons {violations} violations"));
    }
    (heptagonal.pass && square.pass, parts.join(", "))
}

fn last_at(r: &BoundsReport, height: usize) -> Option<&tessera::isoperimetry::UpperWitness> {
    r.upper.iter().find(|w| w.height == height)
}

fn upper_witnesses(heptagonal: &BoundsReport) -> Outcome {
    let hept = last_at(heptagonal, 10).and_then(|w| w.ratios.i_face_sigma.as_ref()).map(|x| x.to_f64());
    let g = regular_patch_with_core(6, 3, 21, Core::Vertex).expect("(6,3) patch");
    let flat = verify_bounds(&g, 6, 3, 6, 3, 1).expect("(6,3) bounds");
    let hex = last_at(&flat, 20).and_then(|w| w.ratios.i_face_sigma.as_ref()).map(|x| x.to_f64());
    let target = 1.0 / (3.0 * 5f64.sqrt()) + 0.02;
    let ok = hept.is_some_and(|x| x <= target) && hex.is_some_and(|x| x <= 0.05);
    (ok, format!("(7,3) N=10 {} vs {target:.4}, (6,3) N=20 {} vs 0.05", show(hept), show(hex)))
}

fn sandwich(heptagonal: &BoundsReport) -> Outcome {
    let root5 = 5f64.sqrt();
    let witness = last_at(heptagonal, 10).map(|w| w.ratios.i_edge.to_f64());
    let edge = heptagonal.lower.iter().find(|l| l.ratio == Ratio::EdgeVertex).expect("edge ratio");
    let bound = edge.bound.as_ref().expect("Φ(7,3)");
    let min_ok = edge.violations == 0 && edge.minimum.as_ref().is_some_and(|m| bound.le_ratio(m));
    let ok = witness.is_some_and(|w| (w - root5).abs() <= 0.05 * root5) && min_ok;
    let min = edge.minimum.as_ref().map_or("none".into(), |m| m.to_string());
    (ok, format!("witness {}, enumeration minimum {min} over {} sets, √5 = {root5:.4}", show(witness), edge.checked))
}

/// Admissible n as listed by the equality theorem: everything for q = 3,
/// n = 1 or even n otherwise, except n ≡ 4, 8 (mod 12) when q = 6.
fn listed_admissible(q: u32, n: u64) -> bool {
    n == 1 || q == 3 || (n % 2 == 0 && !(q == 6 && matches!(n % 12, 4 | 8)))
}

fn weil() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let hosts: Vec<(PlaneGraph, usize)> = vec![
        (regular_patch_with_core(6, 3, 10, Core::Vertex).expect("(6,3)"), 9),
        (regular_patch_with_core(4, 4, 12, Core::Vertex).expect("(4,4)"), 11),
        (regular_patch_with_core(3, 6, 15, Core::Vertex).expect("(3,6)"), 14),
        (build_patch(&PatchSpec::perturbed((6, 7), (3, 3), 4, 1)).expect("perturbed"), 6),
    ];
    for (g, budget) in &hosts {
        let s = weil_scan(g, *budget, 12).expect("scan");
        ok &= s.violations == 0 && s.small_boundary > 0;
        let kind = g.meta().kind.clone().unwrap_or_default();
        parts.push(format!("{kind} q={} {} sets ({} with n ≤ 12) {} violations", s.q, s.sets, s.small_boundary, s.violations));
    }
    let mut witnesses = 0;
    let mut mismatched = Vec::new();
    for q in [3, 4, 6] {
        for n in 1..=60 {
            let ours = equality_admissible(q, n).expect("q").is_ok();
            let outcome = equality_subgraph(q, n).expect("equality");
            ok &= outcome.is_witness() == ours;
            witnesses += outcome.is_witness() as usize;
            if ours != listed_admissible(q, n) {
                mismatched.push(format!("q={q} n={n}"));
            }
            if let EqualityOutcome::Witness { report, .. } = &outcome {
                ok &= report.equality && report.n == n;
            }
        }
    }
    ok &= mismatched.is_empty();
    parts.push(format!("{witnesses} equality witnesses for n ≤ 60"));
    if !mismatched.is_empty() {
        parts.push(format!("listed as admissible but unattainable: {}", mismatched.join(", ")));
    }
    let g = regular_patch_with_core(7, 3, 3, Core::Vertex).expect("(7,3)");
    let wheel = quasi_ball(&g, &Subgraph::vertex(&g, 0), 1).expect("wheel");
    match weil_verify(&g, &wheel) {
        Ok(r) => {
            ok &= r.n == 7 && r.observed == 8 && r.bound == 8;
            parts.push(format!("degree-7 wheel n={} |V|={} bound={}", r.n, r.observed, r.bound));
        }
        Err(e) => {
            ok = false;
            parts.push(format!("degree-7 wheel: {e}"));
        }
    }
    (ok, parts.join(", "))
}

fn puffed() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in 6..=8 {
        let d = delta_sequence(p, 10_000).expect("deltas");
        ok &= d.pass;
        parts.push(format!(
            "p={p} δ₁=2 {} binary {} windows {} longest zero run {}",
            d.first_is_two, d.binary, d.windows_hit, d.longest_zero_run
        ));
    }
    (ok, parts.join(", "))
}

fn transfer() -> Outcome {
    let mut failures = 0;
    let mut runs = 0;
    for seed in 0..50u64 {
        let p = 6 + (seed % 2) as u32;
        let t = random_triangulation(p, seed).expect("triangulation");
        for mode in [TransferMode::T4, TransferMode::T3] {
            runs += 1;
            match transfer_triangulation(&t, p, mode) {
                Ok(r) if r.holds => {}
                _ => failures += 1,
            }
        }
    }
    (failures == 0, format!("50 triangulations, {runs} transfers, {failures} failures"))
}

fn j1() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, h) in [(7, 9), (8, 7), (9, 6), (10, 6)] {
        let g = regular_patch_with_core(p, 3, h, Core::Vertex).expect("triangulation");
        let r = triangulation_j1_bounds(&g, p, 12).expect("j1");
        let row = r.rows.iter().find(|row| row.height == 12);
        let gap = row.and_then(|row| row.relative_gap);
        ok &= r.pass && row.is_some_and(|row| row.above_bound) && gap.is_some_and(|x| (0.0..0.02).contains(&x));
        parts.push(format!("p={p} bound {:.4} relative gap {}", r.bound_approx, gap.map_or("none".into(), |x| format!("{x:.1e}"))));
    }
    (ok, parts.join(", "))
}

fn growth() -> Outcome {
    let target = ((3.0 + 5f64.sqrt()) / 2.0).ln();
    let h = regular_patch_with_core(7, 3, 9, Core::Vertex).expect("(7,3)");
    let hept = growth_rate(&h, 0, 8).expect("growth").mu;
    let f = regular_patch_with_core(6, 3, 11, Core::Vertex).expect("(6,3)");
    let flat = growth_rate(&f, 0, 10).expect("growth").mu;
    let ok = (hept - target).abs() <= 0.1 * target && flat < 0.05;
    (ok, format!("(7,3) μ̂ = {hept:.4} vs {target:.4}, (6,3) μ̂ = {flat:.4}"))
}
