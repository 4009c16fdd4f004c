use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tessera::generators::{regular_patch_with_core, Core};
use tessera::graph::ops::quasi_ball;
use tessera::{boundary_walk, gauss_bonnet_check, subgraph_ratios, GbVariant, Subgraph};

fn walks(c: &mut Criterion) {
    let g = regular_patch_with_core(7, 3, 9, Core::Vertex).unwrap();
    let mut group = c.benchmark_group("heptagonal ball");
    for n in [2, 4, 6] {
        let s = quasi_ball(&g, &Subgraph::vertex(&g, 0), n).unwrap();
        group.bench_with_input(BenchmarkId::new("boundary walk", n), &s, |b, s| {
            b.iter(|| boundary_walk(&g, black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("gauss-bonnet", n), &s, |b, s| {
            b.iter(|| gauss_bonnet_check(&g, black_box(s), GbVariant::II).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("ratios", n), &s, |b, s| {
            b.iter(|| subgraph_ratios(&g, black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    c.bench_function("generate (7,3) height 8", |b| b.iter(|| regular_patch_with_core(7, 3, black_box(8), Core::Vertex).unwrap()));
}

criterion_group!(benches, walks, generation);
criterion_main!(benches);
