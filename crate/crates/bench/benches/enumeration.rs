use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tessera::curvature::exhaustive_gauss_bonnet;
use tessera::extremal::{delta_sequence, weil_scan};
use tessera::generators::{regular_patch_with_core, Core};
use tessera::isoperimetry::{brute_force_min_ratio, Ratio};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    let hept = regular_patch_with_core(7, 3, 8, Core::Vertex).unwrap();
    group.bench_function("min edge ratio (7,3) up to 7", |b| {
        b.iter(|| brute_force_min_ratio(&hept, black_box(7), Ratio::EdgeVertex).unwrap())
    });
    group.bench_function("exhaustive gauss-bonnet (7,3) up to 6", |b| {
        b.iter(|| exhaustive_gauss_bonnet(&hept, 0, black_box(6)).unwrap())
    });
    let square = regular_patch_with_core(4, 4, 10, Core::Vertex).unwrap();
    group.bench_function("weil scan (4,4) up to 8", |b| b.iter(|| weil_scan(&square, black_box(8), 12).unwrap()));
    group.finish();
}

fn deltas(c: &mut Criterion) {
    c.bench_function("δ sequence p=7 to 10000", |b| b.iter(|| delta_sequence(7, black_box(10_000)).unwrap()));
}

criterion_group!(benches, enumeration, deltas);
criterion_main!(benches);
