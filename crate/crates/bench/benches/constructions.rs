use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use comparability_core::{
    random_regular, vertex_expansion, ExpansionMode, GridConstruction, GridParams, RankVariant,
    RankedConstruction, RankedParams,
};

fn grid_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("grid");
    let params = GridParams::from_target_n(100_000, 1).unwrap();
    group.bench_function("build_100k", |b| {
        b.iter(|| GridConstruction::build(params))
    });
    group.bench_function("greedy_witness_100k", |b| {
        b.iter_batched(
            || GridConstruction::build(params),
            |gc| gc.greedy_clique_witness(),
            BatchSize::LargeInput,
        )
    });
    let small = GridParams::new(4, 4, 1).unwrap();
    group.bench_function("union_graph_n64", |b| {
        b.iter_batched(
            || GridConstruction::build(small),
            |gc| gc.union_graph(),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

fn ranked_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("ranked");
    group.sample_size(20);
    let params =
        RankedParams::from_target_n(10_000, 0.5, 2, 1, RankVariant::Overlapping).unwrap();
    group.bench_function("build_10k", |b| {
        b.iter(|| RankedConstruction::build(params).unwrap())
    });
    group.finish();
}

fn expander_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("expander");
    group.bench_function("random_regular_10k_d3", |b| {
        b.iter(|| random_regular(10_000, 3, 7).unwrap())
    });
    let (h, _) = random_regular(16, 3, 7).unwrap();
    group.bench_function("exact_expansion_n16", |b| {
        b.iter(|| vertex_expansion(&h, ExpansionMode::Exact).unwrap())
    });
    group.finish();
}

criterion_group!(benches, grid_benches, ranked_benches, expander_benches);
criterion_main!(benches);
