use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mengerkit_bench::ladder;
use mengerkit_core::frames::{explore, FrameOptions};
use mengerkit_core::func::concrete_projection_relations;
use mengerkit_core::lab::{closure_chi, delta_relations, ChiKind};
use mengerkit_core::represent::RepresentationBuilder;
use mengerkit_core::{BinRelation, Flavor};

fn frames(c: &mut Criterion) {
    let mut group = c.benchmark_group("frames");
    for (label, _, alg) in ladder() {
        // a fresh search every time, bypassing the per-algebra cache
        group.bench_function(BenchmarkId::from_parameter(label), |b| {
            b.iter(|| explore(&alg, FrameOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn closures(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure_chi");
    for (label, _, alg) in ladder() {
        delta_relations(&alg).unwrap();
        let pi = BinRelation::diagonal(alg.size());
        group.bench_function(BenchmarkId::new("chi-pi", &label), |b| {
            b.iter(|| closure_chi(&alg, Some(&pi), ChiKind::ChiPi).unwrap())
        });
        group.bench_function(BenchmarkId::new("chi0", &label), |b| {
            b.iter(|| closure_chi(&alg, None, ChiKind::Chi0).unwrap())
        });
    }
    group.finish();
}

fn representations(c: &mut Criterion) {
    let mut group = c.benchmark_group("representation");
    group.sample_size(20);
    for (label, concrete, alg) in ladder() {
        let (chi, gamma, _) = concrete_projection_relations(&concrete);
        group.bench_function(BenchmarkId::new("pairs", &label), |b| {
            b.iter(|| {
                RepresentationBuilder::new(&alg, &chi, Flavor::Menger)
                    .unwrap()
                    .sum_over_pairs(&gamma)
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, frames, closures, representations);
criterion_main!(benches);
