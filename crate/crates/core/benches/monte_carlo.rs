use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hardedge::ensemble::{mc_inverse_moment_with, EnsembleConfig, Execution};

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("mc_inverse_moment");
    group.sample_size(10);
    for n_size in [8usize, 64] {
        let config = EnsembleConfig::new(n_size, 2.0, 3.0, 4_000, 7).expect("valid config");
        for (label, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, n_size), &config, |b, config| {
                b.iter(|| mc_inverse_moment_with(black_box(config), 1, execution).expect("estimate"))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sampling);
criterion_main!(benches);
