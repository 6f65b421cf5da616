use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use selfdesc::census::default_workers;
use selfdesc::dynamics::{count_double_points_gamma, count_fixed_points_delta};
use selfdesc::CensusConfig;

fn census(c: &mut Criterion) {
    let parallel = default_workers().max(2);
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [8usize, 9] {
        for (label, workers) in [("sequential", 1), ("parallel", parallel)] {
            let cfg = CensusConfig::with_workers(workers);
            group.bench_with_input(BenchmarkId::new(format!("fixed/{label}"), n), &n, |b, &n| {
                b.iter(|| count_fixed_points_delta(n, &cfg).unwrap())
            });
            group.bench_with_input(BenchmarkId::new(format!("double/{label}"), n), &n, |b, &n| {
                b.iter(|| count_double_points_gamma(n, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, census);
criterion_main!(benches);
