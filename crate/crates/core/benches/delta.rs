use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use selfdesc::{delta, delta_fast, Sequence};

fn random_sequence(n: u32, rng: &mut ChaCha8Rng) -> Sequence {
    Sequence::new((0..=n).map(|i| rng.gen_range(0..=i)).collect()).unwrap()
}

fn transforms(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut group = c.benchmark_group("delta");
    for n in [100u32, 1_000, 10_000] {
        let s = random_sequence(n, &mut rng);
        group.bench_with_input(BenchmarkId::new("quadratic", n), &s, |b, s| b.iter(|| delta(s)));
        group.bench_with_input(BenchmarkId::new("fenwick", n), &s, |b, s| b.iter(|| delta_fast(s)));
    }
    let s = random_sequence(100_000, &mut rng);
    group.bench_with_input(BenchmarkId::new("fenwick", 100_000), &s, |b, s| {
        b.iter(|| delta_fast(s))
    });
    group.finish();
}

criterion_group!(benches, transforms);
criterion_main!(benches);
