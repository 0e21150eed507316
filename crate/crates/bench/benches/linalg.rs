use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tkh_core::linalg::{rank_mod2, smith_normal_form, SparseMatrix};

/// Sparse ±1 matrix with about `per_col` entries per column, like a cube differential.
fn sparse(rows: usize, cols: usize, per_col: usize, seed: u64) -> SparseMatrix<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Vec::new();
    for c in 0..cols {
        for _ in 0..per_col {
            t.push((
                rng.random_range(0..rows),
                c,
                if rng.random() { 1 } else { -1 },
            ));
        }
    }
    SparseMatrix::from_triplets(rows, cols, t)
}

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank_mod2");
    for n in [64, 256, 1024] {
        let m = sparse(n, n, 4, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| rank_mod2(m))
        });
    }
    group.finish();
}

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    group.sample_size(20);
    for n in [32, 128, 256] {
        let m = sparse(n, n, 3, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| smith_normal_form(m))
        });
    }
    group.finish();
}

criterion_group!(benches, rank, snf);
criterion_main!(benches);
