use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tkh_bench::corpus_diagram;
use tkh_core::complex::AssembleOptions;
use tkh_core::cube::Resolver;
use tkh_core::{assemble_complex_with, homology_with, CubeVertex, Ring};

fn perf_diagrams(c: &mut Criterion) {
    // verify off: this measures the pipeline, not the self-check
    let opts = AssembleOptions {
        verify: false,
        ..AssembleOptions::default()
    };
    let mut group = c.benchmark_group("homology");
    group.sample_size(20);
    for name in [
        "perf/random_12x.tkh",
        "perf/annular_3_12x.tkh",
        "diagrams/figure_eight.tkh",
    ] {
        let d = corpus_diagram(name);
        for ring in [Ring::Z2, Ring::Z] {
            group.bench_with_input(BenchmarkId::new(ring.to_string(), name), &d, |b, d| {
                b.iter(|| homology_with(d, ring, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn assembly(c: &mut Criterion) {
    let d = corpus_diagram("perf/random_12x.tkh");
    let opts = AssembleOptions {
        verify: false,
        ..AssembleOptions::default()
    };
    c.bench_function("assemble/random_12x/Z", |b| {
        b.iter(|| assemble_complex_with(&d, Ring::Z, &opts).unwrap())
    });
    let verified = AssembleOptions::default();
    c.bench_function("assemble+verify/random_12x/Z", |b| {
        b.iter(|| assemble_complex_with(&d, Ring::Z, &verified).unwrap())
    });
}

fn resolution(c: &mut Criterion) {
    let d = corpus_diagram("perf/random_12x.tkh");
    let n = d.crossing_count();
    let resolver = Resolver::new(&d);
    c.bench_function("resolve/random_12x/all vertices", |b| {
        b.iter(|| {
            (0..1u32 << n)
                .map(|v| resolver.resolve(CubeVertex::new(v)).unwrap().circles.len())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, perf_diagrams, assembly, resolution);
criterion_main!(benches);
