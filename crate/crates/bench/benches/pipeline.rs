use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nilcomplex_bench::{complex, family, sample_words};
use nilcomplex_core::complex::PASTING_RULE;
use nilcomplex_core::rewrite::reduce;
use nilcomplex_core::{Alphabet, BuildConfig, Complex, Labeling};

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for n in [3u32, 4, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| Complex::grow(black_box(n), BuildConfig::default(), &PASTING_RULE).unwrap())
        });
    }
    g.finish();
}

fn label(c: &mut Criterion) {
    let mut g = c.benchmark_group("label");
    for n in [3u32, 4, 5] {
        let cx = complex(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &cx, |b, cx| {
            b.iter(|| {
                let mut alpha = Alphabet::new();
                Labeling::new(black_box(cx), &mut alpha)
            })
        });
    }
    g.finish();
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations");
    g.sample_size(10);
    for n in [3u32, 4] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| family(black_box(n))));
    }
    g.finish();
}

fn rewrite(c: &mut Criterion) {
    let f = family(4);
    let words = sample_words(&f, 64);
    c.bench_function("reduce/64 windows", |b| {
        b.iter(|| {
            for w in &words {
                black_box(reduce(w, &f.relations, &f.rules, &f.alphabet, 10_000));
            }
        })
    });
}

criterion_group!(benches, build, label, relations, rewrite);
criterion_main!(benches);
