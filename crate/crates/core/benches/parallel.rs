//! Sequential versus parallel execution of the census, the maximizer search
//! and the lemma suites.

use std::hint::black_box;

use alpha_spectra::enumeration::{argmax_in, census, EnumOptions, SearchSpace, DEFAULT_TIE_TOL};
use alpha_spectra::exec::ExecMode;
use alpha_spectra::lemmas::{run_suite, Lemma, SuiteConfig};
use alpha_spectra::poly::rational;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_bicyclic_9");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| census(black_box(9), 2, EnumOptions { mode, ..EnumOptions::default() }).unwrap())
        });
    }
    group.finish();
}

fn bench_argmax(c: &mut Criterion) {
    let cen = census(10, 2, EnumOptions::default()).unwrap();
    let space = SearchSpace::new(10, 5, 2).unwrap();
    let alpha = rational(1, 2);
    let mut group = c.benchmark_group("argmax_B(10,5)");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| argmax_in(&cen, space, black_box(&alpha), DEFAULT_TIE_TOL, mode).unwrap())
        });
    }
    group.finish();
}

fn bench_lemmas(c: &mut Criterion) {
    let mut group = c.benchmark_group("graft_suite_50");
    group.sample_size(10);
    for (name, mode) in MODES {
        let cfg = SuiteConfig { instances: 50, mode, ..SuiteConfig::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| run_suite(Lemma::Graft, black_box(&cfg))));
    }
    group.finish();
}

criterion_group!(benches, bench_census, bench_argmax, bench_lemmas);
criterion_main!(benches);
