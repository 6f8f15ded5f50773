use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use giwb_bench::random_graphs;
use giwb_core::gamma::{gamma_closed, gamma_oracle};
use giwb_core::harness::{scan, Check, ScanConfig, Source};
use giwb_core::invariants::{invariant_suite, stability_number};

fn alpha(c: &mut Criterion) {
    let mut group = c.benchmark_group("stability_number");
    for n in [16, 32, 64] {
        let graphs = random_graphs(16, n, 0.3, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(stability_number).sum::<usize>())
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let graphs = random_graphs(16, 12, 0.5, 2);
    c.bench_function("invariant_suite/12", |b| {
        b.iter(|| graphs.iter().map(invariant_suite).count())
    });
}

fn scan_six(c: &mut Criterion) {
    let config = ScanConfig {
        source: Source::Enumerate {
            n: 6,
            connected_only: false,
            dedup: false,
        },
        checks: Check::ALL.iter().map(|c| c.name().to_string()).collect(),
        shard_count: 1,
    };
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    group.bench_function("all-checks/6", |b| b.iter(|| scan(&config).unwrap().graphs));
    group.finish();
}

fn gamma(c: &mut Criterion) {
    c.bench_function("gamma/closed", |b| {
        b.iter(|| gamma_closed(black_box(12), black_box(40)).unwrap())
    });
    c.bench_function("gamma/oracle", |b| {
        b.iter(|| gamma_oracle(black_box(12), black_box(40)).unwrap())
    });
}

criterion_group!(benches, alpha, suite, scan_six, gamma);
criterion_main!(benches);
