use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use mirrorforge::{frob, ifun, loc, rmat, Theory};
use mirrorforge_bench::{genus_one_pipeline, ORDERS};

fn itable(c: &mut Criterion) {
    let mut g = c.benchmark_group("ipq_table");
    for &n in ORDERS {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| ifun::ipq_table(5, 5, black_box(n), Theory::Twisted).unwrap())
        });
    }
    g.finish();
}

fn frame(c: &mut Criterion) {
    let mut g = c.benchmark_group("frame");
    g.sample_size(10);
    for &n in ORDERS {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| frob::build_frame(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn r1(c: &mut Criterion) {
    let mut g = c.benchmark_group("r1");
    g.sample_size(10);
    for &n in ORDERS {
        let fr = frob::build_frame(n + 1).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &fr, |b, fr| {
            b.iter(|| rmat::build_r1(fr, &rmat::default_constants()).unwrap())
        });
    }
    g.finish();
}

fn f1(c: &mut Criterion) {
    let mut g = c.benchmark_group("f1");
    g.sample_size(10);
    for &n in ORDERS {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| genus_one_pipeline(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn residues(c: &mut Criterion) {
    c.bench_function("residue_pairs 15", |b| {
        b.iter(|| loc::residue_pairs(black_box(15), Theory::Twisted).unwrap())
    });
}

criterion_group!(benches, itable, frame, r1, f1, residues);
criterion_main!(benches);
