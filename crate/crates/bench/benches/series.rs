use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use nquot_core::exp::exp_reformulation;
use nquot_core::measure::{HodgeDeligne, MotivicMeasure};
use nquot_core::strata::oracle_series;
use nquot_core::zeta::main_series_parallel;
use nquot_core::{main_series, QuotSeriesConfig};

fn product_formula(c: &mut Criterion) {
    let mut group = c.benchmark_group("main_series");
    for (r, d, cap) in [(2, 2, 5), (3, 2, 5), (3, 3, 4)] {
        let cfg = QuotSeriesConfig::uniform(r, d, cap).unwrap();
        let id = format!("r{r}_d{d}_cap{cap}");
        group.bench_with_input(BenchmarkId::new("sequential", &id), &cfg, |b, cfg| {
            b.iter(|| main_series(black_box(cfg)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", &id), &cfg, |b, cfg| {
            b.iter(|| main_series_parallel(black_box(cfg)).unwrap())
        });
    }
    group.finish();
}

fn strata_oracle(c: &mut Criterion) {
    let cfg = QuotSeriesConfig::uniform(3, 3, 4).unwrap();
    c.bench_function("oracle_series r3_d3_cap4", |b| {
        b.iter(|| oracle_series(black_box(&cfg)).unwrap())
    });
}

fn exponential(c: &mut Criterion) {
    let cfg = QuotSeriesConfig::uniform(3, 2, 5).unwrap();
    c.bench_function("exp_reformulation r3_d2_cap5", |b| {
        b.iter(|| exp_reformulation(black_box(&cfg)).unwrap())
    });
}

fn hodge_deligne_lift(c: &mut Criterion) {
    let cfg = QuotSeriesConfig::uniform(2, 2, 5).unwrap();
    let series = main_series(&cfg).unwrap();
    c.bench_function("hodge_deligne lift g3 r2_d2_cap5", |b| {
        b.iter(|| HodgeDeligne { genus: 3 }.lift(black_box(&series)))
    });
}

criterion_group!(benches, product_formula, strata_oracle, exponential, hodge_deligne_lift);
criterion_main!(benches);
