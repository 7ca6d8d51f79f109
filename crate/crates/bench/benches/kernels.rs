use criterion::{black_box, criterion_group, criterion_main, Criterion};

use virbialg_bench::{antisymmetric, degree_zero_tables, elements};
use virbialg_core::{bracket as lie_bracket, cybe_residual, inner_witness_window, Config};

fn bracket(c: &mut Criterion) {
    let xs = elements(1, 64, 6);
    c.bench_function("bracket 6x6 terms", |b| {
        b.iter(|| {
            for w in xs.windows(2) {
                black_box(lie_bracket(&w[0], &w[1]));
            }
        })
    });
}

fn cybe(c: &mut Criterion) {
    let rs = antisymmetric(2, 16, 3);
    c.bench_function("cybe residual", |b| {
        b.iter(|| {
            for r in &rs {
                black_box(cybe_residual(r));
            }
        })
    });
}

fn window_solve(c: &mut Criterion) {
    let tables = degree_zero_tables(3, 4);
    let cfg = Config::default();
    c.bench_function("degree-0 inner witness", |b| {
        b.iter(|| {
            for t in &tables {
                black_box(inner_witness_window(t, &cfg).unwrap());
            }
        })
    });
}

criterion_group!(benches, bracket, cybe, window_solve);
criterion_main!(benches);
