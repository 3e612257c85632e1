use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use qmock_core::special::{rank_series, standard_catalog};
use qmock_core::verify::{registry, verify_list, verify_list_parallel};
use qmock_core::algebra::int;
use qmock_core::WValue;

fn expansions(c: &mut Criterion) {
    let cat = standard_catalog();
    let mut g = c.benchmark_group("expand");
    for name in ["f", "R", "g2", "K1"] {
        for order in [16, 32] {
            g.bench_with_input(BenchmarkId::new(name, order), &order, |b, &n| {
                b.iter(|| cat.series(name, &WValue::Symbolic, black_box(n)).unwrap())
            });
        }
    }
    g.bench_function("g3_3 inverted/16", |b| {
        b.iter(|| cat.series_inverted("g3_3", &WValue::Symbolic, black_box(16)).unwrap())
    });
    g.bench_function("R at w=1, order 64", |b| b.iter(|| rank_series(&WValue::At(int(1)), black_box(64)).unwrap()));
    g.finish();
}

fn verification(c: &mut Criterion) {
    let cat = standard_catalog();
    let idents = registry();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("all/12 sequential", |b| b.iter(|| verify_list(cat, &idents, 12, 2, 42)));
    g.bench_function("all/12 parallel", |b| b.iter(|| verify_list_parallel(cat, &idents, 12, 2, 42)));
    g.finish();
}

criterion_group!(benches, expansions, verification);
criterion_main!(benches);
