use criterion::{criterion_group, criterion_main, Criterion};
use primsync::catalog;
use primsync::graphs::{chromatic_number, clique_number};
use primsync::sync::nonsync_search;
use primsync::{Caps, Dfa};
use std::hint::black_box;

fn solvers(c: &mut Criterion) {
    let lk6 = catalog::graph("l-k6").unwrap();
    let o1 = catalog::graph("flags-o1").unwrap();
    c.bench_function("clique/L(K6) complement", |b| b.iter(|| clique_number(black_box(&lk6.complement()))));
    c.bench_function("chromatic/L(K6) complement", |b| b.iter(|| chromatic_number(black_box(&lk6.complement()))));
    c.bench_function("chromatic/flags O1", |b| b.iter(|| chromatic_number(black_box(&o1))));

    let caps = Caps::default();
    for name in ["grid", "flags-q2", "w2"] {
        let g = catalog::entry(name).unwrap().group;
        c.bench_function(&format!("nonsync_search/{name}"), |b| b.iter(|| nonsync_search(black_box(&g), &caps).unwrap()));
    }

    for n in [8, 12] {
        let d = Dfa::cerny(n).unwrap();
        c.bench_function(&format!("shortest_reset_word/cerny-{n}"), |b| {
            b.iter(|| d.shortest_reset_word(1 << 24).unwrap())
        });
    }
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = solvers
}
criterion_main!(benches);
