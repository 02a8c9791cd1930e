use criterion::{black_box, criterion_group, criterion_main, Criterion};

use wfs_bench::graph_maps;
use wfs_core::cisinski::{lambda, standard, LambdaConfig};
use wfs_core::{box_rel, soa_factorize, Bounds, Flavor};

const CAP: u64 = 1_000_000;

fn lifting(c: &mut Criterion) {
    let ex = standard::rsrel();
    let maps = graph_maps(3);
    c.bench_function("box_rel generators x graph maps (<= 3 vertices)", |b| {
        b.iter(|| {
            let mut n = 0;
            for g in &maps {
                for f in &ex.generators {
                    n += box_rel(&Flavor::Graph, f, g, CAP).unwrap() as usize;
                }
            }
            black_box(n)
        })
    });
    c.bench_function("small object argument (<= 3 vertices)", |b| {
        b.iter(|| {
            for f in &maps {
                black_box(soa_factorize(&Flavor::Graph, f, &ex.generators, Bounds::default()).unwrap());
            }
        })
    });
}

fn generators(c: &mut Criterion) {
    let ex = standard::rsrel();
    c.bench_function("graph generator levels, depth 2", |b| {
        b.iter(|| black_box(lambda(&ex.cylinder, &ex.s, &ex.generators, LambdaConfig::default()).unwrap()))
    });
    let cat = standard::cat();
    c.bench_function("category generator levels, depth 2", |b| {
        b.iter(|| black_box(lambda(&cat.cylinder, &cat.s, &cat.generators, LambdaConfig::default()).unwrap()))
    });
}

fn equivalences(c: &mut Criterion) {
    let ex = standard::rsrel();
    let ctx = ex.model(2, Bounds::default()).unwrap();
    let maps = graph_maps(3);
    let mut group = c.benchmark_group("weak equivalences");
    group.sample_size(10);
    group.bench_function("graph maps (<= 3 vertices)", |b| {
        b.iter(|| {
            for f in &maps {
                black_box(ctx.weq(f).unwrap());
            }
        })
    });
    group.finish();
}

criterion_group!(benches, lifting, generators, equivalences);
criterion_main!(benches);
