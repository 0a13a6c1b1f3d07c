use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use toricode::codes::{minimum_distance, DEFAULT_MAX_MESSAGES};
use toricode::groebner::buchberger;
use toricode::vanishing::{affine_cellular_ideal, enumerate_orbit_points, Region};
use toricode::{Budget, EvaluationCode, Ideal, MonomialOrder};
use toricode_bench::hirzebruch;

fn groebner(c: &mut Criterion) {
    let toric = hirzebruch(3, 2);
    let ring = toric.ring().clone();
    let gens = Ideal::parse(
        &ring,
        &[
            "x_1^3*x_3-x_1*x_3^3",
            "x_1*x_2*x_4^3-x_1^5*x_2^3*x_4",
            "x_2*x_3*x_4^3-x_2^3*x_3^5*x_4",
            "x_1*x_2+x_3*x_4",
        ],
    )
    .unwrap()
    .gens()
    .to_vec();
    let order = MonomialOrder::grevlex(4);
    c.bench_function("buchberger H_2 F_3", |b| {
        b.iter(|| buchberger(&ring, black_box(&gens), &order, &Budget::default()).unwrap())
    });
}

fn cellular(c: &mut Criterion) {
    let toric = hirzebruch(5, 3);
    c.bench_function("affine cellular H_3 F_5", |b| {
        b.iter(|| affine_cellular_ideal(black_box(toric.ring()), Budget::default()).unwrap())
    });
}

fn distance(c: &mut Criterion) {
    let toric = hirzebruch(3, 1);
    let orbits = enumerate_orbit_points(&toric, &Region::OutsideIrrelevant, 10_000).unwrap();
    let code =
        EvaluationCode::on_orbits(toric.ring(), &orbits, &[2, 1], None, DEFAULT_MAX_MESSAGES)
            .unwrap();
    let field = code.field().clone();
    let rows = code.matrix().to_vec();
    c.bench_function("minimum distance H_1 F_3 (2,1)", |b| {
        b.iter(|| minimum_distance(&field, black_box(&rows), DEFAULT_MAX_MESSAGES).unwrap())
    });
}

criterion_group!(benches, groebner, cellular, distance);
criterion_main!(benches);
