use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ramified::poly::ratio;
use ramified::{
    cyclic_unbranched_extension, decompose_poly, exemplar, galois_closure, generate_group, invert_chebyshev,
    ritt_verdict, solve_quartic_pencil, ExemplarSpec, FamilyTag, RadicalExpr, Tracked, DEFAULT_CAP,
};
use ramified_bench::{composite_sextic, generic_quartic, six_transpositions, symmetric_six};

fn groups(c: &mut Criterion) {
    let icosa = exemplar(&ExemplarSpec::new(FamilyTag::Icosa235, 0)).unwrap();
    c.bench_function("generate regular A5", |b| {
        b.iter(|| generate_group(black_box(&icosa.perms()), DEFAULT_CAP).unwrap())
    });
    let s6 = symmetric_six();
    c.bench_function("galois closure of S6 action", |b| {
        b.iter(|| galois_closure(black_box(&s6), DEFAULT_CAP).unwrap())
    });
    c.bench_function("exemplar torus236 m=3", |b| {
        b.iter(|| exemplar(black_box(&ExemplarSpec::new(FamilyTag::Torus236, 3))).unwrap())
    });
    let base = six_transpositions();
    c.bench_function("cyclic extension d=5", |b| b.iter(|| cyclic_unbranched_extension(black_box(&base), 5).unwrap()));
}

fn radicals(c: &mut Criterion) {
    let quartic = generic_quartic();
    c.bench_function("quartic by pencil", |b| b.iter(|| solve_quartic_pencil(black_box(&quartic)).unwrap()));
    let w = RadicalExpr::rational(ratio(1, 3));
    c.bench_function("invert P7 and evaluate", |b| b.iter(|| invert_chebyshev(7, black_box(&w)).eval_multi().unwrap()));
    let p = composite_sextic();
    c.bench_function("decompose sextic", |b| b.iter(|| decompose_poly(black_box(&p))));
    c.bench_function("ritt preimages of sextic", |b| {
        b.iter(|| ritt_verdict(black_box(&p)).unwrap().preimages(&Tracked::int(2)).unwrap())
    });
}

criterion_group!(benches, groups, radicals);
criterion_main!(benches);
