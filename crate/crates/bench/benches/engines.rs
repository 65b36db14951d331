use criterion::{black_box, criterion_group, criterion_main, Criterion};
use levelone_core::ci::{self, CompleteIntersection};
use levelone_core::cover::CyclicCover;
use levelone_core::fano::{fano_class, CoverTarget};
use levelone_core::schubert::{GrassmannClass, GrassmannRing};

fn hodge(c: &mut Criterion) {
    let x = CompleteIntersection::new(9, &[2, 2, 2]).unwrap();
    c.bench_function("ci_hodge_diamond_9_222", |b| {
        b.iter(|| ci::hodge_diamond(black_box(&x)).unwrap())
    });
    let cover = CyclicCover::double(7, 6).unwrap();
    c.bench_function("cover_hodge_diamond_7_6", |b| {
        b.iter(|| black_box(&cover).hodge_diamond().unwrap())
    });
    c.bench_function("classify_11_8", |b| {
        b.iter(|| ci::classify_level_one(11, 8).unwrap())
    });
}

fn schubert(c: &mut Criterion) {
    c.bench_function("sigma1_power_g26", |b| {
        b.iter(|| {
            // fresh ring so the product cache starts cold
            let g = GrassmannRing::new(2, 6).unwrap();
            GrassmannClass::special(&g, 1).pow(12)
        })
    });
    let t = CoverTarget::double(2, 2, 1).unwrap();
    c.bench_function("fano_class_2_2_1", |b| {
        b.iter(|| fano_class(black_box(&t), None).unwrap())
    });
    let t = CoverTarget::double(5, 2, 2).unwrap();
    c.bench_function("fano_class_5_2_2", |b| {
        b.iter(|| fano_class(black_box(&t), None).unwrap())
    });
}

criterion_group!(benches, hodge, schubert);
criterion_main!(benches);
