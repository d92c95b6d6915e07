use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use spinwhit::catalog::validate_inf_char;
use spinwhit::gt::enumerate_patterns;
use spinwhit::lie::Representation;
use spinwhit::radial::shift_matrix;
use spinwhit::whittaker::derive_socle;
use spinwhit::{HalfInt, SpinWeight};

fn halves(t: &[i64]) -> Vec<HalfInt> {
    t.iter().map(|&x| HalfInt::from_twice(x)).collect()
}

fn gt(c: &mut Criterion) {
    let w = SpinWeight::from_ints(7, &[2, 1, 1]).unwrap();
    c.bench_function("enumerate_patterns Spin(7) (2,1,1)", |b| b.iter(|| enumerate_patterns(black_box(&w))));
}

fn lie(c: &mut Criterion) {
    let w = SpinWeight::from_twice(6, &[3, 1, 1]).unwrap();
    c.bench_function("all generators Spin(6) (3/2,1/2,1/2)", |b| {
        b.iter(|| {
            let mut rep = Representation::new(black_box(&w));
            for p in 2..=6 {
                for q in 1..p {
                    rep.generator(p, q).unwrap();
                }
            }
        })
    });
}

fn radial(c: &mut Criterion) {
    let w = SpinWeight::from_ints(6, &[3, 1, 0]).unwrap();
    let g = SpinWeight::from_ints(4, &[2, 0]).unwrap();
    c.bench_function("shift_matrix r=6 k=2", |b| b.iter(|| shift_matrix(black_box(&w), black_box(&g), 2).unwrap()));
}

fn whittaker(c: &mut Criterion) {
    let l6 = validate_inf_char(6, &halves(&[7, 3, 1])).unwrap();
    let g6 = SpinWeight::from_ints(4, &[0, 0]).unwrap();
    let l4 = validate_inf_char(4, &halves(&[5, 1])).unwrap();
    let g4 = SpinWeight::from_ints(2, &[1]).unwrap();
    c.bench_function("derive_socle r=4 even0", |b| b.iter(|| derive_socle(black_box(&l4), black_box(&g4)).unwrap()));
    c.bench_function("derive_socle r=6 even0i(2)", |b| b.iter(|| derive_socle(black_box(&l6), black_box(&g6)).unwrap()));
}

criterion_group!(benches, gt, lie, radial, whittaker);
criterion_main!(benches);
