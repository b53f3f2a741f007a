use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ultrareal::{
    hyper_ivt_root, ivt_grid_root, parse_poly, parse_rfunc, parse_seq, real_sqrt_with, sturm_count,
    GridSchedule, Polynomial, RFunc, Rational,
};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn pow2_recip(e: u32) -> Rational {
    Rational::new(1, 1i128 << e).unwrap()
}

fn bench_ivt_grid_root(c: &mut Criterion) {
    let f = parse_poly("x^3 - 2*x - 5").unwrap();
    let lo = q(-8, 1);
    let hi = q(8, 1);
    let mut group = c.benchmark_group("ivt_grid_root");
    for e in [16u32, 32, 64] {
        let width = pow2_recip(e);
        group.bench_function(format!("width_2^-{e}"), |b| {
            b.iter(|| ivt_grid_root(black_box(&f), &lo, &hi, &width).unwrap())
        });
    }
    group.finish();
}

fn bench_sturm_count(c: &mut Criterion) {
    // (x - 1)(x - 2)...(x - 8): dense integer roots stress the chain.
    let mut f = Polynomial::one();
    for r in 1..=8i64 {
        f = &f * &parse_poly(&format!("x - {r}")).unwrap();
    }
    let lo = q(-10, 1);
    let hi = q(10, 1);
    c.bench_function("sturm_count/eight_roots", |b| {
        b.iter(|| sturm_count(black_box(&f), &lo, &hi).unwrap())
    });
}

fn bench_real_sqrt(c: &mut Criterion) {
    let two = q(2, 1);
    let width = pow2_recip(32);
    c.bench_function("real_sqrt/2_to_2^-32", |b| {
        b.iter(|| real_sqrt_with(black_box(&two), &width).unwrap())
    });
}

fn bench_rfunc_arith(c: &mut Criterion) {
    let a = parse_rfunc("(3*w^4 + 2*w^2 - 7)/(w^3 + w + 1)").unwrap();
    let b_ = parse_rfunc("(w^5 - 4*w + 1)/(2*w^2 + 3)").unwrap();
    c.bench_function("rfunc/mul_then_add", |bench| {
        bench.iter(|| {
            let p = black_box(&a) * black_box(&b_);
            &p + &a
        })
    });
    c.bench_function("rfunc/shadow", |bench| {
        let limited = parse_rfunc("(3*w + 1)/(w + 2)").unwrap();
        bench.iter(|| black_box(&limited).shadow().unwrap())
    });
}

fn bench_seq_compare(c: &mut Criterion) {
    let a = parse_seq("1/n").unwrap();
    let b_ = parse_seq("1/(n+1)").unwrap();
    c.bench_function("seq_compare/reciprocals", |bench| {
        bench.iter(|| black_box(&a).compare(black_box(&b_)).unwrap())
    });
    let alt_a = parse_seq("alt{1/n; 2 + 1/n; 3}").unwrap();
    let alt_b = parse_seq("alt{0; 2; 3 - 1/n}").unwrap();
    c.bench_function("seq_compare/period_three", |bench| {
        bench.iter(|| black_box(&alt_a).compare(black_box(&alt_b)).unwrap())
    });
}

fn bench_hyper_ivt(c: &mut Criterion) {
    // x^2 - (2 + 1/w) over (0, 2): the residual stays a nonzero infinitesimal.
    let perturbed = &RFunc::from(q(2, 1)) + &parse_rfunc("1/w").unwrap();
    let f = Polynomial::from_coeffs(vec![
        -&perturbed,
        RFunc::from(q(0, 1)),
        RFunc::from(q(1, 1)),
    ]);
    let lo = q(0, 1);
    let hi = q(2, 1);
    let schedule = GridSchedule::powers_of_two(8);
    c.bench_function("hyper_ivt/8_levels", |b| {
        b.iter(|| hyper_ivt_root(black_box(&f), &lo, &hi, &schedule).unwrap())
    });
}

criterion_group!(
    benches,
    bench_ivt_grid_root,
    bench_sturm_count,
    bench_real_sqrt,
    bench_rfunc_arith,
    bench_seq_compare,
    bench_hyper_ivt,
);
criterion_main!(benches);
