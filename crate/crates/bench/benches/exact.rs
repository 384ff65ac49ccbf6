use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use filiform_bench::{catalog_algebra, structure_basis};
use filiform_core::catalog::FamilySpec;
use filiform_core::exactnum::{int, rad_sqrt_rational, rat};
use filiform_core::linalg::rank;
use filiform_core::tgs::{graded_tgs_search, SearchOptions};
use filiform_core::{m01, m03, InnerProduct, Matrix};

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [9, 12, 15] {
        let g = catalog_algebra(&FamilySpec::v(n));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| g.jacobi_check().is_ok()));
    }
    group.finish();
}

fn rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for k in [4, 6, 8] {
        let m = m03::build_ktriple(k).unwrap().combination(&[int(3), rat(-2, 5), int(7)]);
        group.bench_with_input(BenchmarkId::from_parameter(2 * k - 1), &m, |b, m: &Matrix<_>| b.iter(|| rank(m)));
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("graded_search");
    group.sample_size(10);
    for n in [8, 10, 12] {
        let g = catalog_algebra(&FamilySpec::m0(n));
        let ip = InnerProduct::identity(n);
        let basis = structure_basis(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| graded_tgs_search(&g, &ip, &basis, SearchOptions::default()).unwrap().max_dim)
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct_m01");
    group.sample_size(10);
    for k in [3, 4, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| m01::construct(k, None).unwrap().report.all_passed())
        });
    }
    group.finish();
}

fn radnum(c: &mut Criterion) {
    let x = rad_sqrt_rational(&rat(8, 3)).unwrap() + rad_sqrt_rational(&int(5)).unwrap();
    let y = rad_sqrt_rational(&rat(1, 3)).unwrap() - rad_sqrt_rational(&int(7)).unwrap();
    c.bench_function("radnum_mul", |b| b.iter(|| black_box(&x).clone() * black_box(&y)));
    c.bench_function("radnum_inverse", |b| b.iter(|| filiform_core::exactnum::rad_inverse(black_box(&x)).unwrap()));
}

criterion_group!(benches, jacobi, rref, search, construction, radnum);
criterion_main!(benches);
