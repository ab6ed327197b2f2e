use std::hint::black_box;

use chessboard_core::homology::{boundary_matrix, rank_dense, rank_sparse};
use chessboard_core::invariants::{betti_table_hochster, betti_table_koszul};
use chessboard_core::{Board, FieldSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn ranks(c: &mut Criterion) {
    let mut group = c.benchmark_group("boundary-rank");
    let cx = Board::new(4, 5).unwrap().chessboard_complex();
    for d in 1..=3 {
        for field in [FieldSpec::gf2(), FieldSpec::large()] {
            let m = boundary_matrix(&cx, d, field);
            let label = format!("d{d}-p{}", field.characteristic());
            if m.rows() * m.cols() <= 1 << 20 {
                group.bench_with_input(BenchmarkId::new("dense", &label), &m, |b, m| {
                    b.iter(|| rank_dense(black_box(m), field))
                });
            }
            group.bench_with_input(BenchmarkId::new("sparse", &label), &m, |b, m| {
                b.iter(|| rank_sparse(black_box(m), field))
            });
        }
    }
    group.finish();
}

fn betti_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    group.sample_size(10);
    let field = FieldSpec::large();
    for (m, n) in [(2, 4), (3, 3), (3, 4)] {
        let i = Board::new(m, n).unwrap().facet_ideal();
        let id = format!("F({m},{n})");
        group.bench_with_input(BenchmarkId::new("koszul", &id), &i, |b, i| {
            b.iter(|| betti_table_koszul(black_box(i), field).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("hochster", &id), &i, |b, i| {
            b.iter(|| betti_table_hochster(black_box(i), field).unwrap())
        });
    }
    for (n, t) in [(3, 2), (3, 3), (4, 2)] {
        let i = Board::new(2, n).unwrap().facet_ideal().power(t).unwrap();
        group.bench_with_input(BenchmarkId::new("koszul-power", format!("F(2,{n})^{t}")), &i, |b, i| {
            b.iter(|| betti_table_koszul(black_box(i), field).unwrap())
        });
    }
    let sr = Board::new(3, 4).unwrap().stanley_reisner_ideal();
    group.bench_function("hochster/SR(3,4)", |b| {
        b.iter(|| betti_table_hochster(black_box(&sr), field).unwrap())
    });
    group.finish();
}

criterion_group!(benches, ranks, betti_sweeps);
criterion_main!(benches);
