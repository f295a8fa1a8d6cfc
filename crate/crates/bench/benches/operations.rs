use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use ctxsort_core::analysis::{cdr_sortable_search, sweep_inputs, SearchOptions, StateSpace, Sweep};
use ctxsort_core::build_overlap_graph;
use ctxsort_core::games::{winner_by_minimax, GameState, Rule};
use ctxsort_core::ops::{applicable_cdr_moves, apply_cdr};
use ctxsort_core::perm::fixtures;

fn operations(c: &mut Criterion) {
    let mut group = c.benchmark_group("apply_cdr");
    for n in [16, 128, 1024] {
        let perm = sweep_inputs(n, Sweep::Samples { count: 1, seed: 7 }).remove(0);
        let moves = applicable_cdr_moves(&perm);
        group.bench_with_input(BenchmarkId::from_parameter(n), &perm, |b, p| {
            b.iter(|| {
                for &m in &moves {
                    black_box(apply_cdr(p, m).unwrap());
                }
            })
        });
    }
    group.finish();

    let mut group = c.benchmark_group("build_overlap_graph");
    for n in [16, 128, 1024] {
        let perm = sweep_inputs(n, Sweep::Samples { count: 1, seed: 7 }).remove(0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &perm, |b, p| {
            b.iter(|| build_overlap_graph(black_box(p)))
        });
    }
    group.finish();
}

fn analysis(c: &mut Criterion) {
    let alpha = fixtures()["u_pisces_1"].clone();
    c.bench_function("state_space/u_pisces_1", |b| {
        b.iter(|| StateSpace::cdr(black_box(&alpha), 10_000_000).len())
    });
    c.bench_function("search/u_pisces_1", |b| {
        b.iter(|| cdr_sortable_search(black_box(&alpha), SearchOptions::default()).is_reached())
    });
    let state = GameState::new(build_overlap_graph(&alpha), Rule::Normal);
    c.bench_function("minimax/u_pisces_1", |b| {
        b.iter(|| winner_by_minimax(black_box(&state), 10_000_000).unwrap())
    });
}

criterion_group!(benches, operations, analysis);
criterion_main!(benches);
