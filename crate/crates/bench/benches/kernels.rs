use std::hint::black_box;

use cliqueline::collapse::{greedy_collapse, wheelfree_collapse};
use cliqueline::complex::line_clique_complex;
use cliqueline::homology::{leray_bound_check, reduced_homology, smith_normal_form};
use cliqueline_bench::{boundary, circulant_one_two, complete_line_complex, multipartite};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    for n in [5, 6, 7] {
        let m = boundary(&complete_line_complex(n), 2);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("K{n} d2")),
            &m,
            |b, m| b.iter(|| smith_normal_form(black_box(m))),
        );
    }
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduced_homology");
    for parts in [[2, 2, 2], [3, 3, 2], [3, 3, 3]] {
        let k = line_clique_complex(&multipartite(&parts));
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{parts:?}")),
            &k,
            |b, k| b.iter(|| reduced_homology(black_box(k))),
        );
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("line_clique_complex");
    for n in [8, 16, 30] {
        let g = circulant_one_two(n);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("C{n}(1,2)")),
            &g,
            |b, g| b.iter(|| line_clique_complex(black_box(g))),
        );
    }
    group.finish();
}

fn collapses(c: &mut Criterion) {
    let mut group = c.benchmark_group("collapse");
    for n in [8, 16, 30] {
        let g = circulant_one_two(n);
        group.bench_with_input(BenchmarkId::new("wheelfree", n), &g, |b, g| {
            b.iter(|| wheelfree_collapse(black_box(g)).expect("wheel-free"))
        });
        let k = line_clique_complex(&g);
        group.bench_with_input(BenchmarkId::new("greedy", n), &k, |b, k| {
            b.iter(|| greedy_collapse(black_box(k), Some(1)))
        });
    }
    group.finish();
}

fn leray(c: &mut Criterion) {
    let k = complete_line_complex(5);
    c.bench_function("leray K5 d3", |b| {
        b.iter(|| leray_bound_check(black_box(&k), 3, None).expect("10 vertices"))
    });
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(20);
    targets = snf, homology, construction, collapses, leray
}
criterion_main!(kernels);
