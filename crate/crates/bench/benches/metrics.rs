use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use polyhilbert::cone::{cone_from_polytope, lift};
use polyhilbert::horo::{busemann_from_line, detour_metric, enumerate_parts};
use polyhilbert::metric::{hilbert_cone, hilbert_cross_ratio};
use polyhilbert::shapes;
use polyhilbert::simplex::point_group;
use polyhilbert_bench::diagonal_points;

fn distances(c: &mut Criterion) {
    let square = shapes::square();
    let cone = cone_from_polytope(&square).unwrap();
    let pts = diagonal_points(16);
    let flat: Vec<_> = pts.iter().map(|p| p[..2].to_vec()).collect();
    c.bench_function("hilbert_cone square 16x16", |b| {
        b.iter(|| {
            for x in &pts {
                for y in &pts {
                    black_box(hilbert_cone(x, y, &cone).unwrap());
                }
            }
        })
    });
    c.bench_function("hilbert_cross_ratio square 16x16", |b| {
        b.iter(|| {
            for x in &flat {
                for y in &flat {
                    black_box(hilbert_cross_ratio(&square, x, y).unwrap());
                }
            }
        })
    });
}

fn horoboundary(c: &mut Criterion) {
    let square = shapes::square();
    let cone = cone_from_polytope(&square).unwrap();
    let base = lift(&square.centroid());
    let z = cone.boundary_faces().unwrap()[0].1.clone();
    let pts = diagonal_points(4);
    let g = busemann_from_line(&cone, &z, &pts[0], &base).unwrap();
    let h = busemann_from_line(&cone, &z, &pts[3], &base).unwrap();
    c.bench_function("detour_metric square facet", |b| b.iter(|| black_box(detour_metric(&g, &h).unwrap())));
    c.bench_function("enumerate_parts square", |b| b.iter(|| black_box(enumerate_parts(&cone).unwrap())));
    let cube = cone_from_polytope(&shapes::cube()).unwrap();
    c.bench_function("enumerate_parts cube", |b| b.iter(|| black_box(enumerate_parts(&cube).unwrap())));
}

fn groups(c: &mut Criterion) {
    c.bench_function("point_group n=4", |b| b.iter(|| black_box(point_group(4, true).unwrap().len())));
}

criterion_group!(benches, distances, horoboundary, groups);
criterion_main!(benches);
