use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mulattice::group::{enumerate_subgroups, group_from_spec};
use mulattice::theorems::{build_lattice_algebra, CosetPoset};

fn subgroup_enumeration(c: &mut Criterion) {
    for spec in ["S4", "C2xC2xC2xC2", "S5"] {
        let g = group_from_spec(spec, 384).unwrap();
        c.bench_function(&format!("enumerate_subgroups/{spec}"), |b| {
            b.iter(|| enumerate_subgroups(black_box(&g), 100_000).unwrap())
        });
    }
}

fn lattice_algebra(c: &mut Criterion) {
    for spec in ["S4", "A5"] {
        let g = group_from_spec(spec, 384).unwrap();
        c.bench_function(&format!("build_lattice_algebra/{spec}"), |b| {
            b.iter(|| build_lattice_algebra(black_box(g.clone()), 100_000).unwrap())
        });
    }
}

fn coset_mobius(c: &mut Criterion) {
    let g = group_from_spec("S4", 384).unwrap();
    let lattice = enumerate_subgroups(&g, 100_000).unwrap();
    c.bench_function("coset_poset_mobius/S4", |b| {
        b.iter(|| CosetPoset::new(black_box(&g), &lattice, 10_000).unwrap())
    });
}

criterion_group!(benches, subgroup_enumeration, lattice_algebra, coset_mobius);
criterion_main!(benches);
