use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qua_core::classify::{
    check_theorem_one, determinant_quadruples, formal_det, is_cp_highest_weight, partition_roots, ClearedDet,
};
use qua_core::modrep::WeightModuleWindow;
use qua_core::par::{par_map, set_parallel};
use qua_core::scalars::ToralScalar as T;
use qua_core::uq::identities::verify_identity;

fn seed() -> WeightModuleWindow {
    WeightModuleWindow::build_gwa(2, &[T::c(1), T::c(2), T::c(3)], 3, 3).unwrap()
}

fn grid() -> Vec<Vec<T>> {
    let mut vals = Vec::new();
    for a in -3..=3 {
        for b in 0..2 {
            let t = T::q_pow(a).mul(T::c(1).pow(b));
            vals.extend([t, t.neg()]);
        }
    }
    vals.iter().flat_map(|&x| vals.iter().map(move |&y| vec![x, y])).collect()
}

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", true), ("sequential", false)]
}

fn bench_modules(c: &mut Criterion) {
    let w = seed();
    let mut g = c.benchmark_group("module");
    g.sample_size(10);
    for (name, on) in modes() {
        set_parallel(on);
        g.bench_function(BenchmarkId::new("theorem-one", name), |b| b.iter(|| check_theorem_one(&w)));
        g.bench_function(BenchmarkId::new("partition", name), |b| b.iter(|| partition_roots(&w).unwrap()));
    }
    g.finish();
    set_parallel(true);
}

fn bench_grid(c: &mut Criterion) {
    let dets: Vec<ClearedDet> = determinant_quadruples(2).iter().map(|q| ClearedDet::new(&formal_det(q)).unwrap()).collect();
    let pts = grid();
    let mut g = c.benchmark_group("determinant-grid");
    g.sample_size(10);
    for (name, on) in modes() {
        set_parallel(on);
        g.bench_function(name, |b| {
            b.iter(|| par_map(&pts, |l| is_cp_highest_weight(l).matches == dets.iter().all(|d| d.is_zero_at(l))))
        });
    }
    g.finish();
    set_parallel(true);
}

fn bench_identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("identities");
    g.sample_size(10);
    for (name, on) in modes() {
        set_parallel(on);
        g.bench_function(BenchmarkId::new("four-index-n3", name), |b| b.iter(|| verify_identity("four-index", 3).unwrap()));
    }
    g.finish();
    set_parallel(true);
}

criterion_group!(benches, bench_modules, bench_grid, bench_identities);
criterion_main!(benches);
