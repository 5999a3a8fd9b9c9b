#![allow(dead_code)]

use qua_core::modrep::{decompose_pullback, highest_weight_module, WeightModuleWindow};
use qua_core::rootsys::convex_order;
use qua_core::scalars::{Scalar, ToralScalar as T};
use qua_core::uq::Element;

pub fn c(j: usize) -> T {
    T::c(j)
}

pub fn q(k: i32) -> T {
    T::q_pow(k)
}

pub fn one() -> T {
    T::one()
}

pub fn lits(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_literal()).collect()
}

pub fn fock(n: usize, radius: i32) -> WeightModuleWindow {
    WeightModuleWindow::build_gwa(n, &vec![one(); n + 1], radius, 0).unwrap()
}

/// The fully contained graded pieces of a Fock window, as their own windows.
pub fn fock_pieces(n: usize, radius: i32) -> Vec<(i64, WeightModuleWindow)> {
    let w = fock(n, radius);
    decompose_pullback(&w)
        .unwrap()
        .into_iter()
        .filter(|p| !p.truncated)
        .map(|p| (p.m, w.restrict(&p.points)))
        .collect()
}

pub fn seeds_rank_two() -> Vec<Vec<T>> {
    vec![vec![c(1), one(), one()], vec![c(1), c(2), one()], vec![c(1), c(2), c(3)]]
}

pub fn seed_windows(radius: i32) -> Vec<WeightModuleWindow> {
    seeds_rank_two().iter().map(|s| WeightModuleWindow::build_gwa(2, s, radius, 3).unwrap()).collect()
}

/// Highest weights from every family for `n <= 3`, leaving out the middle
/// exterior powers, which are listed separately.
pub fn highest_weights() -> Vec<Vec<T>> {
    let adj = |a: T| a.inv().shift_q(-1);
    vec![
        vec![c(1)],
        vec![q(1)],
        vec![one()],
        vec![q(1).neg()],
        vec![c(1), one()],
        vec![one(), c(1)],
        vec![q(1), one()],
        vec![one(), q(1)],
        vec![one().neg(), one()],
        vec![c(1), adj(c(1))],
        vec![c(1), one(), one()],
        vec![one(), one(), c(1)],
        vec![q(1), one(), one()],
        vec![one(), one(), q(1).neg()],
        vec![one(), c(1), adj(c(1))],
        vec![c(1), adj(c(1)), one()],
    ]
}

pub fn middle_exterior_weights() -> Vec<Vec<T>> {
    vec![vec![one(), q(1), one()]]
}

pub fn hw_window(lambda: &[T], radius: i32) -> WeightModuleWindow {
    highest_weight_module(lambda.len(), lambda, radius, 1).unwrap()
}

/// `sum (j - i) * exponent` over the root letters of the heaviest term.
pub fn letter_degree(x: &Element) -> u32 {
    let roots = convex_order(x.rank());
    x.terms()
        .map(|(m, _)| {
            let h = |b: usize| (roots[b].j as i64 - roots[b].i as i64).unsigned_abs() as u32;
            (0..roots.len()).map(|b| h(b) * (m.f[b] as u32 + m.e[b] as u32)).sum()
        })
        .max()
        .unwrap_or(0)
}

/// Nonnegative integer vectors of length `len` summing to `m`, by enumeration.
pub fn compositions(len: usize, m: i32) -> Vec<Vec<i32>> {
    if len == 1 {
        return vec![vec![m]];
    }
    (0..=m)
        .flat_map(|a| {
            compositions(len - 1, m - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}
