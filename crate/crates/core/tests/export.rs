mod common;

use common::*;
use qua_core::modrep::{
    decompose_pullback, exterior_power_module, lq1_example_module, window_from_json, window_to_dot, window_to_json,
    WeightModuleWindow,
};

fn fock_low(max_m: i64) -> WeightModuleWindow {
    let w = fock(2, 3);
    let keep: Vec<usize> = decompose_pullback(&w).unwrap().into_iter().filter(|p| p.m <= max_m).flat_map(|p| p.points).collect();
    w.restrict(&keep)
}

#[test]
fn dot_of_low_fock_pieces_has_ten_nodes() {
    let dot = window_to_dot(&fock_low(2));
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    assert_eq!(nodes, 10);
    assert!(dot.starts_with("digraph module {"));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn empty_window_is_an_empty_graph() {
    let w = fock(2, 2).restrict(&[]);
    assert_eq!(window_to_dot(&w), "digraph module {\n}\n");
    let back = window_from_json(&window_to_json(&w)).unwrap();
    assert_eq!(back, w);
}

#[test]
fn json_round_trip() {
    let windows = vec![
        fock_low(2),
        WeightModuleWindow::build_gwa(2, &[c(1), c(2), q(-1)], 2, 2).unwrap(),
        hw_window(&[c(1), one()], 3),
        exterior_power_module(3, 2, &[1, -1, 1]),
        lq1_example_module(4),
    ];
    for w in windows {
        let text = window_to_json(&w);
        let back = window_from_json(&text).unwrap();
        assert_eq!(back, w);
        assert_eq!(window_to_json(&back), text);
    }
}

#[test]
fn output_is_stable_across_parallelism() {
    let w = WeightModuleWindow::build_gwa(2, &[c(1), one(), one()], 3, 1).unwrap();
    qua_core::par::set_parallel(false);
    let (a, b) = (window_to_json(&w), window_to_dot(&w));
    qua_core::par::set_parallel(true);
    assert_eq!(a, window_to_json(&w));
    assert_eq!(b, window_to_dot(&w));
}

#[test]
fn edges_carry_coefficients() {
    let dot = window_to_dot(&lq1_example_module(3));
    assert!(dot.contains("p0 -> p1 [label=\"F1: 1\"]"));
    let three = qua_core::scalars::qint(3).to_literal();
    assert!(dot.contains(&format!("p2 -> p3 [label=\"F1: {three}\"]")));
    assert!(dot.contains("style=dashed"));
}
