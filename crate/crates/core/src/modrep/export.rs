use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Backend, ModError, ModuleKind, Point, Step, WeightModuleWindow};
use crate::scalars::{parse_scalar, Params, Scalar, ToralScalar};

#[derive(Serialize, Deserialize)]
struct PointRec {
    g: Point,
    weight: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ActionRec {
    gen: String,
    from: Point,
    to: Point,
    coef: String,
    inside: bool,
}

#[derive(Serialize, Deserialize)]
struct WindowRec {
    kind: ModuleKind,
    n: usize,
    radius: i32,
    params: Vec<String>,
    seed: Option<Vec<String>>,
    points: Vec<PointRec>,
    actions: Vec<ActionRec>,
}

/// Support, weights and every nonzero generator step, in point order.
pub fn window_to_json(w: &WeightModuleWindow) -> String {
    let points = w
        .points
        .iter()
        .zip(&w.weights)
        .map(|(g, wt)| PointRec { g: g.clone(), weight: wt.iter().map(|s| s.to_literal()).collect() })
        .collect();
    let mut actions = Vec::new();
    for p in 0..w.len() {
        for (gen, s) in w.generator_steps(p) {
            if let Step::To(t, c) = s {
                actions.push(ActionRec {
                    gen,
                    from: w.points[p].clone(),
                    inside: w.index.contains_key(&t),
                    to: t,
                    coef: c.to_literal(),
                });
            }
        }
    }
    let rec = WindowRec {
        kind: w.kind,
        n: w.n,
        radius: w.radius,
        params: (1..=w.params).map(|i| format!("c{i}")).collect(),
        seed: w.seed().map(|mu| mu.iter().map(|t| t.to_string()).collect()),
        points,
        actions,
    };
    serde_json::to_string_pretty(&rec).expect("window serializes")
}

fn parse_lit(s: &str, params: &Params) -> Result<Scalar, ModError> {
    parse_scalar(s, params).map_err(|e| ModError::Spec(format!("literal '{s}': {e}")))
}

fn gen_index(name: &str, head: char, n: usize) -> Result<usize, ModError> {
    let i: usize = name[1..].parse().map_err(|_| ModError::Spec(format!("bad generator '{name}'")))?;
    if !name.starts_with(head) || i == 0 || i > n {
        return Err(ModError::Spec(format!("bad generator '{name}'")));
    }
    Ok(i)
}

/// Inverse of [`window_to_json`].
pub fn window_from_json(text: &str) -> Result<WeightModuleWindow, ModError> {
    let rec: WindowRec = serde_json::from_str(text).map_err(|e| ModError::Spec(e.to_string()))?;
    let params = Params::from_names(&rec.params).map_err(|e| ModError::Spec(e.to_string()))?;
    let n = rec.n;
    let points: Vec<Point> = rec.points.iter().map(|p| p.g.clone()).collect();
    let mut weights = Vec::new();
    for p in &rec.points {
        if p.g.is_empty() || p.weight.len() != n + 1 {
            return Err(ModError::Spec("point record has the wrong shape".into()));
        }
        weights.push(p.weight.iter().map(|s| parse_lit(s, &params)).collect::<Result<Vec<_>, _>>()?);
    }
    let backend = match &rec.seed {
        Some(seed) => {
            let mu = seed
                .iter()
                .map(|s| {
                    parse_lit(s, &params)?.as_toral().ok_or_else(|| ModError::Spec(format!("seed entry '{s}' is not toral")))
                })
                .collect::<Result<Vec<ToralScalar>, _>>()?;
            Backend::Gwa { mu }
        }
        None => {
            let idx: std::collections::HashMap<&Point, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut e = vec![vec![Step::Zero; points.len()]; n];
            let mut f = vec![vec![Step::Zero; points.len()]; n];
            for a in &rec.actions {
                let p = *idx.get(&a.from).ok_or_else(|| ModError::Spec("action from unknown point".into()))?;
                let step = Step::To(a.to.clone(), parse_lit(&a.coef, &params)?);
                if a.gen.starts_with('E') {
                    e[gen_index(&a.gen, 'E', n)? - 1][p] = step;
                } else {
                    f[gen_index(&a.gen, 'F', n)? - 1][p] = step;
                }
            }
            Backend::Table { e, f }
        }
    };
    Ok(WeightModuleWindow::assemble(n, rec.kind, rec.radius, params.count(), backend, points, weights))
}

fn point_label(g: &[i32]) -> String {
    let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Graphviz rendering: nodes are support points, edges are generator steps
/// landing inside the window. Points with a step leaving the window are dashed.
pub fn window_to_dot(w: &WeightModuleWindow) -> String {
    let mut out = String::from("digraph module {\n");
    let mut edges = String::new();
    for p in 0..w.len() {
        let mut boundary = false;
        for (gen, s) in w.generator_steps(p) {
            if let Step::To(t, c) = s {
                match w.index.get(&t) {
                    Some(&q) => {
                        let _ = writeln!(edges, "  p{p} -> p{q} [label=\"{gen}: {}\"];", c.to_literal());
                    }
                    None => boundary = true,
                }
            }
        }
        let wt: Vec<String> = w.weights[p].iter().map(|s| s.to_literal()).collect();
        let style = if boundary { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  p{p} [label=\"{}\\n{}\"{style}];", point_label(&w.points[p]), wt.join(", "));
    }
    out.push_str(&edges);
    out.push_str("}\n");
    out
}
