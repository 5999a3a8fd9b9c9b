//! Defining relations as free words, and the identity verifier.

use std::collections::HashMap;

use super::{algebra, Dir, Element};
use crate::par::par_map;
use crate::report::{CheckRecord, Report};
use crate::rootsys::Root;
use crate::scalars::{q_diff, qint, Scalar};

use super::UqError;

/// Generators of `U_q(gl_{n+1})`: `E_i`, `F_i`, `Kb_j^{p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    Kb(usize, i32),
}

/// A linear combination of words in the generators.
pub type FreeExpr = Vec<(Scalar, Vec<Gen>)>;

/// Anything the generators can be sent to.
pub trait GenMap {
    type Elem: Clone;
    fn one(&self) -> Self::Elem;
    fn image(&self, g: Gen) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Scalar) -> Self::Elem;
}

pub fn eval_free<M: GenMap>(m: &M, expr: &FreeExpr) -> M::Elem {
    let mut acc: Option<M::Elem> = None;
    for (c, word) in expr {
        let mut w = m.one();
        for g in word {
            w = m.mul(&w, &m.image(*g));
        }
        let w = m.scale(&w, c);
        acc = Some(match acc {
            None => w,
            Some(a) => m.add(&a, &w),
        });
    }
    acc.unwrap_or_else(|| m.scale(&m.one(), &Scalar::zero()))
}

pub fn gen_element(n: usize, g: Gen) -> Element {
    match g {
        Gen::E(i) => Element::e(n, i),
        Gen::F(i) => Element::f(n, i),
        Gen::Kb(j, p) => Element::kbar(n, j, p),
    }
}

/// The identity map into `U_q(gl_{n+1})`.
pub struct Identity(pub usize);

impl GenMap for Identity {
    type Elem = Element;
    fn one(&self) -> Element {
        Element::one(self.0)
    }
    fn image(&self, g: Gen) -> Element {
        gen_element(self.0, g)
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        a.mul(b)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }
    fn scale(&self, a: &Element, c: &Scalar) -> Element {
        a.scale(c)
    }
}

/// Generators sent through `T_i` or its inverse.
pub struct Braided {
    n: usize,
    images: HashMap<Gen, Element>,
}

impl Braided {
    pub fn new(n: usize, i: usize, dir: Dir) -> Self {
        let mut images = HashMap::new();
        for g in generators(n) {
            images.insert(g, gen_element(n, g).braid_t(i, dir));
        }
        Braided { n, images }
    }
}

impl GenMap for Braided {
    type Elem = Element;
    fn one(&self) -> Element {
        Element::one(self.n)
    }
    fn image(&self, g: Gen) -> Element {
        match self.images.get(&g) {
            Some(e) => e.clone(),
            None => panic!("no image for {g:?}"),
        }
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        a.mul(b)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }
    fn scale(&self, a: &Element, c: &Scalar) -> Element {
        a.scale(c)
    }
}

/// `E_i`, `F_i`, `Kb_j^{+-1}`.
pub fn generators(n: usize) -> Vec<Gen> {
    let mut v = Vec::new();
    for i in 1..=n {
        v.push(Gen::E(i));
        v.push(Gen::F(i));
    }
    for j in 1..=n + 1 {
        v.push(Gen::Kb(j, 1));
        v.push(Gen::Kb(j, -1));
    }
    v
}

fn w(c: Scalar, g: &[Gen]) -> (Scalar, Vec<Gen>) {
    (c, g.to_vec())
}

/// A named relation instance `lhs - rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub check: String,
    pub indices: Vec<usize>,
    pub expr: FreeExpr,
}

/// Every instance of the defining relations, grouped by tag
/// `rel1` (torus action), `rel2` (E-F commutator), `rel3` (far commutation), `serre`.
pub fn defining_relations(n: usize) -> Vec<Relation> {
    let one = Scalar::one;
    let m1 = || Scalar::from_int(-1);
    let mut out = Vec::new();
    for j in 1..=n + 1 {
        out.push(Relation {
            check: "rel1".into(),
            indices: vec![j, 0],
            expr: vec![w(one(), &[Gen::Kb(j, 1), Gen::Kb(j, -1)]), w(m1(), &[])],
        });
        for i in 1..=n {
            let e = (i == j) as i64 - (j == i + 1) as i64;
            out.push(Relation {
                check: "rel1".into(),
                indices: vec![j, i, 1],
                expr: vec![
                    w(one(), &[Gen::Kb(j, 1), Gen::E(i), Gen::Kb(j, -1)]),
                    w(Scalar::q_pow(e).neg(), &[Gen::E(i)]),
                ],
            });
            out.push(Relation {
                check: "rel1".into(),
                indices: vec![j, i, 2],
                expr: vec![
                    w(one(), &[Gen::Kb(j, 1), Gen::F(i), Gen::Kb(j, -1)]),
                    w(Scalar::q_pow(-e).neg(), &[Gen::F(i)]),
                ],
            });
        }
        for k in j + 1..=n + 1 {
            out.push(Relation {
                check: "rel1".into(),
                indices: vec![j, k, 3],
                expr: vec![w(one(), &[Gen::Kb(j, 1), Gen::Kb(k, 1)]), w(m1(), &[Gen::Kb(k, 1), Gen::Kb(j, 1)])],
            });
        }
    }
    let inv = q_diff().inv().expect("nonzero");
    for i in 1..=n {
        for j in 1..=n {
            let mut expr = vec![w(one(), &[Gen::E(i), Gen::F(j)]), w(m1(), &[Gen::F(j), Gen::E(i)])];
            if i == j {
                expr.push(w(inv.neg(), &[Gen::Kb(i, 1), Gen::Kb(i + 1, -1)]));
                expr.push(w(inv.clone(), &[Gen::Kb(i, -1), Gen::Kb(i + 1, 1)]));
            }
            out.push(Relation { check: "rel2".into(), indices: vec![i, j], expr });
        }
    }
    for i in 1..=n {
        for j in i + 2..=n {
            for (tag, a, b) in [(1, Gen::E(i), Gen::E(j)), (2, Gen::F(i), Gen::F(j))] {
                out.push(Relation {
                    check: "rel3".into(),
                    indices: vec![i, j, tag],
                    expr: vec![w(one(), &[a, b]), w(m1(), &[b, a])],
                });
            }
        }
    }
    let two = qint(2);
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) != 1 {
                continue;
            }
            for (tag, a, b) in [(1, Gen::E(i), Gen::E(j)), (2, Gen::F(i), Gen::F(j))] {
                out.push(Relation {
                    check: "serre".into(),
                    indices: vec![i, j, tag],
                    expr: vec![w(one(), &[a, a, b]), w(two.neg(), &[a, b, a]), w(one(), &[b, a, a])],
                });
            }
        }
    }
    out
}

pub const TAGS: &[&str] = &[
    "rel1",
    "rel2",
    "rel3",
    "serre",
    "T-morphism",
    "T-inverse",
    "braid",
    "TiTi1Ei",
    "root-vector",
    "simplified",
    "qg1",
    "qg2",
    "qg3",
    "qg4",
    "qg6",
    "qg7",
    "four-index",
    "Kij-comm",
];

type Thunk<'a> = Box<dyn Fn() -> Element + Sync + Send + 'a>;

struct Instance<'a> {
    check: String,
    indices: Vec<usize>,
    residual: Thunk<'a>,
}

fn inst<'a>(check: &str, indices: Vec<usize>, f: impl Fn() -> Element + Sync + Send + 'a) -> Instance<'a> {
    Instance { check: check.to_string(), indices, residual: Box::new(f) }
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            for k in j + 1..=n + 1 {
                v.push((i, j, k));
            }
        }
    }
    v
}

fn quads(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut v = Vec::new();
    for (i, j, k) in triples(n) {
        for l in k + 1..=n + 1 {
            v.push((i, j, k, l));
        }
    }
    v
}

fn bracket_k(n: usize, i: usize, j: usize) -> Element {
    let inv = q_diff().inv().expect("nonzero");
    Element::k_range(n, i, j, 1).sub(&Element::k_range(n, i, j, -1)).scale(&inv)
}

fn instances<'a>(tag: &str, n: usize, rels: &'a [Relation], braided: &'a [(usize, Dir, Braided)]) -> Vec<Instance<'a>> {
    let ep = move |a: usize, b: usize| Element::ep(n, a, b);
    let em = move |a: usize, b: usize| Element::em(n, a, b);
    let q = Scalar::q();
    let qi = Scalar::q_pow(-1);
    let qd = q_diff();
    let mut out = Vec::new();
    match tag {
        "rel1" | "rel2" | "rel3" | "serre" => {
            for r in rels.iter().filter(|r| r.check == tag) {
                out.push(inst(tag, r.indices.clone(), move || eval_free(&Identity(n), &r.expr)));
            }
        }
        "T-morphism" => {
            for (i, dir, map) in braided {
                for (t, r) in rels.iter().enumerate() {
                    let d = (*dir == Dir::Inverse) as usize;
                    out.push(inst(tag, vec![*i, d, t], move || eval_free(map, &r.expr)));
                }
            }
        }
        "T-inverse" => {
            for i in 1..=n {
                for (t, g) in generators(n).into_iter().enumerate() {
                    out.push(inst(tag, vec![i, t, 0], move || {
                        let x = gen_element(n, g);
                        x.braid_t(i, Dir::Forward).braid_t(i, Dir::Inverse).sub(&x)
                    }));
                    out.push(inst(tag, vec![i, t, 1], move || {
                        let x = gen_element(n, g);
                        x.braid_t(i, Dir::Inverse).braid_t(i, Dir::Forward).sub(&x)
                    }));
                }
            }
        }
        "braid" => {
            for i in 1..=n {
                for j in i + 1..=n {
                    for (t, g) in generators(n).into_iter().enumerate() {
                        out.push(inst(tag, vec![i, j, t], move || {
                            let x = gen_element(n, g);
                            let f = Dir::Forward;
                            if j == i + 1 {
                                let a = x.braid_t(i, f).braid_t(j, f).braid_t(i, f);
                                let b = x.braid_t(j, f).braid_t(i, f).braid_t(j, f);
                                a.sub(&b)
                            } else {
                                x.braid_t(i, f).braid_t(j, f).sub(&x.braid_t(j, f).braid_t(i, f))
                            }
                        }));
                    }
                }
            }
        }
        "TiTi1Ei" => {
            for i in 1..n {
                out.push(inst(tag, vec![i], move || {
                    let f = Dir::Forward;
                    Element::e(n, i).braid_t(i + 1, f).braid_t(i, f).sub(&Element::e(n, i + 1))
                }));
            }
        }
        "root-vector" => {
            for r in crate::rootsys::positive_roots(n) {
                out.push(inst(tag, vec![r.i, r.j, 1], move || {
                    Element::root_vector_by_word(n, r).sub(&Element::ep(n, r.i, r.j))
                }));
                out.push(inst(tag, vec![r.i, r.j, 2], move || {
                    Element::root_vector_by_word(n, r.neg()).sub(&Element::em(n, r.i, r.j))
                }));
            }
        }
        "simplified" => {
            for r in crate::rootsys::positive_roots(n) {
                for (s, pos) in [(1, true), (2, false)] {
                    out.push(inst(tag, vec![r.i, r.j, s], move || {
                        let mut v = if pos { Element::e(n, r.j - 1) } else { Element::f(n, r.j - 1) };
                        for t in (r.i..r.j - 1).rev() {
                            v = v.braid_t(t, Dir::Forward);
                        }
                        let target = if pos { Element::ep(n, r.i, r.j) } else { Element::em(n, r.i, r.j) };
                        v.sub(&target)
                    }));
                }
            }
        }
        "qg1" => {
            for (i, j, k) in triples(n) {
                let qi = qi.clone();
                out.push(inst(tag, vec![i, j, k], move || ep(i, k).add(&ep(i, j).qcommutator(&ep(j, k), &qi))));
            }
        }
        "qg2" => {
            for (i, j, k) in triples(n) {
                let q = q.clone();
                out.push(inst(tag, vec![i, j, k], move || em(i, k).add(&em(j, k).qcommutator(&em(i, j), &q))));
            }
        }
        "qg3" => {
            for (i, j, k) in triples(n) {
                let q = q.clone();
                out.push(inst(tag, vec![i, j, k, 1], move || {
                    let rhs = Element::k_range(n, j, k, -1).mul(&em(i, j)).scale(&q).neg();
                    ep(j, k).commutator(&em(i, k)).sub(&rhs)
                }));
                out.push(inst(tag, vec![i, j, k, 2], move || {
                    let rhs = Element::k_range(n, j, k, 1).mul(&ep(i, j)).neg();
                    ep(i, k).commutator(&em(j, k)).sub(&rhs)
                }));
            }
        }
        "qg4" => {
            for (i, j, k) in triples(n) {
                let qi = qi.clone();
                out.push(inst(tag, vec![i, j, k, 1], move || {
                    let rhs = Element::k_range(n, i, j, 1).mul(&em(j, k));
                    ep(i, j).commutator(&em(i, k)).sub(&rhs)
                }));
                out.push(inst(tag, vec![i, j, k, 2], move || {
                    let rhs = Element::k_range(n, i, j, -1).mul(&ep(j, k)).scale(&qi);
                    ep(i, k).commutator(&em(i, j)).sub(&rhs)
                }));
            }
        }
        "qg6" | "qg7" => {
            let pos = tag == "qg6";
            let g = move |a: usize, b: usize| if pos { Element::ep(n, a, b) } else { Element::em(n, a, b) };
            for (i, j, k) in triples(n) {
                let (q1, q2) = (qi.clone(), qi.clone());
                out.push(inst(tag, vec![i, j, k, 1], move || {
                    g(j, k).mul(&g(i, k)).sub(&g(i, k).mul(&g(j, k)).scale(&q1))
                }));
                out.push(inst(tag, vec![i, j, k, 2], move || {
                    g(i, k).mul(&g(i, j)).sub(&g(i, j).mul(&g(i, k)).scale(&q2))
                }));
            }
        }
        "four-index" => {
            for (i, j, k, l) in quads(n) {
                out.push(inst(tag, vec![i, j, k, l, 1], move || ep(i, j).commutator(&em(k, l))));
                out.push(inst(tag, vec![i, j, k, l, 2], move || ep(i, j).commutator(&ep(k, l))));
                out.push(inst(tag, vec![i, j, k, l, 3], move || ep(i, l).commutator(&ep(j, k))));
                let d = qd.clone();
                out.push(inst(tag, vec![i, j, k, l, 4], move || {
                    ep(i, k).commutator(&ep(j, l)).sub(&ep(i, l).mul(&ep(j, k)).scale(&d))
                }));
                let d = qd.clone();
                out.push(inst(tag, vec![i, j, k, l, 5], move || {
                    em(i, k).commutator(&em(j, l)).sub(&em(i, l).mul(&em(j, k)).scale(&d))
                }));
                let d = qd.clone();
                out.push(inst(tag, vec![i, j, k, l, 6], move || {
                    let rhs = Element::k_range(n, j, k, 1).mul(&em(k, l)).mul(&ep(i, j)).scale(&d).neg();
                    ep(i, k).commutator(&em(j, l)).sub(&rhs)
                }));
                let d = qd.clone();
                out.push(inst(tag, vec![i, j, k, l, 7], move || {
                    let rhs = Element::k_range(n, j, k, -1).mul(&ep(k, l)).mul(&em(i, j)).scale(&d);
                    ep(j, l).commutator(&em(i, k)).sub(&rhs)
                }));
            }
        }
        "Kij-comm" => {
            for r in crate::rootsys::positive_roots(n) {
                let Root { i, j } = r;
                out.push(inst(tag, vec![i, j], move || ep(i, j).commutator(&em(i, j)).sub(&bracket_k(n, i, j))));
            }
        }
        _ => {}
    }
    out
}

/// Checks every admissible instance of the identity `tag` in rank `n`.
pub fn verify_identity(tag: &str, n: usize) -> Result<Report, UqError> {
    if !TAGS.contains(&tag) {
        return Err(UqError::UnknownTag(tag.to_string()));
    }
    if n == 0 {
        return Err(UqError::BadIndex("rank must be at least 1".into()));
    }
    let _ = algebra(n);
    let rels = defining_relations(n);
    let braided: Vec<(usize, Dir, Braided)> = if tag == "T-morphism" {
        (1..=n)
            .flat_map(|i| [Dir::Forward, Dir::Inverse].map(|d| (i, d)))
            .map(|(i, d)| (i, d, Braided::new(n, i, d)))
            .collect()
    } else {
        Vec::new()
    };
    let insts = instances(tag, n, &rels, &braided);
    let records = par_map(&insts, |it| {
        let r = (it.residual)();
        CheckRecord::new(it.check.clone(), it.indices.clone(), r.to_string(), r.is_zero())
    });
    Ok(Report { records })
}

/// Runs every tag (or those in `only`) and concatenates the reports.
pub fn verify_all(n: usize, only: Option<&[String]>) -> Result<Report, UqError> {
    let mut rep = Report::default();
    for tag in TAGS {
        if let Some(o) = only {
            if !o.iter().any(|t| t == tag) {
                continue;
            }
        }
        rep.extend(verify_identity(tag, n)?);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations_rank_two() {
        for tag in ["rel1", "rel2", "rel3", "serre"] {
            let r = verify_identity(tag, 2).unwrap();
            assert!(r.all_pass(), "{tag}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn unknown_tag() {
        assert!(verify_identity("nope", 2).is_err());
    }
}
