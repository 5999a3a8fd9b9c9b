//! The natural representation of `U_q(gl_{n+1})` by explicit matrices.

use proptest::prelude::*;
use qua_core::modrep::{exterior_power_module, Outcome, Vector};
use qua_core::rootsys::convex_order;
use qua_core::scalars::{Params, Scalar};
use qua_core::uq::identities::{defining_relations, eval_free, Gen, GenMap};
use qua_core::uq::{parse_element, Element};

#[derive(Clone, Debug, PartialEq)]
struct Mat(Vec<Vec<Scalar>>);

impl Mat {
    fn zero(d: usize) -> Mat {
        Mat(vec![vec![Scalar::zero(); d]; d])
    }
    fn id(d: usize) -> Mat {
        let mut m = Mat::zero(d);
        for i in 0..d {
            m.0[i][i] = Scalar::one();
        }
        m
    }
    fn unit(d: usize, r: usize, c: usize) -> Mat {
        let mut m = Mat::zero(d);
        m.0[r][c] = Scalar::one();
        m
    }
    fn mul(&self, o: &Mat) -> Mat {
        let d = self.0.len();
        let mut m = Mat::zero(d);
        for i in 0..d {
            for k in 0..d {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..d {
                    m.0[i][j] = m.0[i][j].add(&self.0[i][k].mul(&o.0[k][j]));
                }
            }
        }
        m
    }
    fn add(&self, o: &Mat) -> Mat {
        Mat(self.0.iter().zip(&o.0).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect()).collect())
    }
    fn scale(&self, c: &Scalar) -> Mat {
        Mat(self.0.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect())
    }
    fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }
}

/// `E_i = e_{i,i+1}`, `F_i = e_{i+1,i}`, `Kb_j = diag(q^{delta_{jk}})`.
struct Natural(usize);

impl GenMap for Natural {
    type Elem = Mat;
    fn one(&self) -> Mat {
        Mat::id(self.0 + 1)
    }
    fn image(&self, g: Gen) -> Mat {
        let d = self.0 + 1;
        match g {
            Gen::E(i) => Mat::unit(d, i - 1, i),
            Gen::F(i) => Mat::unit(d, i, i - 1),
            Gen::Kb(j, p) => {
                let mut m = Mat::id(d);
                m.0[j - 1][j - 1] = Scalar::q_pow(p as i64);
                m
            }
        }
    }
    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        a.mul(b)
    }
    fn add(&self, a: &Mat, b: &Mat) -> Mat {
        a.add(b)
    }
    fn scale(&self, a: &Mat, c: &Scalar) -> Mat {
        a.scale(c)
    }
}

fn root_matrix(n: usize, a: usize, b: usize) -> Mat {
    let nat = Natural(n);
    let qi = Scalar::q_pow(-1);
    if a < b {
        if b == a + 1 {
            return nat.image(Gen::E(a));
        }
        let (h, t) = (root_matrix(n, a, a + 1), root_matrix(n, a + 1, b));
        t.mul(&h).scale(&qi).add(&h.mul(&t).scale(&Scalar::from_int(-1)))
    } else {
        let (a, b) = (b, a);
        if b == a + 1 {
            return nat.image(Gen::F(a));
        }
        let (h, t) = (root_matrix(n, a + 1, a), root_matrix(n, b, a + 1));
        h.mul(&t).scale(&Scalar::q()).add(&t.mul(&h).scale(&Scalar::from_int(-1)))
    }
}

/// Evaluates a normal-form element monomial by monomial.
fn matrix_of(x: &Element) -> Mat {
    let n = x.rank();
    let roots = convex_order(n);
    let nat = Natural(n);
    let mut acc = Mat::zero(n + 1);
    for (m, c) in x.terms() {
        let mut t = Mat::id(n + 1);
        for (b, &e) in m.f.iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&root_matrix(n, roots[b].j, roots[b].i));
            }
        }
        for (j, &p) in m.k.iter().enumerate() {
            t = t.mul(&nat.image(Gen::Kb(j + 1, p)));
        }
        for (b, &e) in m.e.iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&root_matrix(n, roots[b].i, roots[b].j));
            }
        }
        acc = acc.add(&t.scale(c));
    }
    acc
}

#[test]
fn relations_hold_in_the_natural_representation() {
    for n in 1..=3 {
        let nat = Natural(n);
        for r in defining_relations(n) {
            assert!(eval_free(&nat, &r.expr).is_zero(), "{} {:?}", r.check, r.indices);
        }
    }
}

#[test]
fn root_vectors_are_matrix_units_up_to_sign() {
    let n = 3;
    for r in convex_order(n) {
        for (a, b) in [(r.i, r.j), (r.j, r.i)] {
            let m = matrix_of(&Element::root_vector(n, qua_core::rootsys::Root::new(a, b)));
            let nonzero: Vec<(usize, usize)> =
                (0..=n).flat_map(|i| (0..=n).map(move |j| (i, j))).filter(|&(i, j)| !m.0[i][j].is_zero()).collect();
            assert_eq!(nonzero, vec![(a - 1, b - 1)]);
        }
    }
}

fn gens(n: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(Element::e(n, i));
        out.push(Element::f(n, i));
    }
    for j in 1..=n + 1 {
        out.push(Element::kbar(n, j, 1));
        out.push(Element::kbar(n, j, -1));
    }
    out
}

fn word(n: usize, idx: &[usize]) -> Element {
    let g = gens(n);
    idx.iter().fold(Element::one(n), |acc, &i| acc.mul(&g[i % g.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_matches_matrices(
        n in 1usize..=3,
        a in prop::collection::vec(0usize..64, 1..5),
        b in prop::collection::vec(0usize..64, 1..5),
    ) {
        let (x, y) = (word(n, &a), word(n, &b));
        let xy = x.mul(&y);
        prop_assert_eq!(matrix_of(&xy), matrix_of(&x).mul(&matrix_of(&y)));
    }

    #[test]
    fn table_action_matches_matrices(
        n in 1usize..=3,
        a in prop::collection::vec(0usize..64, 1..6),
        col in 0usize..4,
    ) {
        let x = word(n, &a).add(&word(n, &a[..a.len() / 2]).scale(&Scalar::q_pow(2)));
        let w = exterior_power_module(n, 1, &vec![1; n]);
        let col = col % (n + 1);
        // The natural module has basis e_1 .. e_{n+1}; point e_k carries a 1 in slot k.
        let point = |k: usize| w.index_of(&(0..=n).map(|s| (s == k) as i32).collect::<Vec<_>>()).unwrap();
        let out = match w.act(&x, &Vector::basis(point(col))).unwrap() {
            Outcome::Image(v) => v,
            Outcome::LeavesWindow(_) => unreachable!("finite module"),
        };
        let m = matrix_of(&x);
        for row in 0..=n {
            prop_assert_eq!(out.coeff(point(row)), m.0[row][col].clone());
        }
    }
}

#[test]
fn parsed_elements_match_matrices() {
    let p = Params::new(0).unwrap();
    let x = parse_element(2, "Ep(1,3) Em(1,3) - Em(1,3) Ep(1,3)", &p).unwrap();
    let d = Scalar::q().sub(&Scalar::q_pow(-1));
    let k = Element::kbar(2, 1, 1).mul(&Element::kbar(2, 3, -1)).sub(&Element::kbar(2, 1, -1).mul(&Element::kbar(2, 3, 1)));
    assert_eq!(matrix_of(&x), matrix_of(&k.scale(&d.inv().unwrap())));
    assert_eq!(x, k.scale(&d.inv().unwrap()));
}
