//! Lusztig automorphisms `T_i` and their inverses.

use std::sync::Arc;

use super::{algebra, Element, Monomial, Uq};
use crate::scalars::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dir {
    Forward,
    Inverse,
}

impl Uq {
    /// Image of a single root-vector letter under `T_i` or `T_i^{-1}`.
    fn t_letter(&self, i: usize, dir: Dir, is_e: bool, beta: usize) -> Arc<Element> {
        let inv = dir == Dir::Inverse;
        let key = (i, inv, is_e, beta as u16);
        if let Some(r) = self.t_memo.get(&key) {
            return r.clone();
        }
        let n = self.n;
        let r = self.roots[beta];
        let (a, b) = (r.i, r.j);
        let qi = Scalar::q_pow(-1);
        let q = Scalar::q();
        let out = if b == a + 1 {
            let j = a;
            let (ei, fi, ej, fj) = (Element::e(n, i), Element::f(n, i), Element::e(n, j), Element::f(n, j));
            if j == i {
                match (is_e, inv) {
                    (true, false) => fi.mul(&Element::k(n, i, 1)).neg(),
                    (true, true) => Element::k(n, i, -1).mul(&fi).neg(),
                    (false, false) => Element::k(n, i, -1).mul(&ei).neg(),
                    (false, true) => ei.mul(&Element::k(n, i, 1)).neg(),
                }
            } else if j + 1 == i || i + 1 == j {
                match (is_e, inv) {
                    (true, false) => ej.mul(&ei).scale(&qi).sub(&ei.mul(&ej)),
                    (true, true) => ei.mul(&ej).scale(&qi).sub(&ej.mul(&ei)),
                    (false, false) => fi.mul(&fj).scale(&q).sub(&fj.mul(&fi)),
                    (false, true) => fj.mul(&fi).scale(&q).sub(&fi.mul(&fj)),
                }
            } else if is_e {
                ej
            } else {
                fj
            }
        } else {
            let head = self.root_index(a, a + 1);
            let tail = self.root_index(a + 1, b);
            let th = self.t_letter(i, dir, is_e, head);
            let tt = self.t_letter(i, dir, is_e, tail);
            if is_e {
                tt.mul(&th).scale(&qi).sub(&th.mul(&tt))
            } else {
                th.mul(&tt).scale(&q).sub(&tt.mul(&th))
            }
        };
        let out = Arc::new(out);
        self.t_memo.insert(key, out.clone());
        out
    }

    fn t_monomial(&self, i: usize, dir: Dir, m: &Monomial) -> Element {
        let n = self.n;
        let mut acc = Element::one(n);
        for (b, &x) in m.f.iter().enumerate() {
            for _ in 0..x {
                acc = acc.mul(&self.t_letter(i, dir, false, b));
            }
        }
        let mut k = m.k.clone();
        k.swap(i - 1, i);
        acc = acc.mul(&Element::kvec(n, k));
        for (b, &x) in m.e.iter().enumerate() {
            for _ in 0..x {
                acc = acc.mul(&self.t_letter(i, dir, true, b));
            }
        }
        acc
    }

    pub fn braid_t(&self, i: usize, a: &Element, dir: Dir) -> Element {
        assert!(i >= 1 && i <= self.n, "T_{i} out of range");
        let mut out = Element::zero(self.n);
        for (m, c) in a.terms() {
            out = out.add(&self.t_monomial(i, dir, m).scale(c));
        }
        out
    }
}

/// Applies `T_i` (or its inverse) to `a`.
pub fn braid_t(i: usize, a: &Element, dir: Dir) -> Element {
    algebra(a.rank()).braid_t(i, a, dir)
}

impl Element {
    pub fn braid_t(&self, i: usize, dir: Dir) -> Element {
        braid_t(i, self, dir)
    }

    /// The root vector built from the reduced word of the longest element:
    /// `T_{i_1} ... T_{i_{k-1}}(E_{i_k})` for the position of `beta`.
    pub fn root_vector_by_word(n: usize, r: crate::rootsys::Root) -> Element {
        let word = crate::rootsys::longest_word(n);
        let order = crate::rootsys::convex_order(n);
        let pos = if r.is_positive() { r } else { r.neg() };
        let k = order.iter().position(|x| *x == pos).expect("root in convex order");
        let mut v = if r.is_positive() { Element::e(n, word[k]) } else { Element::f(n, word[k]) };
        for &i in word[..k].iter().rev() {
            v = v.braid_t(i, Dir::Forward);
        }
        v
    }
}
