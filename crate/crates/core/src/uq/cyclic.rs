//! Bracket-product form of `pi` on the cyclic subalgebra.

use super::{Element, UqError};
use crate::scalars::Scalar;
use crate::weylq::GwaElement;

/// A term `c Kb^k F_{i_1} ... F_{i_l} E_{j_1} ... E_{j_l}` with `i` a permutation of `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicTerm {
    pub coeff: Scalar,
    pub k: Vec<i32>,
    pub fs: Vec<usize>,
    pub es: Vec<usize>,
}

impl CyclicTerm {
    pub fn to_element(&self, n: usize) -> Element {
        let mut acc = Element::kvec(n, self.k.clone()).scale(&self.coeff);
        for &i in &self.fs {
            acc = acc.mul(&Element::f(n, i));
        }
        for &j in &self.es {
            acc = acc.mul(&Element::e(n, j));
        }
        acc
    }
}

fn count(seq: &[usize], v: usize) -> i64 {
    seq.iter().filter(|&&x| x == v).count() as i64
}

/// Multiset difference `a \ b`.
fn multiset_minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = a.to_vec();
    for x in b {
        if let Some(p) = out.iter().position(|y| y == x) {
            out.remove(p);
        }
    }
    out
}

/// `pi(x)` written as `sum pi(K) prod_r [w_{i_r}; s_r - s'_r][w_{j_r+1}; t_r - t'_r]`.
///
/// `s_r` and `s'_r` count `i_r` and `i_r - 1` in `j \ (i_{r+1}, ..., i_l)`;
/// `t_r` and `t'_r` count `j_r + 1` and `j_r` in `(j_{r+1}, ..., j_l)`.
pub fn cyclic_bracket_form(n: usize, terms: &[CyclicTerm]) -> Result<GwaElement, UqError> {
    let mut out = GwaElement::zero(n);
    for t in terms {
        if t.k.len() != n + 1 {
            return Err(UqError::RankMismatch(t.k.len(), n + 1));
        }
        let mut a = t.fs.clone();
        let mut b = t.es.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(UqError::NotCyclic(format!("{:?} is not a permutation of {:?}", t.fs, t.es)));
        }
        if t.fs.iter().any(|&i| i == 0 || i > n) {
            return Err(UqError::BadIndex(format!("{:?}", t.fs)));
        }
        let l = t.fs.len();
        let mut acc = GwaElement::omega_vec(n, t.k.clone()).scale(&t.coeff);
        for r in 0..l {
            let ir = t.fs[r];
            let jr = t.es[r];
            let rest = multiset_minus(&t.es, &t.fs[r + 1..]);
            let s = count(&rest, ir) - count(&rest, ir - 1);
            let later = &t.es[r + 1..];
            let tt = count(later, jr + 1) - count(later, jr);
            acc = acc.mul(&GwaElement::bracket(n, ir, 0, s)).mul(&GwaElement::bracket(n, jr + 1, 0, tt));
        }
        out = out.add(&acc);
    }
    Ok(out)
}
