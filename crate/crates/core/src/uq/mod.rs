//! `U_q(gl_{n+1})` in PBW normal form.
//!
//! A monomial is `F^f K^k E^e`: root vectors `F_beta` in convex order, a
//! Laurent monomial in `Kb_1..Kb_{n+1}`, then root vectors `E_beta` in convex
//! order. Products are straightened with the commutation rules between root
//! vectors; products of letters with monomials are memoized per algebra.

mod braid;
mod cyclic;
pub mod identities;
mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::par::par_map;
use crate::rootsys::{convex_order, Root};
use crate::scalars::{q_diff, Scalar};

pub use braid::Dir;
pub use cyclic::{cyclic_bracket_form, CyclicTerm};
pub use parse::parse_element;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UqError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("unknown identity tag: {0}")]
    UnknownTag(String),
    #[error("not in the cyclic subalgebra: {0}")]
    NotCyclic(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// PBW monomial `F^f K^k E^e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub f: Vec<u16>,
    pub k: Vec<i32>,
    pub e: Vec<u16>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        let r = n * (n + 1) / 2;
        Monomial { f: vec![0; r], k: vec![0; n + 1], e: vec![0; r] }
    }

    pub fn is_k_only(&self) -> bool {
        self.f.iter().all(|&x| x == 0) && self.e.iter().all(|&x| x == 0)
    }

    /// Total degree in root-vector letters.
    pub fn degree(&self) -> u32 {
        self.f.iter().chain(self.e.iter()).map(|&x| x as u32).sum()
    }
}

pub(crate) type Terms = Vec<(Monomial, Scalar)>;

#[derive(Default)]
pub(crate) struct Acc {
    map: HashMap<Monomial, Scalar>,
}

impl Acc {
    pub(crate) fn add(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub(crate) fn into_terms(self) -> Terms {
        let mut v: Terms = self.map.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// An element of `U_q(gl_{n+1})` in normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

/// The algebra context for rank `n`: root indexing and memo tables.
pub struct Uq {
    n: usize,
    roots: Vec<Root>,
    index: Vec<Vec<usize>>,
    f_ins: DashMap<(u16, Vec<u16>), Arc<Vec<(Vec<u16>, Scalar)>>>,
    e_ins: DashMap<(u16, Vec<u16>), Arc<Vec<(Vec<u16>, Scalar)>>>,
    e_f: DashMap<(u16, Vec<u16>), Arc<Terms>>,
    ef: DashMap<(Vec<u16>, Vec<u16>), Arc<Terms>>,
    pub(crate) t_memo: DashMap<(usize, bool, bool, u16), Arc<Element>>,
}

static REGISTRY: OnceLock<DashMap<usize, Arc<Uq>>> = OnceLock::new();

/// The shared algebra of rank `n`.
pub fn algebra(n: usize) -> Arc<Uq> {
    assert!(n >= 1, "rank must be at least 1");
    let reg = REGISTRY.get_or_init(DashMap::new);
    if let Some(a) = reg.get(&n) {
        return a.clone();
    }
    let a = Arc::new(Uq::new(n));
    reg.entry(n).or_insert(a).clone()
}

const NONE: usize = usize::MAX;

impl Uq {
    fn new(n: usize) -> Self {
        let roots = convex_order(n);
        let mut index = vec![vec![NONE; n + 2]; n + 2];
        for (t, r) in roots.iter().enumerate() {
            index[r.i][r.j] = t;
        }
        Uq {
            n,
            roots,
            index,
            f_ins: DashMap::new(),
            e_ins: DashMap::new(),
            e_f: DashMap::new(),
            ef: DashMap::new(),
            t_memo: DashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Index of the positive root `e_a - e_b` in convex order.
    pub fn root_index(&self, a: usize, b: usize) -> usize {
        let t = self.index[a][b];
        assert!(t != NONE, "({a},{b}) is not a positive root");
        t
    }

    fn nroots(&self) -> usize {
        self.roots.len()
    }

    fn pair(&self, k: &[i32], beta: usize) -> i32 {
        self.roots[beta].pair(k)
    }

    /// `K^v F_f E_e` as a normal-form monomial with its coefficient.
    fn kfe(&self, v: Vec<i32>, f: Option<usize>, e: Option<usize>, c: Scalar) -> (Monomial, Scalar) {
        let mut m = Monomial::one(self.n);
        let mut c = c;
        if let Some(b) = f {
            m.f[b] = 1;
            c = c.mul(&Scalar::q_pow(-(self.pair(&v, b) as i64)));
        }
        if let Some(b) = e {
            m.e[b] = 1;
        }
        m.k = v;
        (m, c)
    }

    fn kvec(&self, a: usize, b: usize, s: i32) -> Vec<i32> {
        let mut v = vec![0; self.n + 1];
        v[a - 1] += s;
        v[b - 1] -= s;
        v
    }

    /// `F_beta F_gamma` for `beta > gamma`, as words in normal order.
    fn ff_rule(&self, beta: usize, gamma: usize) -> Vec<(Scalar, Vec<usize>)> {
        let Root { i: c, j: d } = self.roots[beta];
        let Root { i: a, j: b } = self.roots[gamma];
        let swap = vec![gamma, beta];
        if a == c || b == d {
            vec![(Scalar::q_pow(-1), swap)]
        } else if b == c {
            vec![(Scalar::q(), swap), (Scalar::from_int(-1), vec![self.root_index(a, d)])]
        } else if c < b && b < d {
            vec![
                (Scalar::one(), swap),
                (q_diff().neg(), vec![self.root_index(a, d), self.root_index(c, b)]),
            ]
        } else {
            vec![(Scalar::one(), swap)]
        }
    }

    /// `E_beta E_gamma` for `beta > gamma`, as words in normal order.
    fn ee_rule(&self, beta: usize, gamma: usize) -> Vec<(Scalar, Vec<usize>)> {
        let Root { i: c, j: d } = self.roots[beta];
        let Root { i: a, j: b } = self.roots[gamma];
        let swap = vec![gamma, beta];
        if a == c || b == d {
            vec![(Scalar::q_pow(-1), swap)]
        } else if b == c {
            vec![(Scalar::q(), vec![self.root_index(a, d)]), (Scalar::q(), swap)]
        } else if c < b && b < d {
            vec![
                (Scalar::one(), swap),
                (q_diff().neg(), vec![self.root_index(a, d), self.root_index(c, b)]),
            ]
        } else {
            vec![(Scalar::one(), swap)]
        }
    }

    /// `[E_gamma, F_delta]` in normal form.
    fn ef_comm(&self, gamma: usize, delta: usize) -> Terms {
        let Root { i: a, j: b } = self.roots[gamma];
        let Root { i: c, j: d } = self.roots[delta];
        let one = Scalar::one();
        let mut out = Vec::new();
        if gamma == delta {
            let inv = q_diff().inv().expect("q - 1/q is nonzero");
            out.push(self.kfe(self.kvec(a, b, 1), None, None, inv.clone()));
            out.push(self.kfe(self.kvec(a, b, -1), None, None, inv.neg()));
        } else if a == c && b < d {
            out.push(self.kfe(self.kvec(a, b, 1), Some(self.root_index(b, d)), None, one));
        } else if a == c && d < b {
            out.push(self.kfe(self.kvec(a, d, -1), None, Some(self.root_index(d, b)), Scalar::q_pow(-1)));
        } else if b == d && a < c {
            out.push(self.kfe(self.kvec(c, b, 1), None, Some(self.root_index(a, c)), one.neg()));
        } else if b == d && c < a {
            out.push(self.kfe(self.kvec(a, b, -1), Some(self.root_index(c, a)), None, Scalar::q().neg()));
        } else if a < c && c < b && b < d {
            out.push(self.kfe(
                self.kvec(c, b, 1),
                Some(self.root_index(b, d)),
                Some(self.root_index(a, c)),
                q_diff().neg(),
            ));
        } else if c < a && a < d && d < b {
            out.push(self.kfe(
                self.kvec(a, d, -1),
                Some(self.root_index(c, a)),
                Some(self.root_index(d, b)),
                q_diff(),
            ));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// `F_beta F^f` (or `E_beta E^e`) as a combination of pure monomials.
    fn insert_generic(&self, beta: usize, v: &[u16], is_f: bool) -> Arc<Vec<(Vec<u16>, Scalar)>> {
        let memo = if is_f { &self.f_ins } else { &self.e_ins };
        let key = (beta as u16, v.to_vec());
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let first = v.iter().position(|&x| x > 0);
        let result = match first {
            Some(g) if g < beta => {
                let mut rest = v.to_vec();
                rest[g] -= 1;
                let rule = if is_f { self.ff_rule(beta, g) } else { self.ee_rule(beta, g) };
                let mut acc: HashMap<Vec<u16>, Scalar> = HashMap::new();
                for (c, word) in rule {
                    let mut cur: Vec<(Vec<u16>, Scalar)> = vec![(rest.clone(), c)];
                    for &letter in word.iter().rev() {
                        let mut next: HashMap<Vec<u16>, Scalar> = HashMap::new();
                        for (mono, cc) in &cur {
                            for (m2, c2) in self.insert_generic(letter, mono, is_f).iter() {
                                let e = next.entry(m2.clone()).or_insert_with(Scalar::zero);
                                *e = e.add(&c2.mul(cc));
                            }
                        }
                        cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    }
                    for (m, c) in cur {
                        let e = acc.entry(m).or_insert_with(Scalar::zero);
                        *e = e.add(&c);
                    }
                }
                let mut out: Vec<(Vec<u16>, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                out.sort_by(|a, b| a.0.cmp(&b.0));
                out
            }
            _ => {
                let mut w = v.to_vec();
                w[beta] += 1;
                vec![(w, Scalar::one())]
            }
        };
        let result = Arc::new(result);
        memo.insert(key, result.clone());
        result
    }

    /// Product of two pure F-monomials (or two pure E-monomials).
    fn word_prod(&self, a: &[u16], b: &[u16], is_f: bool) -> Vec<(Vec<u16>, Scalar)> {
        let mut cur: Vec<(Vec<u16>, Scalar)> = vec![(b.to_vec(), Scalar::one())];
        for beta in (0..a.len()).rev() {
            for _ in 0..a[beta] {
                if cur.len() == 1 && cur[0].1.is_one() {
                    cur = self.insert_generic(beta, &cur[0].0, is_f).as_ref().clone();
                    continue;
                }
                let mut next: HashMap<Vec<u16>, Scalar> = HashMap::new();
                for (mono, cc) in &cur {
                    for (m2, c2) in self.insert_generic(beta, mono, is_f).iter() {
                        let e = next.entry(m2.clone()).or_insert_with(Scalar::zero);
                        *e = e.add(&c2.mul(cc));
                    }
                }
                cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        cur
    }

    /// `E_gamma F^f` in normal form.
    fn e_letter_f(&self, gamma: usize, f: &[u16]) -> Arc<Terms> {
        let key = (gamma as u16, f.to_vec());
        if let Some(r) = self.e_f.get(&key) {
            return r.clone();
        }
        let out = match f.iter().position(|&x| x > 0) {
            None => {
                let mut m = Monomial::one(self.n);
                m.e[gamma] = 1;
                vec![(m, Scalar::one())]
            }
            Some(delta) => {
                let mut rest = f.to_vec();
                rest[delta] -= 1;
                let mut acc = Acc::default();
                let mut fd = Monomial::one(self.n);
                fd.f[delta] = 1;
                for (m, c) in self.e_letter_f(gamma, &rest).iter() {
                    for (m2, c2) in self.mul_mono(&fd, m) {
                        acc.add(m2, c2.mul(c));
                    }
                }
                let mut fr = Monomial::one(self.n);
                fr.f = rest;
                for (m, c) in self.ef_comm(gamma, delta) {
                    for (m2, c2) in self.mul_mono(&m, &fr) {
                        acc.add(m2, c2.mul(&c));
                    }
                }
                acc.into_terms()
            }
        };
        let out = Arc::new(out);
        self.e_f.insert(key, out.clone());
        out
    }

    /// `E^e F^f` in normal form.
    fn ef_swap(&self, e: &[u16], f: &[u16]) -> Arc<Terms> {
        let key = (e.to_vec(), f.to_vec());
        if let Some(r) = self.ef.get(&key) {
            return r.clone();
        }
        let gamma = e.iter().rposition(|&x| x > 0).expect("nonzero E part");
        let mut rest = e.to_vec();
        rest[gamma] -= 1;
        let x = self.e_letter_f(gamma, f);
        let out = if rest.iter().all(|&v| v == 0) {
            x.as_ref().clone()
        } else {
            let mut left = Monomial::one(self.n);
            left.e = rest;
            let mut acc = Acc::default();
            for (m, c) in x.iter() {
                for (m2, c2) in self.mul_mono(&left, m) {
                    acc.add(m2, c2.mul(c));
                }
            }
            acc.into_terms()
        };
        let out = Arc::new(out);
        self.ef.insert(key, out.clone());
        out
    }

    /// Product of two monomials in normal form.
    pub(crate) fn mul_mono(&self, m1: &Monomial, m2: &Monomial) -> Terms {
        let e1_zero = m1.e.iter().all(|&x| x == 0);
        let f2_zero = m2.f.iter().all(|&x| x == 0);
        if e1_zero {
            let shift: i64 = m2.f.iter().enumerate().map(|(b, &x)| x as i64 * self.pair(&m1.k, b) as i64).sum();
            let c = Scalar::q_pow(-shift);
            let k: Vec<i32> = m1.k.iter().zip(&m2.k).map(|(a, b)| a + b).collect();
            let fs = if m1.f.iter().all(|&x| x == 0) {
                vec![(m2.f.clone(), Scalar::one())]
            } else {
                self.word_prod(&m1.f, &m2.f, true)
            };
            return fs
                .into_iter()
                .map(|(f, x)| (Monomial { f, k: k.clone(), e: m2.e.clone() }, x.mul(&c)))
                .collect();
        }
        if f2_zero {
            let shift: i64 = m1.e.iter().enumerate().map(|(b, &x)| x as i64 * self.pair(&m2.k, b) as i64).sum();
            let c = Scalar::q_pow(-shift);
            let k: Vec<i32> = m1.k.iter().zip(&m2.k).map(|(a, b)| a + b).collect();
            let es = if m2.e.iter().all(|&x| x == 0) {
                vec![(m1.e.clone(), Scalar::one())]
            } else {
                self.word_prod(&m1.e, &m2.e, false)
            };
            return es
                .into_iter()
                .map(|(e, x)| (Monomial { f: m1.f.clone(), k: k.clone(), e }, x.mul(&c)))
                .collect();
        }
        let x = self.ef_swap(&m1.e, &m2.f);
        let left = Monomial { f: m1.f.clone(), k: m1.k.clone(), e: vec![0; self.nroots()] };
        let right = Monomial { f: vec![0; self.nroots()], k: m2.k.clone(), e: m2.e.clone() };
        let mut acc = Acc::default();
        for (m, c) in x.iter() {
            for (ml, cl) in self.mul_mono(&left, m) {
                let cl = cl.mul(c);
                for (mr, cr) in self.mul_mono(&ml, &right) {
                    acc.add(mr, cr.mul(&cl));
                }
            }
        }
        acc.into_terms()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.n, self.n, "rank mismatch");
        assert_eq!(b.n, self.n, "rank mismatch");
        let left: Vec<(&Monomial, &Scalar)> = a.terms.iter().collect();
        let parts = par_map(&left, |(m1, c1)| {
            let mut acc = Acc::default();
            for (m2, c2) in &b.terms {
                let c = c1.mul(c2);
                for (m, x) in self.mul_mono(m1, m2) {
                    acc.add(m, x.mul(&c));
                }
            }
            acc.into_terms()
        });
        let mut acc = Acc::default();
        for p in parts {
            for (m, c) in p {
                acc.add(m, c);
            }
        }
        Element::from_terms(self.n, acc.into_terms())
    }
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::from_terms(n, vec![(Monomial::one(n), c)])
    }

    pub fn monomial(n: usize, m: Monomial, c: Scalar) -> Self {
        Self::from_terms(n, vec![(m, c)])
    }

    pub(crate) fn from_terms(n: usize, t: Terms) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in t {
            if c.is_zero() {
                continue;
            }
            let e = terms.entry(m).or_insert_with(Scalar::zero);
            *e = Scalar::add(e, &c);
        }
        terms.retain(|_, c: &mut Scalar| !c.is_zero());
        Element { n, terms }
    }

    /// The positive root vector `E_{e_a - e_b}`, `a < b`.
    pub fn ep(n: usize, a: usize, b: usize) -> Self {
        let alg = algebra(n);
        let mut m = Monomial::one(n);
        m.e[alg.root_index(a, b)] = 1;
        Self::monomial(n, m, Scalar::one())
    }

    /// The negative root vector `E_{-(e_a - e_b)}`, `a < b`.
    pub fn em(n: usize, a: usize, b: usize) -> Self {
        let alg = algebra(n);
        let mut m = Monomial::one(n);
        m.f[alg.root_index(a, b)] = 1;
        Self::monomial(n, m, Scalar::one())
    }

    /// The root vector for an arbitrary root.
    pub fn root_vector(n: usize, r: Root) -> Self {
        if r.is_positive() {
            Self::ep(n, r.i, r.j)
        } else {
            Self::em(n, r.j, r.i)
        }
    }

    pub fn e(n: usize, i: usize) -> Self {
        Self::ep(n, i, i + 1)
    }

    pub fn f(n: usize, i: usize) -> Self {
        Self::em(n, i, i + 1)
    }

    /// `Kb_j^p`.
    pub fn kbar(n: usize, j: usize, p: i32) -> Self {
        let mut m = Monomial::one(n);
        m.k[j - 1] = p;
        Self::monomial(n, m, Scalar::one())
    }

    /// `K^v` for an arbitrary exponent vector over `Kb_1..Kb_{n+1}`.
    pub fn kvec(n: usize, v: Vec<i32>) -> Self {
        let mut m = Monomial::one(n);
        m.k = v;
        Self::monomial(n, m, Scalar::one())
    }

    /// `K_i^p = (Kb_i Kb_{i+1}^{-1})^p`.
    pub fn k(n: usize, i: usize, p: i32) -> Self {
        let mut m = Monomial::one(n);
        m.k[i - 1] = p;
        m.k[i] = -p;
        Self::monomial(n, m, Scalar::one())
    }

    /// `K_{ij} = K_i ... K_{j-1} = Kb_i Kb_j^{-1}`, raised to `p`.
    pub fn k_range(n: usize, i: usize, j: usize, p: i32) -> Self {
        let mut m = Monomial::one(n);
        m.k[i - 1] += p;
        m.k[j - 1] -= p;
        Self::monomial(n, m, Scalar::one())
    }

    /// The central element `Kb_1 ... Kb_{n+1}`.
    pub fn central_i(n: usize) -> Self {
        Self::kvec(n, vec![1; n + 1])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &Element) -> Element {
        assert_eq!(self.n, o.n, "rank mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let e = terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *e = Scalar::add(e, c);
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Element { n: self.n, terms }
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.n);
        }
        Element { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Element) -> Element {
        algebra(self.n).mul(self, o)
    }

    pub fn checked_mul(&self, o: &Element) -> Result<Element, UqError> {
        if self.n != o.n {
            return Err(UqError::RankMismatch(self.n, o.n));
        }
        Ok(self.mul(o))
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = Element::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `[a, b]_v = ab - v ba`.
    pub fn qcommutator(&self, o: &Element, v: &Scalar) -> Element {
        self.mul(o).sub(&o.mul(self).scale(v))
    }

    pub fn commutator(&self, o: &Element) -> Element {
        self.qcommutator(o, &Scalar::one())
    }

    /// True when every K-part lies in the span of the `K_i` (sum of exponents zero).
    pub fn is_sl(&self) -> bool {
        self.terms.keys().all(|m| m.k.iter().sum::<i32>() == 0)
    }

    /// Root-lattice weight of each term, as a vector over `e_1..e_{n+1}`.
    pub fn weights(&self) -> Vec<Vec<i32>> {
        let alg = algebra(self.n);
        let mut ws: Vec<Vec<i32>> = self
            .terms
            .keys()
            .map(|m| {
                let mut w = vec![0; self.n + 1];
                for (b, r) in alg.roots.iter().enumerate() {
                    let d = m.e[b] as i32 - m.f[b] as i32;
                    w[r.i - 1] += d;
                    w[r.j - 1] -= d;
                }
                w
            })
            .collect();
        ws.sort();
        ws.dedup();
        ws
    }
}

fn letter_name(r: &Root, positive: bool) -> String {
    if r.j == r.i + 1 {
        format!("{}{}", if positive { "E" } else { "F" }, r.i)
    } else {
        format!("{}({},{})", if positive { "Ep" } else { "Em" }, r.i, r.j)
    }
}

fn power(s: String, k: i64) -> String {
    if k == 1 {
        s
    } else {
        format!("{s}^{k}")
    }
}

impl Monomial {
    /// Text in the element grammar; empty for the identity.
    pub fn to_text(&self, n: usize) -> String {
        let alg = algebra(n);
        let mut parts = Vec::new();
        for (b, &x) in self.f.iter().enumerate() {
            if x > 0 {
                parts.push(power(letter_name(&alg.roots[b], false), x as i64));
            }
        }
        for (j, &x) in self.k.iter().enumerate() {
            if x != 0 {
                parts.push(power(format!("Kb{}", j + 1), x as i64));
            }
        }
        for (b, &x) in self.e.iter().enumerate() {
            if x > 0 {
                parts.push(power(letter_name(&alg.roots[b], true), x as i64));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mt = m.to_text(self.n);
            let lit = c.to_literal();
            if mt.is_empty() {
                write!(f, "({lit})")?;
            } else if c.is_one() {
                f.write_str(&mt)?;
            } else {
                write!(f, "({lit}) {mt}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kbar_e_relation() {
        let n = 1;
        let lhs = Element::kbar(n, 1, 1).mul(&Element::e(n, 1));
        let rhs = Element::e(n, 1).mul(&Element::kbar(n, 1, 1)).scale(&Scalar::q());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ef_commutator_rank_one() {
        let n = 1;
        let c = Element::e(n, 1).commutator(&Element::f(n, 1));
        let inv = q_diff().inv().unwrap();
        let rhs = Element::k(n, 1, 1).sub(&Element::k(n, 1, -1)).scale(&inv);
        assert_eq!(c, rhs);
    }

    #[test]
    fn qg1_small() {
        let n = 2;
        let lhs = Element::e(n, 1).qcommutator(&Element::e(n, 2), &Scalar::q_pow(-1)).neg();
        assert_eq!(lhs, Element::ep(n, 1, 3));
    }
}
