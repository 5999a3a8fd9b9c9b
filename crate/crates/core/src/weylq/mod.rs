//! The quantized Weyl algebra `A^q_{n+1}` as a generalized Weyl algebra.
//!
//! Normal form is `w^r x^k y^l` with `k_i l_i = 0`. Generators of different
//! indices commute; on a single index
//!
//! ```text
//! w x = q x w,   w y = q^-1 y w,   y x = [w;1],   x y = [w;0]
//! ```
//!
//! where `[w;j] = (q^j w - q^-j w^-1)/(q - q^-1)`.

mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::report::{CheckRecord, Report};
use crate::scalars::{q_diff, Scalar};
use crate::uq::identities::{defining_relations, eval_free, Gen, GenMap};
use crate::uq::{Element, Monomial};

pub use parse::parse_gwa;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("element is not of Euler degree zero")]
    NotDegreeZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// `w^r x^k y^l` over indices `1..=n+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GwaMonomial {
    pub r: Vec<i32>,
    pub x: Vec<u16>,
    pub y: Vec<u16>,
}

impl GwaMonomial {
    pub fn one(n: usize) -> Self {
        GwaMonomial { r: vec![0; n + 1], x: vec![0; n + 1], y: vec![0; n + 1] }
    }

    pub fn euler_degree(&self) -> i64 {
        self.x.iter().map(|&v| v as i64).sum::<i64>() - self.y.iter().map(|&v| v as i64).sum::<i64>()
    }

    pub fn is_r_only(&self) -> bool {
        self.x.iter().all(|&v| v == 0) && self.y.iter().all(|&v| v == 0)
    }
}

/// An element of `A^q_{n+1}`; `n` is the rank of the matching `U_q(gl_{n+1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GwaElement {
    n: usize,
    terms: BTreeMap<GwaMonomial, Scalar>,
}

type Laurent = BTreeMap<i32, Scalar>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = out.entry(ea + eb).or_insert_with(Scalar::zero);
            *e = e.add(&ca.mul(cb));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `[q^s w; j]` as a Laurent polynomial in `w`.
fn bracket_poly(s: i64, j: i64) -> Laurent {
    let inv = q_diff().inv().expect("nonzero");
    let mut l = Laurent::new();
    l.insert(1, Scalar::q_pow(s + j).mul(&inv));
    l.insert(-1, Scalar::q_pow(-s - j).mul(&inv).neg());
    l
}

/// Single-index product `z1 z2` where each side is `x^a` (positive) or `y^b` (negative).
fn rank_one(z1: i64, z2: i64) -> (Laurent, i64) {
    let mut l = Laurent::new();
    l.insert(0, Scalar::one());
    if z1 >= 0 && z2 >= 0 || z1 <= 0 && z2 <= 0 {
        return (l, z1 + z2);
    }
    if z1 > 0 {
        let (a, b) = (z1, -z2);
        let m = a.min(b);
        for t in 1..=m {
            l = laurent_mul(&l, &bracket_poly(-(a - t), 0));
        }
        (l, (a - m) - (b - m))
    } else {
        let (a, b) = (-z1, z2);
        let m = a.min(b);
        for t in 1..=m {
            l = laurent_mul(&l, &bracket_poly(a - t, 1));
        }
        (l, (b - m) - (a - m))
    }
}

fn signed(m: &GwaMonomial, i: usize) -> i64 {
    m.x[i] as i64 - m.y[i] as i64
}

pub(crate) fn mul_gwa_mono(m1: &GwaMonomial, m2: &GwaMonomial) -> Vec<(GwaMonomial, Scalar)> {
    let len = m1.r.len();
    let shift: i64 = (0..len).map(|i| -signed(m1, i) * m2.r[i] as i64).sum();
    let c0 = Scalar::q_pow(shift);
    let r: Vec<i32> = m1.r.iter().zip(&m2.r).map(|(a, b)| a + b).collect();
    let mut acc: Vec<(GwaMonomial, Scalar)> = vec![(
        GwaMonomial { r, x: vec![0; len], y: vec![0; len] },
        c0,
    )];
    for i in 0..len {
        let (l, z) = rank_one(signed(m1, i), signed(m2, i));
        let mut next = Vec::with_capacity(acc.len() * l.len());
        for (m, c) in &acc {
            for (e, lc) in &l {
                let mut mm = m.clone();
                mm.r[i] += e;
                if z > 0 {
                    mm.x[i] = z as u16;
                } else {
                    mm.y[i] = (-z) as u16;
                }
                next.push((mm, c.mul(lc)));
            }
        }
        acc = next;
    }
    acc
}

impl GwaElement {
    pub fn zero(n: usize) -> Self {
        GwaElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::monomial(n, GwaMonomial::one(n), c)
    }

    pub fn monomial(n: usize, m: GwaMonomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GwaElement { n, terms }
    }

    fn from_pairs(n: usize, pairs: Vec<(GwaMonomial, Scalar)>) -> Self {
        let mut map: HashMap<GwaMonomial, Scalar> = HashMap::new();
        for (m, c) in pairs {
            let e = map.entry(m).or_insert_with(Scalar::zero);
            *e = e.add(&c);
        }
        GwaElement { n, terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn x(n: usize, i: usize) -> Self {
        let mut m = GwaMonomial::one(n);
        m.x[i - 1] = 1;
        Self::monomial(n, m, Scalar::one())
    }

    pub fn y(n: usize, i: usize) -> Self {
        let mut m = GwaMonomial::one(n);
        m.y[i - 1] = 1;
        Self::monomial(n, m, Scalar::one())
    }

    /// `w_i^p`.
    pub fn omega(n: usize, i: usize, p: i32) -> Self {
        let mut m = GwaMonomial::one(n);
        m.r[i - 1] = p;
        Self::monomial(n, m, Scalar::one())
    }

    pub fn omega_vec(n: usize, r: Vec<i32>) -> Self {
        let mut m = GwaMonomial::one(n);
        m.r = r;
        Self::monomial(n, m, Scalar::one())
    }

    /// The Euler element `w_1 ... w_{n+1}` raised to `p`.
    pub fn euler(n: usize, p: i32) -> Self {
        Self::omega_vec(n, vec![p; n + 1])
    }

    /// `[q^s w_i; j]`.
    pub fn bracket(n: usize, i: usize, s: i64, j: i64) -> Self {
        let pairs = bracket_poly(s, j)
            .into_iter()
            .map(|(e, c)| {
                let mut m = GwaMonomial::one(n);
                m.r[i - 1] = e;
                (m, c)
            })
            .collect();
        Self::from_pairs(n, pairs)
    }

    /// `t_i = [w_i; 1]`.
    pub fn t(n: usize, i: usize) -> Self {
        Self::bracket(n, i, 0, 1)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GwaMonomial, &Scalar)> {
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

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "rank mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let e = terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *e = Scalar::add(e, c);
            if e.is_zero() {
                terms.remove(m);
            }
        }
        GwaElement { n: self.n, terms }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GwaElement { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "rank mismatch");
        let mut pairs = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1.mul(c2);
                for (m, x) in mul_gwa_mono(m1, m2) {
                    pairs.push((m, x.mul(&c)));
                }
            }
        }
        Self::from_pairs(self.n, pairs)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, WeylError> {
        if self.n != o.n {
            return Err(WeylError::RankMismatch(self.n, o.n));
        }
        Ok(self.mul(o))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `ab - v ba`.
    pub fn qcommutator(&self, o: &Self, v: &Scalar) -> Self {
        self.mul(o).sub(&o.mul(self).scale(v))
    }

    /// Euler degree when homogeneous; `None` for mixed degrees. Zero has degree 0.
    pub fn euler_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.euler_degree());
        let first = it.next().unwrap_or(0);
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Applies `sigma_j`: `w_i -> q^{-delta_ij} w_i` on an element with trivial x/y part.
    pub fn sigma(&self, j: usize) -> Self {
        GwaElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(&Scalar::q_pow(-(m.r[j - 1] as i64)))))
                .collect(),
        }
    }

    /// True when every term has trivial x/y part.
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().all(|m| m.is_r_only())
    }
}

impl fmt::Display for GwaElement {
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
            let mut parts = Vec::new();
            for (i, &e) in m.r.iter().enumerate() {
                if e != 0 {
                    parts.push(if e == 1 { format!("w{}", i + 1) } else { format!("w{}^{}", i + 1, e) });
                }
            }
            for (i, &e) in m.x.iter().enumerate() {
                if e != 0 {
                    parts.push(if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) });
                }
            }
            for (i, &e) in m.y.iter().enumerate() {
                if e != 0 {
                    parts.push(if e == 1 { format!("y{}", i + 1) } else { format!("y{}^{}", i + 1, e) });
                }
            }
            let mt = parts.join(" ");
            if mt.is_empty() {
                write!(f, "({})", c.to_literal())?;
            } else if c.is_one() {
                f.write_str(&mt)?;
            } else {
                write!(f, "({}) {}", c.to_literal(), mt)?;
            }
        }
        Ok(())
    }
}

/// The map `pi` on generators.
pub struct PiMap(pub usize);

impl GenMap for PiMap {
    type Elem = GwaElement;
    fn one(&self) -> GwaElement {
        GwaElement::one(self.0)
    }
    fn image(&self, g: Gen) -> GwaElement {
        let n = self.0;
        match g {
            Gen::E(i) => GwaElement::x(n, i).mul(&GwaElement::y(n, i + 1)),
            Gen::F(i) => GwaElement::x(n, i + 1).mul(&GwaElement::y(n, i)),
            Gen::Kb(j, p) => GwaElement::omega(n, j, p),
        }
    }
    fn mul(&self, a: &GwaElement, b: &GwaElement) -> GwaElement {
        a.mul(b)
    }
    fn add(&self, a: &GwaElement, b: &GwaElement) -> GwaElement {
        a.add(b)
    }
    fn scale(&self, a: &GwaElement, c: &Scalar) -> GwaElement {
        a.scale(c)
    }
}

fn pi_letter(n: usize, a: usize, b: usize, positive: bool, memo: &mut HashMap<(usize, usize, bool), GwaElement>) -> GwaElement {
    if let Some(v) = memo.get(&(a, b, positive)) {
        return v.clone();
    }
    let out = if b == a + 1 {
        PiMap(n).image(if positive { Gen::E(a) } else { Gen::F(a) })
    } else {
        let head = pi_letter(n, a, a + 1, positive, memo);
        let tail = pi_letter(n, a + 1, b, positive, memo);
        if positive {
            tail.mul(&head).scale(&Scalar::q_pow(-1)).sub(&head.mul(&tail))
        } else {
            head.mul(&tail).scale(&Scalar::q()).sub(&tail.mul(&head))
        }
    };
    memo.insert((a, b, positive), out.clone());
    out
}

fn pi_monomial(n: usize, m: &Monomial, memo: &mut HashMap<(usize, usize, bool), GwaElement>) -> GwaElement {
    let roots = crate::rootsys::convex_order(n);
    let mut acc = GwaElement::one(n);
    for (b, &x) in m.f.iter().enumerate() {
        for _ in 0..x {
            acc = acc.mul(&pi_letter(n, roots[b].i, roots[b].j, false, memo));
        }
    }
    acc = acc.mul(&GwaElement::omega_vec(n, m.k.clone()));
    for (b, &x) in m.e.iter().enumerate() {
        for _ in 0..x {
            acc = acc.mul(&pi_letter(n, roots[b].i, roots[b].j, true, memo));
        }
    }
    acc
}

/// `pi: U_q(gl_{n+1}) -> A^q_{n+1}`.
pub fn pi(a: &Element) -> GwaElement {
    let n = a.rank();
    let mut memo = HashMap::new();
    let mut out = GwaElement::zero(n);
    for (m, c) in a.terms() {
        out = out.add(&pi_monomial(n, m, &mut memo).scale(c));
    }
    out
}

/// Preimage of `x_i y_j` for `i != j`.
pub fn xy_preimage(n: usize, i: usize, j: usize) -> Element {
    assert!(i != j, "x_i y_i has Euler degree 0 but is not a single factor");
    if j == i + 1 {
        return Element::e(n, i);
    }
    if i == j + 1 {
        return Element::f(n, j);
    }
    if i < j {
        let prev = xy_preimage(n, i, j - 1);
        let e = Element::e(n, j - 1);
        Element::kbar(n, j - 1, 1).mul(&prev.qcommutator(&e, &Scalar::q()))
    } else {
        let prev = xy_preimage(n, i - 1, j);
        let f = Element::f(n, i - 1);
        Element::kbar(n, i - 1, -1).mul(&f.qcommutator(&prev, &Scalar::q_pow(-1)))
    }
}

/// A preimage under `pi` of a degree-zero element.
pub fn degree_zero_preimage(a: &GwaElement) -> Result<Element, WeylError> {
    let n = a.rank();
    let mut out = Element::zero(n);
    let mut cache: HashMap<(usize, usize), Element> = HashMap::new();
    for (m, c) in a.terms() {
        if m.euler_degree() != 0 {
            return Err(WeylError::NotDegreeZero);
        }
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for i in 0..=n {
            xs.extend(std::iter::repeat(i + 1).take(m.x[i] as usize));
            ys.extend(std::iter::repeat(i + 1).take(m.y[i] as usize));
        }
        let mut u = Element::kvec(n, m.r.clone()).scale(c);
        for (&i, &j) in xs.iter().zip(&ys) {
            let p = cache.entry((i, j)).or_insert_with(|| xy_preimage(n, i, j)).clone();
            u = u.mul(&p);
        }
        out = out.add(&u);
    }
    Ok(out)
}

/// Checks that the defining relations of `U_q(gl_{n+1})` hold on the `pi`-images,
/// and that both displayed `y_i x_i` relations hold in `A^q_{n+1}`.
pub fn check_pi_homomorphism(n: usize) -> Report {
    let rels = defining_relations(n);
    let map = PiMap(n);
    let records = crate::par::par_map(&rels, |r| {
        let v = eval_free(&map, &r.expr);
        CheckRecord::new(format!("pi-{}", r.check), r.indices.clone(), v.to_string(), v.is_zero())
    });
    let mut rep = Report { records };
    for i in 1..=n + 1 {
        let (x, y) = (GwaElement::x(n, i), GwaElement::y(n, i));
        let yx = y.mul(&x);
        let xy = x.mul(&y);
        let r1 = yx.sub(&xy.scale(&Scalar::q_pow(-1))).sub(&GwaElement::omega(n, i, 1));
        let r2 = yx.sub(&xy.scale(&Scalar::q())).sub(&GwaElement::omega(n, i, -1));
        rep.push(CheckRecord::new("gwa-rel", vec![i, 1], r1.to_string(), r1.is_zero()));
        rep.push(CheckRecord::new("gwa-rel", vec![i, 2], r2.to_string(), r2.is_zero()));
    }
    for g in crate::uq::identities::generators(n) {
        let d = map.image(g).euler_degree();
        rep.push(CheckRecord::new("pi-degree", vec![], d.map_or("inhomogeneous".to_string(), |x| x.to_string()), d == Some(0)));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_rules() {
        let n = 1;
        let yx = GwaElement::y(n, 1).mul(&GwaElement::x(n, 1));
        assert_eq!(yx, GwaElement::t(n, 1));
        let wx = GwaElement::omega(n, 1, 1).mul(&GwaElement::x(n, 1));
        assert_eq!(wx, GwaElement::x(n, 1).mul(&GwaElement::omega(n, 1, 1)).scale(&Scalar::q()));
        let a = GwaElement::y(n, 1).mul(&GwaElement::x(n, 2));
        assert_eq!(a, GwaElement::x(n, 2).mul(&GwaElement::y(n, 1)));
    }

    #[test]
    fn associativity_mixed() {
        let n = 1;
        let a = GwaElement::x(n, 1).pow(2).add(&GwaElement::omega(n, 1, -1));
        let b = GwaElement::y(n, 1).pow(3);
        let c = GwaElement::x(n, 1).mul(&GwaElement::omega(n, 2, 1));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn preimage_round_trip_small() {
        let n = 2;
        let a = GwaElement::x(n, 1).mul(&GwaElement::y(n, 3));
        let u = degree_zero_preimage(&a).unwrap();
        assert_eq!(pi(&u), a);
        let b = GwaElement::x(n, 3).mul(&GwaElement::y(n, 1));
        assert_eq!(pi(&degree_zero_preimage(&b).unwrap()), b);
    }
}
