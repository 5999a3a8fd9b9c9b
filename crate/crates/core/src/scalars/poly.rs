//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Variable 0 is `u` (with `u^2 = q`), variables `1..NVARS` are the parameter
//! roots `d_j` (with `d_j^2 = c_j`). Terms are kept sorted by descending lex
//! order on the exponent vector.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Number of polynomial variables: `u` plus up to five parameter roots.
pub const NVARS: usize = 6;

/// Exponent vector, compared lexicographically with `u` most significant.
pub type Exp = [u16; NVARS];

const ZERO_EXP: Exp = [0; NVARS];

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Exp, BigInt)>,
}

fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] += b[i];
    }
    r
}

fn exp_divides(d: &Exp, e: &Exp) -> bool {
    d.iter().zip(e.iter()).all(|(x, y)| x <= y)
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] -= b[i];
    }
    r
}

fn total(e: &Exp) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(ZERO_EXP, c)] }
        }
    }

    pub fn monomial(e: Exp, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        let mut e = ZERO_EXP;
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(raw: Vec<(Exp, BigInt)>) -> Self {
        let mut acc: HashMap<Exp, BigInt> = HashMap::with_capacity(raw.len());
        for (e, c) in raw {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<(Exp, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Bit mask of the variables that occur.
    pub fn var_mask(&self) -> u32 {
        let mut m = 0u32;
        for (e, _) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    m |= 1 << i;
                }
            }
        }
        m
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    /// Leading coefficient under graded-lex order.
    pub fn grlex_leading_coeff(&self) -> Option<&BigInt> {
        self.terms
            .iter()
            .max_by(|a, b| total(&a.0).cmp(&total(&b.0)).then(a.0.cmp(&b.0)))
            .map(|(_, c)| c)
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mul_term(&self, e: &Exp, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(x, y)| (exp_add(x, e), y * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                raw.push((exp_add(e1, e2), c1 * c2));
            }
        }
        Self::from_terms(raw)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_int_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, x) in &self.terms {
            let (qq, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push((*e, qq));
        }
        Some(Poly { terms: out })
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_constant() {
            return self.div_int_exact(&d.terms[0].1);
        }
        if d.is_monomial() {
            let (de, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, x) in &self.terms {
                if !exp_divides(de, e) {
                    return None;
                }
                let (qq, r) = x.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((exp_sub(e, de), qq));
            }
            return Some(Poly { terms: out });
        }
        let (de, dc) = (d.terms[0].0, d.terms[0].1.clone());
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((re, rc)) = r.terms.first() {
            if !exp_divides(&de, re) {
                return None;
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let qe = exp_sub(re, &de);
            r = r.sub(&d.mul_term(&qe, &qc));
            q.push((qe, qc));
        }
        Some(Poly { terms: q })
    }

    /// Splits into coefficients with respect to variable `v`, highest degree first.
    fn coeffs_in(&self, v: usize) -> Vec<(u16, Poly)> {
        let mut by_deg: HashMap<u16, Vec<(Exp, BigInt)>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let d = e2[v];
            e2[v] = 0;
            by_deg.entry(d).or_default().push((e2, c.clone()));
        }
        let mut out: Vec<(u16, Poly)> =
            by_deg.into_iter().map(|(d, t)| (d, Poly::from_terms(t))).collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    fn leading_coeff_in(&self, v: usize) -> Poly {
        let d = self.degree_in(v);
        let t: Vec<(Exp, BigInt)> = self
            .terms
            .iter()
            .filter(|(e, _)| e[v] == d)
            .map(|(e, c)| {
                let mut e2 = *e;
                e2[v] = 0;
                (e2, c.clone())
            })
            .collect();
        Poly::from_terms(t)
    }

    fn var_power(v: usize, k: u16) -> Exp {
        let mut e = ZERO_EXP;
        e[v] = k;
        e
    }

    /// Multiplies by -1 when needed so the graded-lex leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        match self.grlex_leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for (_, c) in self.coeffs_in(v) {
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
        let db = b.degree_in(v);
        let lb = b.leading_coeff_in(v);
        let mut r = a.clone();
        debug_assert!(db > 0);
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.leading_coeff_in(v);
            let shift = Self::var_power(v, dr - db);
            r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&shift, &BigInt::one()));
        }
        r
    }
}

fn monomial_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut e = a.terms[0].0;
    for (x, _) in a.terms.iter().chain(b.terms.iter()) {
        for i in 0..NVARS {
            e[i] = e[i].min(x[i]);
        }
    }
    let c = a.content().gcd(&b.content());
    Poly::monomial(e, c)
}

/// Greatest common divisor over `Z[u, d_1, ...]`, normalized to a positive
/// graded-lex leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content().gcd(&b.content()));
    }
    if a.is_monomial() || b.is_monomial() {
        return monomial_gcd(a, b);
    }
    if a == b || *a == b.neg() {
        return a.clone().normalize_sign();
    }
    let (ma, mb) = (a.var_mask(), b.var_mask());
    let only = (ma ^ mb).trailing_zeros() as usize;
    if only < NVARS {
        let (with, without) = if ma >> only & 1 == 1 { (a, b) } else { (b, a) };
        let mut g = without.clone();
        for (_, c) in with.coeffs_in(only) {
            g = gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
        return g.normalize_sign();
    }
    let v = (0..NVARS)
        .filter(|&i| ma >> i & 1 == 1)
        .min_by_key(|&i| a.degree_in(i).max(b.degree_in(i)))
        .expect("nonconstant");
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let gc = gcd(&ca, &cb);
    let mut p1 = a.div_exact(&ca).expect("content divides");
    let mut p2 = b.div_exact(&cb).expect("content divides");
    if p1.degree_in(v) < p2.degree_in(v) {
        std::mem::swap(&mut p1, &mut p2);
    }
    loop {
        if p2.degree_in(v) == 0 {
            return gc.normalize_sign();
        }
        let r = Poly::prem(&p1, &p2, v);
        if r.is_zero() {
            break;
        }
        let cr = r.content_in(v);
        p1 = p2;
        p2 = r.div_exact(&cr).expect("content divides");
    }
    gc.mul(&p2).normalize_sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Poly {
        Poly::var(0)
    }
    fn d1() -> Poly {
        Poly::var(1)
    }
    fn k(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    #[test]
    fn gcd_univariate() {
        // (u^2-1)(u+2) and (u^2-1)(u-3)
        let f = u().mul(&u()).sub(&k(1));
        let a = f.mul(&u().add(&k(2)));
        let b = f.mul(&u().sub(&k(3)));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_bivariate() {
        let f = u().mul(&d1()).add(&k(1));
        let a = f.mul(&u().add(&d1()));
        let b = f.mul(&f).mul(&u().sub(&k(2)));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_with_content() {
        let a = u().add(&k(1)).scale(&BigInt::from(6));
        let b = u().add(&k(1)).mul(&u()).scale(&BigInt::from(4));
        assert_eq!(gcd(&a, &b), u().add(&k(1)).scale(&BigInt::from(2)));
    }

    #[test]
    fn exact_division() {
        let f = u().mul(&d1()).sub(&k(3));
        let g = u().add(&d1()).add(&k(1));
        let p = f.mul(&g);
        assert_eq!(p.div_exact(&f), Some(g.clone()));
        assert_eq!(p.add(&k(1)).div_exact(&f), None);
    }
}
