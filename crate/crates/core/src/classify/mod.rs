//! Classification machinery for completely pointed modules.

use std::collections::HashMap;

use serde::Serialize;

use crate::modrep::{ModError, Outcome, Vector, WeightModuleWindow};
use crate::scalars::{Exp, Scalar, ToralScalar, NVARS};
use crate::uq::Element;

mod kernel;
mod mu;
mod roots;

pub use kernel::{kernel_annihilates, kernel_samples};
pub use mu::{check_theorem_one, measure_z, solve_mu, verify_phi_relations, MuSolution};
pub use roots::{find_invariant_vector, partition_roots, ChainVerdict, RootPartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("y x v is not proportional to v for {0}")]
    NotProportional(String),
    #[error("chain leaves the window at {0:?}; enlarge the radius")]
    Inconclusive(Vec<i32>),
    #[error("window exhausted before the chain vanished")]
    WindowExhausted,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("requires quadratic extension: {0}")]
    QuadraticExtension(String),
    #[error("inconsistent module data: {0}")]
    Inconsistent(String),
    #[error("element is not in the kernel of pi")]
    NotInKernel,
    #[error(transparent)]
    Module(#[from] ModError),
}

/// Acts and insists on staying inside the window.
pub(crate) fn act_inside(w: &WeightModuleWindow, a: &Element, v: &Vector) -> Result<Vector, ClassifyError> {
    match w.act(a, v)? {
        Outcome::Image(x) => Ok(x),
        Outcome::LeavesWindow(h) => Err(ClassifyError::Inconclusive(h)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CpVerdict {
    pub matches: bool,
    pub tags: Vec<String>,
}

fn pm(t: &ToralScalar, k: i32) -> bool {
    t.q_exponent() == Some(k)
}

/// Membership in the highest weight families of completely pointed modules.
pub fn is_cp_highest_weight(lambda: &[ToralScalar]) -> CpVerdict {
    let n = lambda.len();
    let others_pm_one = |skip: &[usize]| (0..n).filter(|i| !skip.contains(i)).all(|i| pm(&lambda[i], 0));
    let mut tags = Vec::new();
    if others_pm_one(&[]) {
        tags.push("all-pm-one".to_string());
    }
    for i in 0..n {
        if pm(&lambda[i], 1) && others_pm_one(&[i]) {
            tags.push(format!("q-slot-{}", i + 1));
        }
    }
    if n >= 1 && others_pm_one(&[0]) {
        tags.push("c-first".into());
    }
    if n >= 1 && others_pm_one(&[n - 1]) {
        tags.push("c-last".into());
    }
    for i in 0..n.saturating_sub(1) {
        if pm(&lambda[i].mul(lambda[i + 1]), -1) && others_pm_one(&[i, i + 1]) {
            tags.push(format!("adjacent-pair-{}", i + 1));
        }
    }
    CpVerdict { matches: !tags.is_empty(), tags }
}

/// Four elements `x_1, x_2` of weight `-theta` and `y_1, y_2` of weight `theta`.
#[derive(Clone, Debug)]
pub struct Quadruple {
    pub check: String,
    pub indices: Vec<usize>,
    pub x: [Element; 2],
    pub y: [Element; 2],
}

/// `x = (F_{i,i+2}, F_{i,i+1} F_{i+1,i+2})`, `y = (E_{i,i+2}, E_{i,i+1} E_{i+1,i+2})`.
pub fn lambda1_quadruple(n: usize, i: usize) -> Quadruple {
    let (em, ep) = (|a, b| Element::em(n, a, b), |a, b| Element::ep(n, a, b));
    Quadruple {
        check: "lambda1".into(),
        indices: vec![i],
        x: [em(i, i + 2), em(i, i + 1).mul(&em(i + 1, i + 2))],
        y: [ep(i, i + 2), ep(i, i + 1).mul(&ep(i + 1, i + 2))],
    }
}

/// `x = (F_{il}, F_{ik} F_{kl})`, `y = (E_{il}, E_{ij} E_{jl})` for `i < j < k < l`.
pub fn lambda2_quadruple(n: usize, i: usize, j: usize, k: usize, l: usize) -> Quadruple {
    let (em, ep) = (|a, b| Element::em(n, a, b), |a, b| Element::ep(n, a, b));
    Quadruple {
        check: "lambda2".into(),
        indices: vec![i, j, k, l],
        x: [em(i, l), em(i, k).mul(&em(k, l))],
        y: [ep(i, l), ep(i, j).mul(&ep(j, l))],
    }
}

/// The quadruple pinning a lone non-unit entry `lambda_i`, `1 < i < n`.
pub fn c_quadruple(n: usize, i: usize) -> Quadruple {
    let (em, ep) = (|a, b| Element::em(n, a, b), |a, b| Element::ep(n, a, b));
    Quadruple {
        check: "c-criterion".into(),
        indices: vec![i],
        x: [em(i - 1, i + 1).mul(&em(i, i + 2)), em(i, i + 1).mul(&em(i - 1, i + 2))],
        y: [ep(i - 1, i + 1).mul(&ep(i, i + 2)), ep(i, i + 1).mul(&ep(i - 1, i + 2))],
    }
}

/// Every quadruple used by the highest weight classification at rank `n`.
pub fn determinant_quadruples(n: usize) -> Vec<Quadruple> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(lambda1_quadruple(n, i));
    }
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            for k in j + 1..=n + 1 {
                for l in k + 1..=n + 1 {
                    out.push(lambda2_quadruple(n, i, j, k, l));
                }
            }
        }
    }
    for i in 2..n {
        out.push(c_quadruple(n, i));
    }
    out
}

/// `gamma_11 gamma_22 - gamma_12 gamma_21` measured on a window vector.
pub fn gamma_det(q: &Quadruple, w: &WeightModuleWindow, p: usize) -> Result<Scalar, ClassifyError> {
    let v = Vector::basis(p);
    let mut g = [[Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::zero()]];
    for a in 0..2 {
        let yv = &q.y[a];
        for b in 0..2 {
            let img = act_inside(w, &yv.mul(&q.x[b]), &v)?;
            g[a][b] = img
                .proportional_to(p)
                .ok_or_else(|| ClassifyError::NotProportional(format!("{}{:?}", q.check, q.indices)))?;
        }
    }
    Ok(g[0][0].mul(&g[1][1]).sub(&g[0][1].mul(&g[1][0])))
}

/// A Laurent polynomial in `K_1, ..., K_n` with scalar coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KPoly(pub Vec<(Vec<i32>, Scalar)>);

impl KPoly {
    /// The part of `a` that survives on a highest weight vector: its pure torus terms.
    pub fn highest_part(a: &Element) -> KPoly {
        let n = a.rank();
        let mut out = Vec::new();
        for (m, c) in a.terms() {
            if m.is_k_only() {
                debug_assert_eq!(m.k.iter().sum::<i32>(), 0, "sl torus term expected");
                let mut acc = 0;
                let e: Vec<i32> = (0..n)
                    .map(|i| {
                        acc += m.k[i];
                        acc
                    })
                    .collect();
                out.push((e, c.clone()));
            }
        }
        KPoly(out)
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        let mut map: HashMap<Vec<i32>, Scalar> = HashMap::new();
        for (a, c) in &self.0 {
            for (b, d) in &o.0 {
                let e: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let s = map.entry(e).or_insert_with(Scalar::zero);
                *s = s.add(&c.mul(d));
            }
        }
        let mut v: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        KPoly(v)
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        let mut map: HashMap<Vec<i32>, Scalar> = self.0.iter().cloned().collect();
        for (b, d) in &o.0 {
            let s = map.entry(b.clone()).or_insert_with(Scalar::zero);
            *s = s.sub(d);
        }
        let mut v: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        KPoly(v)
    }

    pub fn eval(&self, lambda: &[ToralScalar]) -> Scalar {
        let mut out = Scalar::zero();
        for (e, c) in &self.0 {
            let mut t = ToralScalar::one();
            for (l, &x) in lambda.iter().zip(e) {
                t = t.mul(l.pow(x));
            }
            out = out.add(&c.mul(&t.to_scalar()));
        }
        out
    }
}

/// The determinant of a quadruple on `L(lambda)` as a function of `lambda`.
pub fn formal_det(q: &Quadruple) -> KPoly {
    let g = |a: usize, b: usize| KPoly::highest_part(&q.y[a].mul(&q.x[b]));
    g(0, 0).mul(&g(1, 1)).sub(&g(0, 1).mul(&g(1, 0)))
}

/// `formal_det` with coefficients cleared to integer Laurent polynomials in
/// `u = q^{1/2}` and the parameters, for fast exact zero tests on toral points.
#[derive(Clone, Debug)]
pub struct ClearedDet {
    terms: Vec<(Vec<i32>, Vec<([i32; NVARS], i64)>)>,
}

impl ClearedDet {
    pub fn new(p: &KPoly) -> Option<Self> {
        let qd = crate::scalars::q_diff();
        'power: for m in 0..8i64 {
            let f = qd.pow(m).ok()?;
            let mut terms = Vec::new();
            for (e, c) in &p.0 {
                let c = c.mul(&f);
                let den = c.denom();
                if !den.is_monomial() || den.terms()[0].1 != 1.into() {
                    continue 'power;
                }
                let shift: Exp = den.terms()[0].0;
                let mut lp = Vec::new();
                for (ex, k) in c.numer().terms() {
                    let mut key = [0i32; NVARS];
                    for t in 0..NVARS {
                        key[t] = ex[t] as i32 - shift[t] as i32;
                    }
                    lp.push((key, i64::try_from(k).ok()?));
                }
                terms.push((e.clone(), lp));
            }
            return Some(ClearedDet { terms });
        }
        None
    }

    pub fn is_zero_at(&self, lambda: &[ToralScalar]) -> bool {
        let mut acc: HashMap<[i32; NVARS], i64> = HashMap::new();
        for (e, lp) in &self.terms {
            let mut t = ToralScalar::one();
            for (l, &x) in lambda.iter().zip(e) {
                t = t.mul(l.pow(x));
            }
            let mut shift = [0i32; NVARS];
            shift[0] = t.u;
            shift[1..].copy_from_slice(&t.d[..NVARS - 1]);
            for (key, k) in lp {
                let mut kk = *key;
                for i in 0..NVARS {
                    kk[i] += shift[i];
                }
                *acc.entry(kk).or_insert(0) += t.sign as i64 * k;
            }
        }
        acc.values().all(|&v| v == 0)
    }
}

/// Every quadruple determinant at `lambda`, as check records.
pub fn determinant_residuals(lambda: &[ToralScalar]) -> crate::report::Report {
    let n = lambda.len();
    let mut rep = crate::report::Report::default();
    for q in determinant_quadruples(n) {
        let d = formal_det(&q).eval(lambda);
        rep.push(crate::report::CheckRecord::new(q.check.clone(), q.indices.clone(), d.to_literal(), d.is_zero()));
    }
    rep
}
