use std::collections::HashMap;

use serde::Serialize;

use super::{act_inside, ClassifyError};
use crate::modrep::{theorem_one_scalar, Outcome, Vector, WeightModuleWindow};
use crate::par::par_map;
use crate::report::{CheckRecord, Report};
use crate::rootsys::Root;
use crate::scalars::{q_diff, Scalar, ToralScalar};
use crate::uq::Element;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuSolution {
    pub mu: Vec<ToralScalar>,
    /// `identity` or `sign-flip` relative to the torus eigenvalues at the
    /// measured vector, `alternate-root` / `alternate-root-sign-flip` otherwise.
    pub tag: String,
}

/// `z_{ij}` with `F_{ij} E_{ij} v = z_{ij} v`, for `i < j`.
pub fn measure_z(w: &WeightModuleWindow, p: usize, i: usize, j: usize) -> Result<Scalar, ClassifyError> {
    let n = w.rank();
    let u = Element::em(n, i, j).mul(&Element::ep(n, i, j));
    act_inside(w, &u, &Vector::basis(p))?
        .proportional_to(p)
        .ok_or_else(|| ClassifyError::NotProportional(format!("z({i},{j})")))
}

fn toral(s: &Scalar, what: &str) -> Result<ToralScalar, ClassifyError> {
    s.as_toral().ok_or_else(|| ClassifyError::Inconsistent(format!("{what} = {} is not of the form +-q^a c^b", s.to_literal())))
}

/// Toral monomials of a scalar whose denominator is a monomial.
fn toral_candidates(s: &Scalar) -> Vec<ToralScalar> {
    let den = s.denom();
    if !den.is_monomial() {
        return Vec::new();
    }
    let d = Scalar::from_polys(den.clone(), crate::scalars::Poly::one());
    let mut out = Vec::new();
    for (e, _) in s.numer().terms() {
        let m = Scalar::from_polys(crate::scalars::Poly::monomial(*e, 1.into()), crate::scalars::Poly::one());
        if let Some(t) = m.div(&d).as_toral() {
            out.push(t);
        }
    }
    out
}

/// All `mu` with `mu_i / mu_j = lambda_{ij}` and `z_{ij} = [mu_i; 1][mu_j; 0]` at point `p`.
pub fn solve_mu(w: &WeightModuleWindow, p: usize) -> Result<Vec<MuSolution>, ClassifyError> {
    let n = w.rank();
    let wt = w.weight(p);
    let ratio: Vec<ToralScalar> = (0..=n).map(|i| toral(&wt[i].div(&wt[n]), "weight ratio")).collect::<Result<_, _>>()?;
    let qd2 = q_diff().mul(&q_diff());
    let mut common: Option<Vec<ToralScalar>> = None;
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            let z = measure_z(w, p, i, j)?;
            let (a, b) = (ratio[i - 1], ratio[j - 1]);
            // q a b s^2 - (Z + q a/b + q^{-1} b/a) s + q^{-1} (ab)^{-1} = 0 with s = t^2.
            let lead = Scalar::q().mul(&a.mul(b).to_scalar());
            let mid = z
                .mul(&qd2)
                .add(&Scalar::q().mul(&a.mul(b.inv()).to_scalar()))
                .add(&Scalar::q_pow(-1).mul(&b.mul(a.inv()).to_scalar()));
            let tail = Scalar::q_pow(-1).mul(&a.mul(b).inv().to_scalar());
            let sum = mid.div(&lead);
            let prod = tail.div(&lead);
            let mut cands = toral_candidates(&sum);
            if let Some(pt) = prod.as_toral() {
                for sq in [pt.sqrt(), pt.neg().sqrt()].into_iter().flatten() {
                    cands.push(sq);
                    cands.push(sq.neg());
                }
            }
            cands.sort();
            cands.dedup();
            let roots: Vec<ToralScalar> = cands
                .into_iter()
                .filter(|s| {
                    let s = s.to_scalar();
                    lead.mul(&s).mul(&s).sub(&mid.mul(&s)).add(&tail).is_zero()
                })
                .collect();
            if roots.is_empty() {
                return Err(ClassifyError::QuadraticExtension(format!("no toral root for the pair ({i},{j})")));
            }
            common = Some(match common {
                None => roots,
                Some(c) => c.into_iter().filter(|s| roots.contains(s)).collect(),
            });
        }
    }
    let squares = common.unwrap_or_default();
    if squares.is_empty() {
        return Err(ClassifyError::Inconsistent("the pair equations have no common solution".into()));
    }
    let own: Option<Vec<ToralScalar>> = wt.iter().map(|s| s.as_toral()).collect();
    let mut out = Vec::new();
    for s in squares {
        let t = s.sqrt().map_err(|e| ClassifyError::QuadraticExtension(e.to_string()))?;
        for sign in [t, t.neg()] {
            let mu: Vec<ToralScalar> = ratio.iter().map(|r| r.mul(sign)).collect();
            let tag = match &own {
                Some(o) if *o == mu => "identity",
                Some(o) if o.iter().zip(&mu).all(|(x, y)| x.neg() == *y) => "sign-flip",
                _ if sign == t => "alternate-root",
                _ => "alternate-root-sign-flip",
            };
            out.push(MuSolution { mu, tag: tag.into() });
        }
    }
    Ok(out)
}

/// `F_i E_i v = [Kb_i; 1][Kb_{i+1}; 0] v` at every point where the action stays inside.
pub fn check_theorem_one(w: &WeightModuleWindow) -> Report {
    let n = w.rank();
    let mut rep = Report::default();
    let idx: Vec<usize> = (0..w.len()).collect();
    for i in 1..=n {
        let u = Element::f(n, i).mul(&Element::e(n, i));
        let results = par_map(&idx, |&p| -> Option<Result<(), String>> {
            match w.act(&u, &Vector::basis(p)) {
                Ok(Outcome::Image(x)) => {
                    let wt = w.weight(p);
                    let want = Vector::basis(p).scale(&theorem_one_scalar(&wt[i - 1], &wt[i]));
                    let diff = x.sub(&want);
                    Some(if diff.is_zero() { Ok(()) } else { Err(format!("point {:?}: {}", w.point(p), diff.coeff(p).to_literal())) })
                }
                Ok(Outcome::LeavesWindow(_)) => None,
                Err(e) => Some(Err(e.to_string())),
            }
        });
        let checked = results.iter().filter(|r| r.is_some()).count();
        let failure = results.into_iter().flatten().find_map(|r| r.err());
        rep.push(match (checked, failure) {
            (0, _) => CheckRecord::inconclusive("theorem-one", vec![i], "no interior points"),
            (_, Some(f)) => CheckRecord::new("theorem-one", vec![i], f, false),
            (k, None) => CheckRecord::new("theorem-one", vec![i], format!("0 at {k} points"), true),
        });
    }
    rep
}

struct Measured {
    n: usize,
    lam: Vec<Scalar>,
    kappa: HashMap<(usize, usize, usize), Scalar>,
    z: HashMap<(usize, usize), Scalar>,
}

impl Measured {
    /// `lambda_{ij}`: the eigenvalue of `Kb_i Kb_j^{-1}`.
    fn l(&self, i: usize, j: usize) -> Scalar {
        self.lam[i - 1].div(&self.lam[j - 1])
    }
    fn k(&self, a: usize, b: usize, c: usize) -> Scalar {
        self.kappa[&(a, b, c)].clone()
    }
    fn phi(&self, a: usize, b: usize, c: usize) -> Scalar {
        Scalar::q().add(&q_diff().mul(&self.k(a, b, c)))
    }
}

fn measure_kappa(w: &WeightModuleWindow, p: usize, a: usize, b: usize, c: usize) -> Result<Scalar, ClassifyError> {
    let n = w.rank();
    let v = Vector::basis(p);
    let lhs = act_inside(w, &Element::root_vector(n, Root::new(a, b)).mul(&Element::root_vector(n, Root::new(b, c))), &v)?;
    let rhs = act_inside(w, &Element::root_vector(n, Root::new(a, c)), &v)?;
    let (t, r) = match rhs.terms().next() {
        Some((t, r)) if rhs.len() == 1 => (t, r.clone()),
        _ => return Err(ClassifyError::Precondition(format!("E({a},{c}) does not act injectively here"))),
    };
    lhs.proportional_to(t)
        .map(|x| x.div(&r))
        .ok_or_else(|| ClassifyError::NotProportional(format!("kappa({a},{b},{c})")))
}

/// The torsion free relations among `kappa`, `phi` and `z` at one weight vector.
pub fn verify_phi_relations(w: &WeightModuleWindow, p: usize) -> Result<Report, ClassifyError> {
    let n = w.rank();
    if n < 2 {
        return Err(ClassifyError::Precondition("needs n >= 2".into()));
    }
    let mut kappa = HashMap::new();
    let idx: Vec<usize> = (1..=n + 1).collect();
    for &a in &idx {
        for &b in &idx {
            for &c in &idx {
                if a != b && b != c && a != c {
                    kappa.insert((a, b, c), measure_kappa(w, p, a, b, c)?);
                }
            }
        }
    }
    let mut z = HashMap::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            z.insert((i, j), measure_z(w, p, i, j)?);
        }
    }
    let m = Measured { n, lam: w.weight(p).to_vec(), kappa, z };
    let mut rep = Report::default();
    let d = q_diff();
    let qi = Scalar::q_pow(-1);
    let q = Scalar::q();
    let rec = |rep: &mut Report, name: &str, ix: Vec<usize>, r: Scalar| {
        rep.push(CheckRecord::new(name, ix, r.to_literal(), r.is_zero()));
    };
    for i in 1..=m.n + 1 {
        for j in i + 1..=m.n + 1 {
            for k in j + 1..=m.n + 1 {
                let phi = m.phi(i, j, k);
                rep.push(CheckRecord::new("phi-nonzero", vec![i, j, k], phi.to_literal(), !phi.is_zero()));
                if phi.is_zero() {
                    continue;
                }
                let (lij, ljk) = (m.l(i, j), m.l(j, k));
                let pinv = phi.inv().expect("nonzero");
                let a1 = phi.sub(&qi).div(&d);
                let a2 = lij.inv().expect("nonzero").mul(&phi).sub(&q.mul(&lij)).div(&d);
                let a3 = phi.sub(&q).div(&d);
                let a4 = qi.mul(&ljk.inv().expect("nonzero")).sub(&phi.mul(&ljk)).div(&d);
                rec(&mut rep, "z1", vec![i, j, k], m.z[&(i, j)].sub(&pinv.mul(&a1).mul(&a2)));
                rec(&mut rep, "z2", vec![i, j, k], m.z[&(j, k)].add(&pinv.mul(&a3).mul(&a4)));
                rec(&mut rep, "z3", vec![i, j, k], m.z[&(i, k)].add(&pinv.mul(&a2).mul(&a4)));
                for l in k + 1..=m.n + 1 {
                    let ix = vec![i, j, k, l];
                    let (pijk, pijl, pikl, pjkl) = (phi.clone(), m.phi(i, j, l), m.phi(i, k, l), m.phi(j, k, l));
                    let (lkl, ljk2) = (m.l(k, l), ljk.mul(&ljk));
                    let lkl2inv = lkl.mul(&lkl).inv().expect("nonzero");
                    rec(&mut rep, "phi1", ix.clone(), pjkl.mul(&pijl).sub(&lkl2inv).mul(&ljk2.mul(&pijl).sub(&pjkl)));
                    rec(&mut rep, "phi2", ix.clone(), pikl.mul(&pijk).sub(&lij.mul(&lij)).mul(&ljk2.mul(&pijk).sub(&pikl)));
                    let one = Scalar::one();
                    rec(
                        &mut rep,
                        "kappa1",
                        ix.clone(),
                        m.k(i, j, l).mul(&m.k(j, k, l).add(&one)).sub(&m.k(i, j, k).mul(&m.k(i, k, l).add(&one))),
                    );
                    rec(&mut rep, "kappa3", ix.clone(), qi.mul(&pjkl).mul(&pijk.sub(&pijl)).add(&pjkl).sub(&pikl));
                    let lijinv = lij.inv().expect("nonzero");
                    rec(
                        &mut rep,
                        "kappa4",
                        ix.clone(),
                        m.k(j, k, l).mul(&m.k(j, i, k).add(&lijinv)).sub(&m.k(i, k, l).mul(&m.k(j, i, l).add(&lijinv))),
                    );
                    rec(
                        &mut rep,
                        "kappa6",
                        ix.clone(),
                        lijinv.mul(&pijk).mul(&pijl).mul(&pjkl.sub(&pikl)).sub(&lij.mul(&pijk.sub(&pijl))),
                    );
                    let main = pijl
                        .sub(&pijk)
                        .is_zero()
                        .then(|| pikl.sub(&ljk2.mul(&pijk)))
                        .filter(|r| r.is_zero())
                        .map(|_| pjkl.sub(&ljk2.mul(&pijk)))
                        .unwrap_or_else(|| pijl.sub(&pijk).add(&pikl.sub(&ljk2.mul(&pijk))).add(&Scalar::one()));
                    let main_ok = pijl == pijk && pikl == ljk2.mul(&pijk) && pjkl == ljk2.mul(&pijk);
                    rep.push(CheckRecord::new("main", ix, if main_ok { "0".into() } else { main.to_literal() }, main_ok));
                }
            }
        }
    }
    Ok(rep)
}
