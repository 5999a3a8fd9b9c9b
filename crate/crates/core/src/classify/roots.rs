use serde::Serialize;

use super::ClassifyError;
use crate::modrep::{Outcome, Vector, WeightModuleWindow};
use crate::par::par_map;
use crate::report::{CheckRecord, Report};
use crate::rootsys::{all_roots, find_adapted_base, is_closed, Base, Root};
use crate::uq::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainVerdict {
    Nilpotent,
    TorsionFree,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPartition {
    pub n_s: Vec<Root>,
    pub n_a: Vec<Root>,
    pub t_s: Vec<Root>,
    pub t_a: Vec<Root>,
    pub inconclusive: Vec<Root>,
}

impl RootPartition {
    pub fn n(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.n_s.iter().chain(&self.n_a).copied().collect();
        v.sort();
        v
    }

    pub fn t(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.t_s.iter().chain(&self.t_a).copied().collect();
        v.sort();
        v
    }

    pub fn is_complete(&self) -> bool {
        self.inconclusive.is_empty()
    }

    /// Closure of `N` and `T`, and `N u T = Phi` with no overlap.
    pub fn closure_report(&self, rank: usize) -> Report {
        let mut rep = Report::default();
        let n = self.n();
        let t = self.t();
        let mut all: Vec<Root> = n.iter().chain(&t).copied().collect();
        all.sort();
        let before = all.len();
        all.dedup();
        rep.push(CheckRecord::new("partition-disjoint", vec![], format!("{}", before - all.len()), before == all.len()));
        let covers = all == { let mut a = all_roots(rank); a.sort(); a };
        rep.push(CheckRecord::new("partition-covers", vec![], format!("{} of {}", all.len(), rank * (rank + 1)), covers));
        rep.push(CheckRecord::new("n-closed", vec![], String::new(), is_closed(&n)));
        rep.push(CheckRecord::new("t-closed", vec![], String::new(), is_closed(&t)));
        rep
    }
}

/// Follows `E_beta^k v` from one point.
fn chain(w: &WeightModuleWindow, e: &Element, p: usize, bound: i32) -> Result<Option<i32>, ClassifyError> {
    let mut v = Vector::basis(p);
    for k in 1..=bound {
        match w.act(e, &v)? {
            Outcome::Image(x) if x.is_zero() => return Ok(Some(k)),
            Outcome::Image(x) => v = x,
            Outcome::LeavesWindow(_) => return Ok(None),
        }
    }
    Ok(None)
}

/// Classifies one root from chains started at the probe points.
pub fn classify_root(w: &WeightModuleWindow, beta: Root) -> Result<ChainVerdict, ClassifyError> {
    let e = Element::root_vector(w.rank(), beta);
    let bound = 2 * w.radius() + 1;
    let probes = w.probe_points();
    if probes.is_empty() {
        return Ok(ChainVerdict::Inconclusive);
    }
    let lengths = par_map(&probes, |&p| chain(w, &e, p, bound));
    let mut vanished = 0;
    let mut first_step_zero = false;
    for r in lengths {
        if let Some(k) = r? {
            vanished += 1;
            if k == 1 {
                first_step_zero = true;
            }
        }
    }
    Ok(if vanished == probes.len() {
        ChainVerdict::Nilpotent
    } else if vanished == 0 && !first_step_zero {
        ChainVerdict::TorsionFree
    } else {
        ChainVerdict::Inconclusive
    })
}

/// Splits the roots into locally nilpotent and torsion free ones.
pub fn partition_roots(w: &WeightModuleWindow) -> Result<RootPartition, ClassifyError> {
    let roots = all_roots(w.rank());
    let mut n = Vec::new();
    let mut t = Vec::new();
    let mut inconclusive = Vec::new();
    for r in &roots {
        match classify_root(w, *r)? {
            ChainVerdict::Nilpotent => n.push(*r),
            ChainVerdict::TorsionFree => t.push(*r),
            ChainVerdict::Inconclusive => inconclusive.push(*r),
        }
    }
    let split = |s: &[Root]| -> (Vec<Root>, Vec<Root>) { s.iter().partition(|r| s.contains(&r.neg())) };
    let (n_s, n_a) = split(&n);
    let (t_s, t_a) = split(&t);
    Ok(RootPartition { n_s, n_a, t_s, t_a, inconclusive })
}

/// The roots whose vectors must kill `V^+`, positive for the adapted base.
pub fn upper_roots(rank: usize, p: &RootPartition) -> Result<(Base, Vec<Root>), ClassifyError> {
    let base = find_adapted_base(rank, &p.n_a, &p.n_s, &p.t_s)
        .map_err(|e| ClassifyError::Precondition(e.to_string()))?;
    let pos = base.positive_roots(rank);
    let mut out: Vec<Root> = p.n_a.clone();
    out.extend(p.n_s.iter().filter(|r| pos.contains(r)));
    out.sort();
    Ok((base, out))
}

/// Pushes a probe vector up along `N` until every upper root vector kills it.
pub fn find_invariant_vector(w: &WeightModuleWindow, p: &RootPartition) -> Result<usize, ClassifyError> {
    if p.n().is_empty() {
        return Err(ClassifyError::Precondition("N is empty".into()));
    }
    let (_, upper) = upper_roots(w.rank(), p)?;
    let ops: Vec<Element> = upper.iter().map(|r| Element::root_vector(w.rank(), *r)).collect();
    let start = *w.probe_points().first().ok_or(ClassifyError::WindowExhausted)?;
    let mut cur = start;
    let limit = w.len() + 1;
    for _ in 0..limit {
        let mut moved = false;
        for e in &ops {
            match w.act(e, &Vector::basis(cur))? {
                Outcome::Image(x) if x.is_zero() => {}
                Outcome::Image(x) => {
                    let (t, _) = x.terms().next().expect("nonzero");
                    if x.len() != 1 {
                        return Err(ClassifyError::NotProportional("root vector image".into()));
                    }
                    cur = t;
                    moved = true;
                    break;
                }
                Outcome::LeavesWindow(_) => return Err(ClassifyError::WindowExhausted),
            }
        }
        if !moved {
            return Ok(cur);
        }
    }
    Err(ClassifyError::WindowExhausted)
}
