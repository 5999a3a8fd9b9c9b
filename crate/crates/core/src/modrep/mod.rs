//! Weight modules presented on finite windows of their support lattice.
//!
//! Two backends: modules of `A^q_{n+1}` built from an `omega` seed (acting on
//! `U_q` through `pi`), and explicit generator tables.

use std::collections::{BTreeMap, HashMap};

use crate::rootsys::convex_order;
use crate::scalars::{bracket, qint, Params, Scalar, ScalarError, ToralScalar};
use crate::uq::identities::Gen;
use crate::uq::Element;
use crate::weylq::{GwaElement, GwaMonomial};

mod export;
mod families;
mod spec;

pub use export::{window_from_json, window_to_dot, window_to_json};
pub use families::{
    exterior_power_module, highest_weight_module, highest_weight_seed, lq1_example_module, two_orbit_module,
    vacuum_pair_module,
};
pub use spec::{ModuleKind, ModuleSpec};

pub type Point = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("invalid module spec: {0}")]
    Spec(String),
    #[error("rank mismatch: element has rank {0}, module has rank {1}")]
    RankMismatch(usize, usize),
    #[error("weight {0} is outside the completely pointed families")]
    NotCompletelyPointed(String),
    #[error("operation needs a module built from an omega seed")]
    NotGwa,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A finite linear combination of window basis vectors, keyed by point index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector(BTreeMap<usize, Scalar>);

impl Vector {
    pub fn zero() -> Self {
        Vector(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        Vector(BTreeMap::from([(i, Scalar::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Scalar::zero);
        *e = e.add(c);
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add(&self, o: &Vector) -> Vector {
        let mut out = self.clone();
        for (i, c) in o.terms() {
            out.add_term(i, c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector(self.0.iter().map(|(k, v)| (*k, v.mul(c))).collect())
    }

    pub fn sub(&self, o: &Vector) -> Vector {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    /// `Some(c)` when this vector is `c` times the basis vector `i`.
    pub fn proportional_to(&self, i: usize) -> Option<Scalar> {
        match self.0.len() {
            0 => Some(Scalar::zero()),
            1 => self.0.get(&i).cloned(),
            _ => None,
        }
    }
}

/// Result of acting on a window vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Image(Vector),
    /// Some intermediate or final basis vector lies outside the window.
    LeavesWindow(Point),
}

impl Outcome {
    pub fn image(self) -> Option<Vector> {
        match self {
            Outcome::Image(v) => Some(v),
            Outcome::LeavesWindow(_) => None,
        }
    }
}

/// One generator applied to one basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Zero,
    To(Point, Scalar),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Backend {
    Gwa { mu: Vec<ToralScalar> },
    /// `e[i-1][p]` and `f[i-1][p]` for the simple generators at point index `p`.
    Table { e: Vec<Vec<Step>>, f: Vec<Vec<Step>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightModuleWindow {
    pub(crate) n: usize,
    pub(crate) kind: ModuleKind,
    pub(crate) radius: i32,
    pub(crate) params: usize,
    pub(crate) backend: Backend,
    pub(crate) points: Vec<Point>,
    pub(crate) index: HashMap<Point, usize>,
    pub(crate) weights: Vec<Vec<Scalar>>,
}

fn omega_at(mu: &[ToralScalar], g: &[i32], i: usize) -> ToralScalar {
    mu[i - 1].shift_q(g[i - 1])
}

fn is_pm(t: &ToralScalar, k: i32) -> bool {
    t.q_exponent() == Some(k)
}

/// `x_i v_g`, with the normalization coefficient 1.
pub(crate) fn gwa_x_step(mu: &[ToralScalar], g: &[i32], i: usize) -> Step {
    if is_pm(&omega_at(mu, g, i), -1) {
        return Step::Zero;
    }
    let mut h = g.to_vec();
    h[i - 1] += 1;
    Step::To(h, Scalar::one())
}

/// `y_i v_g = [omega_i(g - e_i); 1] v_{g - e_i}`.
pub(crate) fn gwa_y_step(mu: &[ToralScalar], g: &[i32], i: usize) -> Step {
    let w = omega_at(mu, g, i);
    if is_pm(&w, 0) {
        return Step::Zero;
    }
    let mut h = g.to_vec();
    h[i - 1] -= 1;
    let c = bracket(&w.shift_q(-1).to_scalar(), 1).expect("toral values are nonzero");
    Step::To(h, c)
}

/// Lattice points of a box, in lexicographic order.
pub(crate) fn box_points(lo: &[i32], hi: &[i32]) -> Vec<Point> {
    let mut out = vec![Vec::new()];
    for (a, b) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for p in &out {
            for v in *a..=*b {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

impl WeightModuleWindow {
    pub(crate) fn assemble(
        n: usize,
        kind: ModuleKind,
        radius: i32,
        params: usize,
        backend: Backend,
        points: Vec<Point>,
        weights: Vec<Vec<Scalar>>,
    ) -> Self {
        let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        WeightModuleWindow { n, kind, radius, params, backend, points, index, weights }
    }

    /// The module of `A^q_{n+1}` through `mu`, cut to `|g|_inf <= radius`.
    pub fn build_gwa(n: usize, mu: &[ToralScalar], radius: i32, params: usize) -> Result<Self, ModError> {
        if mu.len() != n + 1 {
            return Err(ModError::Spec(format!("omega seed needs {} entries, got {}", n + 1, mu.len())));
        }
        if radius < 1 {
            return Err(ModError::Spec("radius must be positive".into()));
        }
        let mut lo = vec![0; n + 1];
        let mut hi = vec![0; n + 1];
        for i in 1..=n + 1 {
            let mut g = vec![0; n + 1];
            while g[i - 1] < radius && gwa_x_step(mu, &g, i) != Step::Zero {
                g[i - 1] += 1;
            }
            hi[i - 1] = g[i - 1];
            g[i - 1] = 0;
            while g[i - 1] > -radius && gwa_y_step(mu, &g, i) != Step::Zero {
                g[i - 1] -= 1;
            }
            lo[i - 1] = g[i - 1];
        }
        let points = box_points(&lo, &hi);
        let weights = points
            .iter()
            .map(|g| (1..=n + 1).map(|i| omega_at(mu, g, i).to_scalar()).collect())
            .collect();
        Ok(Self::assemble(n, ModuleKind::GwaWeight, radius, params, Backend::Gwa { mu: mu.to_vec() }, points, weights))
    }

    pub fn build(spec: &ModuleSpec) -> Result<Self, ModError> {
        match spec.kind {
            ModuleKind::GwaWeight => {
                let mu = spec.omega.as_ref().ok_or_else(|| ModError::Spec("missing omega".into()))?;
                Self::build_gwa(spec.n, mu, spec.radius, spec.params.count())
            }
            ModuleKind::HighestWeight => {
                let l = spec.lambda.as_ref().ok_or_else(|| ModError::Spec("missing lambda".into()))?;
                highest_weight_module(spec.n, l, spec.radius, spec.params.count())
            }
            ModuleKind::Sl2Lq1Example => {
                if spec.n != 1 {
                    return Err(ModError::Spec("sl2-lq1-example has rank 1".into()));
                }
                Ok(lq1_example_module(spec.radius))
            }
            ModuleKind::Table => Err(ModError::Spec("table modules are not built from specs".into())),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn radius(&self) -> i32 {
        self.radius
    }

    pub fn params(&self) -> Params {
        Params::new(self.params).expect("parameter count was validated")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn index_of(&self, g: &[i32]) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// `Kb_1 .. Kb_{n+1}` eigenvalues at a point.
    pub fn weight(&self, i: usize) -> &[Scalar] {
        &self.weights[i]
    }

    /// `K_1 .. K_n` eigenvalues at a point.
    pub fn sl_weight(&self, i: usize) -> Vec<Scalar> {
        let w = &self.weights[i];
        (0..self.n).map(|a| w[a].div(&w[a + 1])).collect()
    }

    /// The omega seed, for modules built from one.
    pub fn seed(&self) -> Option<&[ToralScalar]> {
        match &self.backend {
            Backend::Gwa { mu } => Some(mu),
            Backend::Table { .. } => None,
        }
    }

    pub fn is_gwa(&self) -> bool {
        matches!(self.backend, Backend::Gwa { .. })
    }

    /// The same module restricted to a subset of its points.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        let mut keep: Vec<usize> = idx.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let points: Vec<Point> = keep.iter().map(|&i| self.points[i].clone()).collect();
        let weights = keep.iter().map(|&i| self.weights[i].clone()).collect();
        let backend = match &self.backend {
            Backend::Gwa { mu } => Backend::Gwa { mu: mu.clone() },
            Backend::Table { e, f } => {
                let pick = |t: &Vec<Vec<Step>>| t.iter().map(|row| keep.iter().map(|&i| row[i].clone()).collect()).collect();
                Backend::Table { e: pick(e), f: pick(f) }
            }
        };
        Self::assemble(self.n, self.kind, self.radius, self.params, backend, points, weights)
    }

    /// Points whose chains are probed by the root classification.
    pub fn probe_points(&self) -> Vec<usize> {
        let half = self.radius / 2;
        (0..self.len()).filter(|&i| self.points[i].iter().all(|x| x.abs() <= half)).collect()
    }

    fn land(&self, s: Step, c: &Scalar, out: &mut Vector) -> Result<(), Point> {
        if let Step::To(h, k) = s {
            match self.index.get(&h) {
                Some(&t) => out.add_term(t, &k.mul(c)),
                None => return Err(h),
            }
        }
        Ok(())
    }

    /// `x_i` or `y_i` on a vector; only for seeded modules.
    pub fn step_xy(&self, x: bool, i: usize, v: &Vector) -> Result<Outcome, ModError> {
        self.chain(&[(x, i)], v)
    }

    /// A single generator of `U_q(gl_{n+1})`.
    pub fn apply_gen(&self, g: Gen, v: &Vector) -> Result<Outcome, ModError> {
        match (&self.backend, g) {
            (_, Gen::Kb(j, p)) => {
                let mut out = Vector::zero();
                for (i, c) in v.terms() {
                    out.add_term(i, &c.mul(&self.weights[i][j - 1].pow(p as i64)?));
                }
                Ok(Outcome::Image(out))
            }
            (Backend::Gwa { .. }, Gen::E(i)) => self.chain(&[(false, i + 1), (true, i)], v),
            (Backend::Gwa { .. }, Gen::F(i)) => self.chain(&[(false, i), (true, i + 1)], v),
            (Backend::Table { e, f }, Gen::E(i) | Gen::F(i)) => {
                let table = if matches!(g, Gen::E(_)) { &e[i - 1] } else { &f[i - 1] };
                let mut out = Vector::zero();
                for (p, c) in v.terms() {
                    if let Err(h) = self.land(table[p].clone(), c, &mut out) {
                        return Ok(Outcome::LeavesWindow(h));
                    }
                }
                Ok(Outcome::Image(out))
            }
        }
    }

    /// A word in `x_i, y_i`, rightmost letter first in `steps` order. Intermediate
    /// vectors live on the lattice; only the result has to land in the window.
    fn chain(&self, steps: &[(bool, usize)], v: &Vector) -> Result<Outcome, ModError> {
        let Backend::Gwa { mu } = &self.backend else {
            return Err(ModError::NotGwa);
        };
        let mut cur: BTreeMap<Point, Scalar> = v.terms().map(|(p, c)| (self.points[p].clone(), c.clone())).collect();
        for &(x, i) in steps {
            let mut next: BTreeMap<Point, Scalar> = BTreeMap::new();
            for (g, c) in cur {
                if let Step::To(h, k) = if x { gwa_x_step(mu, &g, i) } else { gwa_y_step(mu, &g, i) } {
                    let e = next.entry(h).or_insert_with(Scalar::zero);
                    *e = e.add(&k.mul(&c));
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
            if cur.is_empty() {
                break;
            }
        }
        let mut out = Vector::zero();
        for (g, c) in cur {
            match self.index.get(&g) {
                Some(&t) => out.add_term(t, &c),
                None => return Ok(Outcome::LeavesWindow(g)),
            }
        }
        Ok(Outcome::Image(out))
    }

    /// Applies a word of generators, rightmost letter first.
    pub fn apply_word(&self, word: &[Gen], v: &Vector) -> Result<Outcome, ModError> {
        let mut cur = v.clone();
        for g in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            match self.apply_gen(*g, &cur)? {
                Outcome::Image(w) => cur = w,
                leave => return Ok(leave),
            }
        }
        Ok(Outcome::Image(cur))
    }

    /// Acts with an element of `A^q_{n+1}`.
    pub fn act_gwa(&self, a: &GwaElement, v: &Vector) -> Result<Outcome, ModError> {
        if a.rank() != self.n {
            return Err(ModError::RankMismatch(a.rank(), self.n));
        }
        if !self.is_gwa() {
            return Err(ModError::NotGwa);
        }
        let mut out = Vector::zero();
        for (m, c) in a.terms() {
            match self.act_gwa_monomial(m, v)? {
                Outcome::Image(w) => out = out.add(&w.scale(c)),
                leave => return Ok(leave),
            }
        }
        Ok(Outcome::Image(out))
    }

    fn act_gwa_monomial(&self, m: &GwaMonomial, v: &Vector) -> Result<Outcome, ModError> {
        let mut steps = Vec::new();
        for i in 1..=self.n + 1 {
            steps.extend(std::iter::repeat_n((false, i), m.y[i - 1] as usize));
        }
        for i in 1..=self.n + 1 {
            steps.extend(std::iter::repeat_n((true, i), m.x[i - 1] as usize));
        }
        let cur = match self.chain(&steps, v)? {
            Outcome::Image(w) => w,
            leave => return Ok(leave),
        };
        let mut out = Vector::zero();
        for (p, c) in cur.terms() {
            let mut k = c.clone();
            for (j, &r) in m.r.iter().enumerate() {
                if r != 0 {
                    k = k.mul(&self.weights[p][j].pow(r as i64)?);
                }
            }
            out.add_term(p, &k);
        }
        Ok(Outcome::Image(out))
    }

    /// Acts with an element of `U_q(gl_{n+1})`.
    pub fn act(&self, a: &Element, v: &Vector) -> Result<Outcome, ModError> {
        if a.rank() != self.n {
            return Err(ModError::RankMismatch(a.rank(), self.n));
        }
        let roots = convex_order(self.n);
        let mut out = Vector::zero();
        for (m, c) in a.terms() {
            let mut cur = v.clone();
            let mut letters = Vec::new();
            for (b, &x) in m.f.iter().enumerate() {
                letters.extend(std::iter::repeat_n((roots[b].i, roots[b].j, false), x as usize));
            }
            letters.push((0, 0, true));
            for (b, &x) in m.e.iter().enumerate() {
                letters.extend(std::iter::repeat_n((roots[b].i, roots[b].j, true), x as usize));
            }
            for &(a0, b0, pos) in letters.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                let r = if a0 == 0 { self.apply_k(&m.k, &cur) } else { self.apply_root(a0, b0, pos, &cur)? };
                match r {
                    Outcome::Image(w) => cur = w,
                    leave => return Ok(leave),
                }
            }
            out = out.add(&cur.scale(c));
        }
        Ok(Outcome::Image(out))
    }

    fn apply_k(&self, k: &[i32], v: &Vector) -> Outcome {
        let mut out = Vector::zero();
        for (p, c) in v.terms() {
            let mut s = c.clone();
            for (j, &e) in k.iter().enumerate() {
                if e != 0 {
                    s = s.mul(&self.weights[p][j].pow(e as i64).expect("weights are nonzero"));
                }
            }
            out.add_term(p, &s);
        }
        Outcome::Image(out)
    }

    /// Root vector `E_{e_a - e_b}` (or its negative), expanded through the
    /// defining recursion into simple generators.
    fn apply_root(&self, a: usize, b: usize, positive: bool, v: &Vector) -> Result<Outcome, ModError> {
        if b == a + 1 {
            return self.apply_gen(if positive { Gen::E(a) } else { Gen::F(a) }, v);
        }
        let seq = |first: (usize, usize), second: (usize, usize)| -> Result<Outcome, ModError> {
            match self.apply_root(first.0, first.1, positive, v)? {
                Outcome::Image(w) => self.apply_root(second.0, second.1, positive, &w),
                leave => Ok(leave),
            }
        };
        let head = (a, a + 1);
        let tail = (a + 1, b);
        let (ht, th) = (seq(head, tail)?, seq(tail, head)?);
        let (ht, th) = match (ht, th) {
            (Outcome::Image(x), Outcome::Image(y)) => (x, y),
            (Outcome::LeavesWindow(h), _) | (_, Outcome::LeavesWindow(h)) => return Ok(Outcome::LeavesWindow(h)),
        };
        // ht = tail(head(v)) is the word `tail head`; th is the word `head tail`.
        Ok(Outcome::Image(if positive {
            ht.scale(&Scalar::q_pow(-1)).sub(&th)
        } else {
            th.scale(&Scalar::q()).sub(&ht)
        }))
    }

    /// Acts on every listed basis vector.
    pub fn act_on_points(&self, a: &Element, idx: &[usize]) -> Result<Vec<Outcome>, ModError> {
        if a.rank() != self.n {
            return Err(ModError::RankMismatch(a.rank(), self.n));
        }
        crate::par::par_map(idx, |&i| self.act(a, &Vector::basis(i))).into_iter().collect()
    }

    /// Generator steps used for reachability and export: `x_i, y_i` for seeded
    /// modules, `E_i, F_i` for tables.
    pub fn generator_steps(&self, p: usize) -> Vec<(String, Step)> {
        let g = &self.points[p];
        match &self.backend {
            Backend::Gwa { mu } => {
                let mut out = Vec::new();
                for i in 1..=self.n + 1 {
                    out.push((format!("x{i}"), gwa_x_step(mu, g, i)));
                    out.push((format!("y{i}"), gwa_y_step(mu, g, i)));
                }
                out
            }
            Backend::Table { e, f } => {
                let mut out = Vec::new();
                for i in 1..=self.n {
                    out.push((format!("E{i}"), e[i - 1][p].clone()));
                    out.push((format!("F{i}"), f[i - 1][p].clone()));
                }
                out
            }
        }
    }

    /// Degree-zero moves: `x_i y_j` (`i != j`) for seeded modules, `E_i, F_i` for tables.
    /// `Err` carries a target outside the window.
    pub fn degree_zero_moves(&self, p: usize) -> Result<Vec<(usize, Scalar)>, Point> {
        let v = Vector::basis(p);
        let mut out = Vec::new();
        let gens: Vec<Vec<(bool, usize)>> = match &self.backend {
            Backend::Gwa { .. } => {
                let mut g = Vec::new();
                for i in 1..=self.n + 1 {
                    for j in 1..=self.n + 1 {
                        if i != j {
                            g.push(vec![(false, j), (true, i)]);
                        }
                    }
                }
                g
            }
            Backend::Table { .. } => Vec::new(),
        };
        let results: Vec<Outcome> = if gens.is_empty() {
            (1..=self.n)
                .flat_map(|i| [Gen::E(i), Gen::F(i)])
                .map(|g| self.apply_gen(g, &v).expect("table generators"))
                .collect()
        } else {
            gens.iter().map(|s| self.chain(s, &v).expect("seeded module")).collect()
        };
        for r in results {
            match r {
                Outcome::Image(w) => out.extend(w.terms().map(|(i, c)| (i, c.clone()))),
                Outcome::LeavesWindow(h) => return Err(h),
            }
        }
        Ok(out)
    }
}

/// A summand of the pullback, graded by the Euler eigenvalue `xi q^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub m: i64,
    pub points: Vec<usize>,
    /// Some degree-zero move leaves the window.
    pub truncated: bool,
    /// `K_i` eigenvalues of the unique vector killed by every `E_i`, for
    /// pieces that are fully contained.
    pub highest_weight: Option<Vec<Scalar>>,
    pub highest_point: Option<usize>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.points.len()
    }
}

fn build_piece(w: &WeightModuleWindow, m: i64, points: Vec<usize>) -> GradedPiece {
    let truncated = points.iter().any(|&p| w.degree_zero_moves(p).is_err());
    let mut tops = Vec::new();
    if !truncated {
        for &p in &points {
            let v = Vector::basis(p);
            let killed = (1..=w.n).all(|i| matches!(w.apply_gen(Gen::E(i), &v), Ok(Outcome::Image(x)) if x.is_zero()));
            if killed {
                tops.push(p);
            }
        }
    }
    let (highest_weight, highest_point) = if tops.len() == 1 { (Some(w.sl_weight(tops[0])), Some(tops[0])) } else { (None, None) };
    GradedPiece { m, points, truncated, highest_weight, highest_point }
}

/// Splits a seeded window into its Euler-graded pieces.
pub fn decompose_pullback(w: &WeightModuleWindow) -> Result<Vec<GradedPiece>, ModError> {
    if !w.is_gwa() {
        return Err(ModError::NotGwa);
    }
    let mut by_m: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, g) in w.points.iter().enumerate() {
        by_m.entry(g.iter().map(|&x| x as i64).sum()).or_default().push(i);
    }
    Ok(by_m.into_iter().map(|(m, pts)| build_piece(w, m, pts)).collect())
}

/// The whole window viewed as one piece (for table modules).
pub fn whole_piece(w: &WeightModuleWindow) -> GradedPiece {
    build_piece(w, 0, (0..w.len()).collect())
}

/// Every weight space inside the window is one-dimensional.
pub fn is_completely_pointed(w: &WeightModuleWindow) -> bool {
    let mut seen = std::collections::HashSet::new();
    w.weights.iter().all(|wt| seen.insert(wt.iter().map(|s| s.to_literal()).collect::<Vec<_>>()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// Point indices spanning a proper submodule.
    Separating(Vec<usize>),
    InconclusiveTruncated,
}

fn reach(start: usize, adj: &HashMap<usize, Vec<usize>>) -> Vec<usize> {
    let mut seen = std::collections::BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        for &t in adj.get(&p).map(|v| v.as_slice()).unwrap_or(&[]) {
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Reachability under degree-zero moves with nonzero coefficients.
pub fn is_irreducible_on_window(w: &WeightModuleWindow, piece: &GradedPiece) -> Irreducibility {
    if piece.truncated {
        return Irreducibility::InconclusiveTruncated;
    }
    let inside: std::collections::HashSet<usize> = piece.points.iter().copied().collect();
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &p in &piece.points {
        let Ok(moves) = w.degree_zero_moves(p) else {
            return Irreducibility::InconclusiveTruncated;
        };
        let targets = adj.entry(p).or_default();
        for (t, c) in moves {
            if !c.is_zero() && inside.contains(&t) && t != p {
                targets.push(t);
            }
        }
    }
    for &p in &piece.points {
        let r = reach(p, &adj);
        if r.len() < piece.points.len() {
            return Irreducibility::Separating(r);
        }
    }
    Irreducibility::Irreducible
}

/// `[a; 1] [b; 0]` for eigenvalues `a, b`.
pub fn theorem_one_scalar(a: &Scalar, b: &Scalar) -> Scalar {
    bracket(a, 1).expect("nonzero").mul(&bracket(b, 0).expect("nonzero"))
}

/// `[k]` as a scalar, re-exported for table builders.
pub(crate) fn qnum(k: i64) -> Scalar {
    qint(k)
}
