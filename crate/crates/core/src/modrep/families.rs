use super::{box_points, qnum, Backend, ModError, ModuleKind, Point, Step, WeightModuleWindow};
use crate::classify::is_cp_highest_weight;
use crate::scalars::{bracket, Scalar, ToralScalar};

fn is_pm_q(t: &ToralScalar, k: i32) -> bool {
    t.q_exponent() == Some(k)
}

/// An omega seed whose degree-zero piece is `L(lambda)` with the vacuum as
/// highest weight vector: entries up to `p` are `+-q^{-1}`, entries from `p+2`
/// on are `+-1`, and consecutive ratios are `lambda`.
pub fn highest_weight_seed(lambda: &[ToralScalar]) -> Option<Vec<ToralScalar>> {
    let n = lambda.len();
    for p in 0..=n {
        let mut mu = vec![ToralScalar::one(); n + 1];
        if p == n {
            mu[n - 1] = ToralScalar::q_pow(-1);
            mu[n] = mu[n - 1].mul(lambda[n - 1].inv());
            for i in (0..n - 1).rev() {
                mu[i] = lambda[i].mul(mu[i + 1]);
            }
        } else {
            for i in (0..n).rev() {
                mu[i] = lambda[i].mul(mu[i + 1]);
            }
        }
        let low = (0..p).all(|i| is_pm_q(&mu[i], -1));
        let high = (p + 1..=n).all(|i| is_pm_q(&mu[i], 0));
        if low && high {
            return Some(mu);
        }
    }
    None
}

/// `L(lambda)` for `lambda` in the completely pointed families.
pub fn highest_weight_module(
    n: usize,
    lambda: &[ToralScalar],
    radius: i32,
    params: usize,
) -> Result<WeightModuleWindow, ModError> {
    if lambda.len() != n {
        return Err(ModError::Spec(format!("lambda needs {n} entries, got {}", lambda.len())));
    }
    let label = || lambda.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ");
    if !is_cp_highest_weight(lambda).matches {
        return Err(ModError::NotCompletelyPointed(format!("({})", label())));
    }
    if let Some(mu) = highest_weight_seed(lambda) {
        let w = WeightModuleWindow::build_gwa(n, &mu, radius, params)?;
        let piece: Vec<usize> = (0..w.len()).filter(|&i| w.points[i].iter().sum::<i32>() == 0).collect();
        let mut out = w.restrict(&piece);
        out.kind = ModuleKind::HighestWeight;
        return Ok(out);
    }
    let slot = lambda.iter().position(|t| is_pm_q(t, 1));
    match slot {
        Some(i) if lambda.iter().enumerate().all(|(j, t)| j == i || is_pm_q(t, 0)) => {
            let signs: Vec<i8> = lambda.iter().map(|t| t.sign).collect();
            let mut w = exterior_power_module(n, i + 1, &signs);
            w.kind = ModuleKind::HighestWeight;
            w.radius = radius;
            w.params = params;
            Ok(w)
        }
        _ => Err(ModError::NotCompletelyPointed(format!("({})", label()))),
    }
}

/// The `i`-th exterior power of the natural module, twisted by signs on `K_j`.
pub fn exterior_power_module(n: usize, i: usize, signs: &[i8]) -> WeightModuleWindow {
    assert!(i >= 1 && i <= n + 1 && signs.len() == n);
    let all = box_points(&vec![0; n + 1], &vec![1; n + 1]);
    let points: Vec<Point> = all.into_iter().filter(|p| p.iter().sum::<i32>() == i as i32).collect();
    let mut s = vec![1i64; n + 1];
    for a in (0..n).rev() {
        s[a] = signs[a] as i64 * s[a + 1];
    }
    let weights = points
        .iter()
        .map(|p| (0..=n).map(|a| Scalar::q_pow(p[a] as i64).mul(&Scalar::from_int(s[a]))).collect())
        .collect();
    let mut e = vec![Vec::new(); n];
    let mut f = vec![Vec::new(); n];
    for p in &points {
        for j in 0..n {
            e[j].push(if p[j] == 0 && p[j + 1] == 1 {
                let mut t = p.clone();
                t[j] = 1;
                t[j + 1] = 0;
                Step::To(t, Scalar::from_int(signs[j] as i64))
            } else {
                Step::Zero
            });
            f[j].push(if p[j] == 1 && p[j + 1] == 0 {
                let mut t = p.clone();
                t[j] = 0;
                t[j + 1] = 1;
                Step::To(t, Scalar::one())
            } else {
                Step::Zero
            });
        }
    }
    WeightModuleWindow::assemble(n, ModuleKind::Table, 2, 0, Backend::Table { e, f }, points, weights)
}

/// `L(q+1)` for `U_q(sl_2)` on `v_0 .. v_radius`, as a `gl_2` module with
/// `Kb_1 = (1+q) q^{-k}` and `Kb_2 = q^k`.
pub fn lq1_example_module(radius: i32) -> WeightModuleWindow {
    let r = radius.max(1);
    let top = Scalar::one().add(&Scalar::q());
    let points: Vec<Point> = (0..=r).map(|k| vec![k]).collect();
    let weights = (0..=r as i64).map(|k| vec![top.mul(&Scalar::q_pow(-k)), Scalar::q_pow(k)]).collect();
    let mut e = vec![Vec::new()];
    let mut f = vec![Vec::new()];
    for k in 0..=r {
        e[0].push(if k == 0 {
            Step::Zero
        } else {
            Step::To(vec![k - 1], bracket(&top, 1 - k as i64).expect("1+q is nonzero"))
        });
        f[0].push(Step::To(vec![k + 1], qnum(k as i64 + 1)));
    }
    WeightModuleWindow::assemble(1, ModuleKind::Sl2Lq1Example, r, 0, Backend::Table { e, f }, points, weights)
}

fn trivial_table(n: usize, weights: Vec<Vec<Scalar>>) -> WeightModuleWindow {
    let k = weights.len();
    let points = (0..k as i32).map(|i| vec![i]).collect();
    let zeros = vec![vec![Step::Zero; k]; n];
    WeightModuleWindow::assemble(n, ModuleKind::Table, 1, 0, Backend::Table { e: zeros.clone(), f: zeros }, points, weights)
}

/// Two copies of the trivial module: a two-dimensional weight space.
pub fn vacuum_pair_module(n: usize) -> WeightModuleWindow {
    trivial_table(n, vec![vec![Scalar::one(); n + 1]; 2])
}

/// The trivial module plus a one-dimensional module with central `Kb = q`.
pub fn two_orbit_module(n: usize) -> WeightModuleWindow {
    trivial_table(n, vec![vec![Scalar::one(); n + 1], vec![Scalar::q(); n + 1]])
}
