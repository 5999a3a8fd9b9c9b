use super::ClassifyError;
use crate::modrep::{Outcome, WeightModuleWindow};
use crate::report::{CheckRecord, Report};
use crate::scalars::{q_diff, Scalar};
use crate::uq::Element;
use crate::weylq::{degree_zero_preimage, pi};

/// `[Kb_j; s]` inside `U_q(gl_{n+1})`.
fn kbar_bracket(n: usize, j: usize, s: i64) -> Element {
    let d = q_diff().inv().expect("q - q^{-1} is nonzero");
    Element::kbar(n, j, 1)
        .scale(&Scalar::q_pow(s))
        .sub(&Element::kbar(n, j, -1).scale(&Scalar::q_pow(-s)))
        .scale(&d)
}

/// Nonzero elements of `ker pi`: the Casimir-type relations `F_i E_i - [Kb_i; 1][Kb_{i+1}; 0]`
/// and the differences `s(pi(u)) - u` for a section `s` on degree zero words.
pub fn kernel_samples(n: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 1..=n {
        let fe = Element::f(n, i).mul(&Element::e(n, i));
        out.push(fe.sub(&kbar_bracket(n, i, 1).mul(&kbar_bracket(n, i + 1, 0))));
    }
    let mut words = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                words.push(Element::f(n, i).mul(&Element::f(n, j)).mul(&Element::e(n, j)).mul(&Element::e(n, i)));
            }
        }
        words.push(Element::e(n, i).mul(&Element::f(n, i)).mul(&Element::f(n, i)).mul(&Element::e(n, i)));
    }
    for u in words {
        if let Ok(s) = degree_zero_preimage(&pi(&u)) {
            let k = s.sub(&u);
            if !k.is_zero() && !out.contains(&k) {
                out.push(k);
            }
        }
    }
    out
}

/// Checks that `x` kills every vector of each pulled back window where the
/// action stays inside.
pub fn kernel_annihilates(x: &Element, windows: &[WeightModuleWindow]) -> Result<Report, ClassifyError> {
    if !pi(x).is_zero() {
        return Err(ClassifyError::NotInKernel);
    }
    let mut rep = Report::default();
    for (wi, w) in windows.iter().enumerate() {
        if !w.is_gwa() {
            return Err(ClassifyError::Precondition("kernel checks need a seeded window".into()));
        }
        let idx: Vec<usize> = (0..w.len()).collect();
        let outs = w.act_on_points(x, &idx)?;
        let mut checked = 0;
        let mut bad = None;
        for (p, o) in outs.into_iter().enumerate() {
            if let Outcome::Image(v) = o {
                checked += 1;
                if !v.is_zero() && bad.is_none() {
                    bad = Some(format!("point {:?}", w.point(p)));
                }
            }
        }
        rep.push(match (checked, bad) {
            (0, _) => CheckRecord::inconclusive("kernel", vec![wi], "no interior points"),
            (_, Some(b)) => CheckRecord::new("kernel", vec![wi], b, false),
            (k, None) => CheckRecord::new("kernel", vec![wi], format!("0 at {k} points"), true),
        });
    }
    Ok(rep)
}
