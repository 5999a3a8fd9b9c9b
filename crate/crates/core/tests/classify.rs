mod common;

use common::*;
use qua_core::classify::{
    c_quadruple, determinant_quadruples, determinant_residuals, find_invariant_vector, formal_det, gamma_det,
    is_cp_highest_weight, kernel_annihilates, lambda1_quadruple, partition_roots, solve_mu, verify_phi_relations,
    ClassifyError, Quadruple,
};
use qua_core::modrep::{decompose_pullback, exterior_power_module, lq1_example_module, WeightModuleWindow};
use qua_core::report::Status;
use qua_core::rootsys::Root;
use qua_core::scalars::{bracket, Scalar, ToralScalar as T};
use qua_core::uq::Element;

fn tags(l: &[T]) -> Vec<String> {
    is_cp_highest_weight(l).tags
}

#[test]
fn family_predicate() {
    assert!(tags(&[c(1), one(), one()]).contains(&"c-first".to_string()));
    assert!(tags(&[one(), q(1), one()]).contains(&"q-slot-2".to_string()));
    assert!(tags(&[one(), one(), c(1)]).contains(&"c-last".to_string()));
    assert!(tags(&[one(), c(1), c(1).inv().shift_q(-1)]).contains(&"adjacent-pair-2".to_string()));
    assert!(!is_cp_highest_weight(&[q(1), q(1)]).matches);
    assert!(!is_cp_highest_weight(&[one(), c(1), one()]).matches);
    // Overlapping families are reported together.
    assert!(tags(&[one(), one()]).len() > 1);
}

#[test]
fn determinant_vanishes_on_completely_pointed_modules() {
    let mut measured = 0;
    for l in highest_weights().into_iter().filter(|l| l.len() >= 2) {
        let n = l.len();
        let w = hw_window(&l, 4);
        let top = w.index_of(&vec![0; n + 1]).unwrap();
        for quad in determinant_quadruples(n) {
            match gamma_det(&quad, &w, top) {
                Ok(d) => {
                    assert!(d.is_zero(), "{:?} {} {:?}", l, quad.check, quad.indices);
                    assert_eq!(d, formal_det(&quad).eval(&l));
                    measured += 1;
                }
                Err(ClassifyError::Inconclusive(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(measured > 10);
}

#[test]
fn measured_and_formal_determinants_agree_off_the_families() {
    // On a generic torsion free seed the vacuum is not highest, but every vector
    // still has a determinant; at the natural module's top it must vanish.
    let w = exterior_power_module(2, 1, &[1, 1]);
    let top = w.index_of(&[1, 0, 0]).unwrap();
    let d = gamma_det(&lambda1_quadruple(2, 1), &w, top).unwrap();
    assert!(d.is_zero());
    let same = Quadruple {
        check: "repeated".into(),
        indices: vec![],
        x: [Element::em(2, 1, 3), Element::em(2, 1, 3)],
        y: [Element::ep(2, 1, 3), Element::ep(2, 1, 2).mul(&Element::ep(2, 2, 3))],
    };
    let g = WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 3, 3).unwrap();
    assert!(gamma_det(&same, &g, g.index_of(&[0, 0, 0]).unwrap()).unwrap().is_zero());
}

fn sbr(t: T, j: i64) -> Scalar {
    bracket(&t.to_scalar(), j).unwrap()
}

#[test]
fn lambda1_residual_matches_displayed_form() {
    // [l1; 0][l2; 0]([l1 l2; 0] + q^{-1} (l1 l2)^{-1}) up to a factor independent of lambda.
    let q1 = lambda1_quadruple(2, 1);
    let det = formal_det(&q1);
    let mut ratio: Option<Scalar> = None;
    for l in [[q(1), q(1)], [c(1), q(2)], [q(-2).neg(), c(1)], [c(1), c(1)]] {
        let l12 = l[0].mul(l[1]);
        let shown = sbr(l[0], 0).mul(&sbr(l[1], 0)).mul(&sbr(l12, 0).add(&Scalar::q_pow(-1).mul(&l12.inv().to_scalar())));
        let r = det.eval(&l).div(&shown);
        match &ratio {
            None => ratio = Some(r),
            Some(x) => assert_eq!(*x, r),
        }
    }
    let r = ratio.unwrap();
    assert!(r.as_toral().is_some(), "{}", r.to_literal());
    let rep = determinant_residuals(&[q(1), q(1)]);
    assert!(rep.records.iter().any(|r| r.check == "lambda1" && r.status == Status::Fail));
}

#[test]
fn lone_entry_criterion() {
    // [c; 0]^2 ([c; 0]^2 - 1), up to a factor independent of c.
    let det = formal_det(&c_quadruple(3, 2));
    let mut ratio: Option<Scalar> = None;
    for x in [c(1), q(2), c(1).shift_q(1).neg(), q(-3)] {
        let b2 = sbr(x, 0).mul(&sbr(x, 0));
        let shown = b2.mul(&b2.sub(&Scalar::one()));
        let got = det.eval(&[one(), x, one()]);
        let r = got.div(&shown);
        match &ratio {
            None => ratio = Some(r),
            Some(y) => assert_eq!(*y, r),
        }
    }
    for x in [one(), one().neg(), q(1), q(-1).neg()] {
        let b = sbr(x, 0);
        let z = b.mul(&b).mul(&b.mul(&b).sub(&Scalar::one())).is_zero();
        assert_eq!(det.eval(&[one(), x, one()]).is_zero(), z);
    }
}

#[test]
fn partitions() {
    let fock = fock(2, 4);
    for p in decompose_pullback(&fock).unwrap().into_iter().filter(|p| !p.truncated && p.m > 0) {
        let part = partition_roots(&fock.restrict(&p.points)).unwrap();
        assert!(part.t().is_empty(), "m={}", p.m);
        assert_eq!(part.n().len(), 6);
    }
    let w = WeightModuleWindow::build_gwa(2, &[c(1), one(), one()], 3, 1).unwrap();
    let part = partition_roots(&w).unwrap();
    assert!(part.is_complete());
    // y_2 vanishes on g_2 = 0, so E_{e1-e2} = x_1 y_2 is nilpotent; its negative never is.
    assert!(part.n_a.contains(&Root::new(1, 2)));
    assert!(part.t_a.contains(&Root::new(2, 1)));
    assert!(!part.n().is_empty() && !part.t().is_empty());
    let generic = WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 3, 3).unwrap();
    let part = partition_roots(&generic).unwrap();
    assert_eq!(part.t_s.len(), 6);
    assert!(part.closure_report(2).all_pass());
}

#[test]
fn invariant_vectors() {
    let w = fock(2, 3);
    let m2 = decompose_pullback(&w).unwrap().into_iter().find(|p| p.m == 2).unwrap();
    let piece = w.restrict(&m2.points);
    let part = partition_roots(&piece).unwrap();
    let v = find_invariant_vector(&piece, &part).unwrap();
    assert_eq!(piece.point(v), &vec![2, 0, 0]);
    let h = hw_window(&[c(1), one()], 4);
    let v = find_invariant_vector(&h, &partition_roots(&h).unwrap()).unwrap();
    assert_eq!(h.point(v), &vec![0, 0, 0]);
    let generic = WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 2, 3).unwrap();
    let part = partition_roots(&generic).unwrap();
    assert!(matches!(find_invariant_vector(&generic, &part), Err(ClassifyError::Precondition(_))));
}

fn strs(v: &[T]) -> Vec<String> {
    v.iter().map(|t| t.to_string()).collect()
}

#[test]
fn mu_solutions() {
    let h = hw_window(&[c(1), one()], 4);
    let top = h.index_of(&[0, 0, 0]).unwrap();
    let sols = solve_mu(&h, top).unwrap();
    assert!(sols.iter().any(|s| s.mu == vec![c(1), one(), one()] && s.tag == "identity"));
    for s in &sols {
        for i in 1..=3 {
            for j in i + 1..=3 {
                let z = qua_core::classify::measure_z(&h, top, i, j).unwrap();
                assert_eq!(z, sbr(s.mu[i - 1], 1).mul(&sbr(s.mu[j - 1], 0)), "{:?}", strs(&s.mu));
            }
        }
    }
    let w = fock(2, 4);
    for r in 1..=3 {
        let p = w.index_of(&[r, 0, 0]).unwrap();
        let sols = solve_mu(&w, p).unwrap();
        assert!(sols.iter().any(|s| s.mu == vec![q(r), one(), one()]));
        assert!(sols.iter().any(|s| s.mu == vec![q(r).neg(), one().neg(), one().neg()]));
    }
    let vac = solve_mu(&w, w.index_of(&[0, 0, 0]).unwrap()).unwrap();
    assert!(vac.iter().any(|s| s.mu.iter().all(|t| t.is_pm_one())));
    let lq = lq1_example_module(3);
    assert!(matches!(solve_mu(&lq, 0), Err(ClassifyError::Inconsistent(_))));
}

#[test]
fn torsion_free_relations() {
    let w = WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 3, 3).unwrap();
    let rep = verify_phi_relations(&w, w.index_of(&[0, 0, 0]).unwrap()).unwrap();
    for name in ["z1", "z2", "z3", "phi-nonzero"] {
        assert!(rep.records.iter().any(|r| r.check == name));
    }
    assert!(rep.all_pass());
    let w3 = WeightModuleWindow::build_gwa(3, &[c(1), c(2), c(3), c(4)], 3, 4).unwrap();
    let rep = verify_phi_relations(&w3, w3.index_of(&[1, 0, -1, 0]).unwrap()).unwrap();
    assert!(rep.records.iter().any(|r| r.check == "main" && r.status == Status::Pass));
    assert!(rep.all_pass());
    let lq = lq1_example_module(2);
    assert!(matches!(verify_phi_relations(&lq, 0), Err(ClassifyError::Precondition(_))));
}

#[test]
fn kernel_contract() {
    let w = WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 2, 3).unwrap();
    let rep = kernel_annihilates(&Element::zero(2), std::slice::from_ref(&w)).unwrap();
    assert!(rep.all_pass());
    assert_eq!(kernel_annihilates(&Element::e(2, 1), std::slice::from_ref(&w)), Err(ClassifyError::NotInKernel));
    let table = exterior_power_module(2, 1, &[1, 1]);
    assert!(matches!(kernel_annihilates(&Element::zero(2), &[table]), Err(ClassifyError::Precondition(_))));
}
