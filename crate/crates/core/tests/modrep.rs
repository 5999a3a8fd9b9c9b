mod common;

use common::*;
use proptest::prelude::*;
use qua_core::modrep::{
    decompose_pullback, highest_weight_module, is_completely_pointed, is_irreducible_on_window, lq1_example_module,
    two_orbit_module, vacuum_pair_module, whole_piece, Irreducibility, ModError, ModuleKind, ModuleSpec, Outcome,
    Vector, WeightModuleWindow,
};
use qua_core::scalars::{bracket, qint, Scalar};
use qua_core::uq::identities::Gen;
use qua_core::uq::Element;
use qua_core::weylq::{degree_zero_preimage, pi, GwaElement};

fn image(o: Outcome) -> Vector {
    match o {
        Outcome::Image(v) => v,
        Outcome::LeavesWindow(h) => panic!("left the window at {h:?}"),
    }
}

#[test]
fn fock_dimension_law() {
    for n in 1..=3 {
        let w = fock(n, 5);
        for p in decompose_pullback(&w).unwrap() {
            if p.m <= 5 {
                assert!(!p.truncated, "n={n} m={}", p.m);
                assert_eq!(p.dim(), compositions(n + 1, p.m as i32).len(), "n={n} m={}", p.m);
            }
        }
    }
}

#[test]
fn fock_vacuum_and_support() {
    let w = fock(2, 3);
    let v0 = Vector::basis(w.index_of(&[0, 0, 0]).unwrap());
    for i in 1..=3 {
        assert!(image(w.step_xy(false, i, &v0).unwrap()).is_zero());
    }
    assert_eq!(w.len(), 64);
    assert!(w.points().iter().all(|g| g.iter().all(|&x| (0..=3).contains(&x))));
    // pi(E_1) = x_1 y_2 and y_2 kills the vacuum.
    assert!(image(w.act(&Element::e(2, 1), &v0).unwrap()).is_zero());
    let piece = decompose_pullback(&w).unwrap().into_iter().find(|p| p.m == 0).unwrap();
    assert_eq!(piece.dim(), 1);
    assert_eq!(piece.highest_weight, Some(vec![Scalar::one(), Scalar::one()]));
}

#[test]
fn x_raises_omega_by_q() {
    let w = WeightModuleWindow::build_gwa(2, &[c(1), one(), one()], 2, 1).unwrap();
    let p = w.index_of(&[1, 0, 0]).unwrap();
    assert_eq!(w.weight(p)[0], Scalar::q().mul(&Scalar::c(1)));
    let v = image(w.step_xy(true, 1, &Vector::basis(w.index_of(&[0, 0, 0]).unwrap())).unwrap());
    assert_eq!(v, Vector::basis(p));
}

#[test]
fn generic_direction_is_unbounded() {
    let r = 4;
    let w = WeightModuleWindow::build_gwa(2, &[c(1), one(), one()], r, 1).unwrap();
    let first: Vec<i32> = w.points().iter().map(|g| g[0]).collect();
    assert_eq!(*first.iter().min().unwrap(), -r);
    assert_eq!(*first.iter().max().unwrap(), r);
    for g in w.points() {
        if g[0] > -r {
            let v = Vector::basis(w.index_of(g).unwrap());
            assert!(!image(w.step_xy(false, 1, &v).unwrap()).is_zero());
        }
    }
}

#[test]
fn simple_generators_act_with_single_targets() {
    let w = WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 2, 3).unwrap();
    let v = Vector::basis(w.index_of(&[0, 0, 0]).unwrap());
    let e1 = image(w.act(&Element::e(2, 1), &v).unwrap());
    assert_eq!(e1.len(), 1);
    let (t, coef) = e1.terms().next().unwrap();
    assert_eq!(w.point(t), &vec![1, -1, 0]);
    // y_2 v_0 = [omega_2 q^{-1}; 1] v_{-e_2} with omega_2 = c_2.
    assert_eq!(*coef, bracket(&Scalar::c(2).mul(&Scalar::q_pow(-1)), 1).unwrap());
}

#[test]
fn weight_compatibility() {
    let w = WeightModuleWindow::build_gwa(2, &[c(1), c(2), one()], 2, 2).unwrap();
    for p in 0..w.len() {
        for j in 1..=3 {
            let v = image(w.act(&Element::kbar(2, j, 1), &Vector::basis(p)).unwrap());
            assert_eq!(v, Vector::basis(p).scale(&w.weight(p)[j - 1]));
        }
    }
}

/// `E_i F_j - F_j E_i = delta_ij [K_i; 0]` and the Serre relations, letter by letter.
#[test]
fn relations_on_interior_vectors() {
    let windows = vec![
        WeightModuleWindow::build_gwa(2, &[c(1), c(2), c(3)], 3, 3).unwrap(),
        WeightModuleWindow::build_gwa(2, &[c(1), one(), one()], 3, 1).unwrap(),
        fock(2, 4),
        hw_window(&[c(1), c(1).inv().shift_q(-1)], 4),
    ];
    let mut interior = 0;
    for w in &windows {
        for p in 0..w.len() {
            let v = Vector::basis(p);
            let word = |g: &[Gen]| w.apply_word(g, &v).unwrap();
            for i in 1..=2 {
                for j in 1..=2 {
                    let (Outcome::Image(a), Outcome::Image(b)) = (word(&[Gen::E(i), Gen::F(j)]), word(&[Gen::F(j), Gen::E(i)]))
                    else {
                        continue;
                    };
                    interior += 1;
                    let want = if i == j {
                        let k = w.weight(p)[i - 1].div(&w.weight(p)[i]);
                        v.scale(&bracket(&k, 0).unwrap())
                    } else {
                        Vector::zero()
                    };
                    assert_eq!(a.sub(&b), want);
                }
            }
            let (e1, e2) = (Gen::E(1), Gen::E(2));
            let terms = [word(&[e1, e1, e2]), word(&[e1, e2, e1]), word(&[e2, e1, e1])];
            if let [Outcome::Image(a), Outcome::Image(b), Outcome::Image(c)] = terms {
                assert!(a.sub(&b.scale(&qint(2))).add(&c).is_zero());
            }
        }
    }
    assert!(interior > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Letter-by-letter action agrees with acting through `pi` wherever both stay inside.
    #[test]
    fn action_factors_through_pi(idx in prop::collection::vec(0usize..6, 1..4), p in 0usize..343) {
        let n = 2;
        let g = [Element::e(n, 1), Element::e(n, 2), Element::f(n, 1), Element::f(n, 2), Element::kbar(n, 2, 1), Element::ep(n, 1, 3)];
        let x = idx.iter().fold(Element::one(n), |a, &i| a.mul(&g[i]));
        let w = WeightModuleWindow::build_gwa(n, &[c(1), c(2), c(3)], 3, 3).unwrap();
        let v = Vector::basis(p % w.len());
        if let (Outcome::Image(a), Outcome::Image(b)) = (w.act(&x, &v).unwrap(), w.act_gwa(&pi(&x), &v).unwrap()) {
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn pullback_grading_is_preserved() {
    let w = fock(2, 4);
    let words = [
        GwaElement::x(2, 1).mul(&GwaElement::y(2, 3)),
        GwaElement::x(2, 2).mul(&GwaElement::x(2, 3)).mul(&GwaElement::y(2, 1)).mul(&GwaElement::y(2, 1)),
    ];
    for a in &words {
        let u = degree_zero_preimage(a).unwrap();
        for p in 0..w.len() {
            if let Outcome::Image(v) = w.act(&u, &Vector::basis(p)).unwrap() {
                let m: i32 = w.point(p).iter().sum();
                assert!(v.terms().all(|(t, _)| w.point(t).iter().sum::<i32>() == m));
            }
        }
    }
}

#[test]
fn complete_pointedness() {
    let w = fock(2, 3);
    assert!(is_completely_pointed(&w));
    let natural = decompose_pullback(&w).unwrap().into_iter().find(|p| p.m == 1).unwrap();
    assert!(is_completely_pointed(&w.restrict(&natural.points)));
    assert!(!is_completely_pointed(&vacuum_pair_module(2)));
}

#[test]
fn irreducibility_verdicts() {
    let w = fock(2, 3);
    let pieces = decompose_pullback(&w).unwrap();
    let m2 = pieces.iter().find(|p| p.m == 2).unwrap();
    assert_eq!(is_irreducible_on_window(&w, m2), Irreducibility::Irreducible);
    let m5 = pieces.iter().find(|p| p.m == 5).unwrap();
    assert_eq!(is_irreducible_on_window(&w, m5), Irreducibility::InconclusiveTruncated);
    let two = two_orbit_module(2);
    assert!(matches!(is_irreducible_on_window(&two, &whole_piece(&two)), Irreducibility::Separating(s) if s.len() == 1));
}

#[test]
fn natural_module_from_highest_weight() {
    for n in 1..=3 {
        let mut l = vec![one(); n];
        l[0] = q(1);
        let w = highest_weight_module(n, &l, 3, 0).unwrap();
        assert_eq!(w.len(), n + 1);
        assert!(is_completely_pointed(&w));
    }
    assert!(matches!(highest_weight_module(2, &[q(1), q(1)], 3, 0), Err(ModError::NotCompletelyPointed(_))));
}

#[test]
fn generic_highest_weight_is_infinite_with_nilpotent_e() {
    let w = hw_window(&[c(1), one()], 4);
    assert_eq!(w.kind(), ModuleKind::HighestWeight);
    assert!(w.len() > 10);
    let top = w.index_of(&[0, 0, 0]).unwrap();
    for i in 1..=2 {
        assert!(image(w.act(&Element::e(2, i), &Vector::basis(top)).unwrap()).is_zero());
    }
    let f = image(w.act(&Element::f(2, 1), &Vector::basis(top)).unwrap());
    assert!(!f.is_zero());
}

#[test]
fn lq1_values() {
    let w = lq1_example_module(5);
    let top = Scalar::one().add(&Scalar::q());
    let v = |k: usize| Vector::basis(w.index_of(&[k as i32]).unwrap());
    let k1 = image(w.act(&Element::k(1, 1, 1), &v(1)).unwrap());
    assert_eq!(k1, v(1).scale(&Scalar::q_pow(-2).mul(&top)));
    assert!(image(w.act(&Element::e(1, 1), &v(0)).unwrap()).is_zero());
    assert_eq!(image(w.act(&Element::e(1, 1), &v(3)).unwrap()), v(2).scale(&bracket(&top, -2).unwrap()));
    assert!(matches!(w.act(&Element::f(1, 1), &v(5)).unwrap(), Outcome::LeavesWindow(_)));
}

#[test]
fn spec_files() {
    let text = r#"{"kind": "gwa-weight", "n": 2, "omega": ["c1", "1", "q^(-1)"], "params": ["c1"], "radius": 2}"#;
    let spec = ModuleSpec::from_json(text).unwrap();
    let w = WeightModuleWindow::build(&spec).unwrap();
    assert_eq!(w.seed().unwrap(), &[c(1), one(), q(-1)][..]);
    let again = ModuleSpec::from_json(&spec.to_json()).unwrap();
    assert_eq!(again, spec);
    let bad = r#"{"kind": "gwa-weight", "n": 2, "omega": ["c1", "1", "1+q"], "params": ["c1"], "radius": 2}"#;
    assert!(ModuleSpec::from_json(bad).is_err());
    let undeclared = r#"{"kind": "gwa-weight", "n": 2, "omega": ["c2", "1", "1"], "params": ["c1"], "radius": 2}"#;
    assert!(ModuleSpec::from_json(undeclared).is_err());
}
