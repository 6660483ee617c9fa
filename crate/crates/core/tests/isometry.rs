use std::time::Instant;

use cremona_core::divisor::{named_class, DivisorClass, Generator, Space, ALPHA};
use cremona_core::isometry::{
    apply_class, apply_ns, closed_form_f, closed_form_f_with, dual_check, eta_inverse, eta_matrix,
    intertwine_check, intertwine_pair, iterate_f, iterate_f_all, keum_matrix, nonproportionality_scan,
    order_evidence, Boundary, Hexad,
};
use cremona_core::kummer::{self, gram, node_label, NsClass, RANK};
use cremona_core::rational::q;
use cremona_core::twotorsion::TwoTorsionPoint;
use proptest::prelude::*;

fn class(text: &str) -> DivisorClass {
    DivisorClass::parse(Space::X, text).unwrap()
}

#[test]
fn kappa_preserves_gram() {
    for h in [Hexad::H, Hexad::H1] {
        let k = keum_matrix(h);
        let imgs: Vec<NsClass> = (0..RANK).map(|i| apply_ns(&k, &NsClass::unit(i)).unwrap()).collect();
        for i in 0..RANK {
            for j in 0..RANK {
                assert_eq!(gram(&imgs[i], &imgs[j]), gram(&NsClass::unit(i), &NsClass::unit(j)));
            }
        }
        assert!(k.matrix.inverse().is_ok());
        for p in TwoTorsionPoint::all() {
            let v = apply_ns(&k, &kummer::node(p)).unwrap();
            assert_eq!(gram(&v, &v), q(-2));
        }
    }
}

#[test]
fn kappa_examples() {
    let k = keum_matrix(Hexad::H);
    let kl = apply_ns(&k, &kummer::lambda()).unwrap();
    assert_eq!(gram(&kl, &kl), q(4));
    assert_eq!(apply_ns(&k, &kummer::r()).unwrap(), kummer::r());
    assert_eq!(apply_ns(&k, &kummer::g()).unwrap(), kummer::g());
}

#[test]
fn kappa_conjugate_by_translation() {
    // κ_H = T_5 κ_1 T_5 on NS(S): T_5 fixes Λ and permutes nodes by +5.
    let t5 = |v: &NsClass| {
        let mut out = NsClass::zero();
        out.0[0] = v.0[0].clone();
        for p in TwoTorsionPoint::all() {
            out.0[1 + p.add(TwoTorsionPoint::from_label("5").unwrap()).index()] = v.0[1 + p.index()].clone();
        }
        out
    };
    let k = keum_matrix(Hexad::H);
    let k1 = keum_matrix(Hexad::H1);
    for i in 0..RANK {
        let e = NsClass::unit(i);
        let lhs = apply_ns(&k, &e).unwrap();
        let rhs = t5(&apply_ns(&k1, &t5(&e)).unwrap());
        assert_eq!(lhs, rhs, "generator {i}");
    }
}

#[test]
fn eta_examples() {
    let eta = eta_matrix();
    assert_eq!(apply_class(&eta, &class("E03")).unwrap(), class("E15"));
    let h = DivisorClass::generator(Space::X, Generator::H).unwrap();
    assert_eq!(apply_class(&eta, &h).unwrap(), named_class("D", Space::X).unwrap());
    let k = named_class("-K_X", Space::X).unwrap();
    assert_eq!(apply_class(&eta, &k).unwrap(), k);
    assert!(eta.matrix.is_integral());
}

#[test]
fn intertwining() {
    assert!(intertwine_check());
    let eta = eta_matrix();
    let kappa = keum_matrix(Hexad::H);
    let r = |c: &DivisorClass| kummer::restrict(c).unwrap();
    let h = DivisorClass::generator(Space::X, Generator::H).unwrap();
    assert_eq!(r(&named_class("D", Space::X).unwrap()), apply_ns(&kappa, &kummer::h_s()).unwrap());
    assert_eq!(r(&apply_class(&eta, &h).unwrap()), apply_ns(&kappa, &r(&h)).unwrap());
    let q12 = named_class("Q_12", Space::X).unwrap();
    assert_eq!(r(&q12), apply_ns(&kappa, &kummer::t(1, 2)).unwrap());
    let q0 = named_class("Q_0", Space::X).unwrap();
    assert_eq!(r(&q0), kummer::u().sub(&node_label("12").unwrap()));
    assert_eq!(r(&q0), apply_ns(&kappa, &kummer::e(0)).unwrap());
}

#[test]
fn quartics_restrict_to_kappa_images() {
    let kappa = keum_matrix(Hexad::H);
    for a in ALPHA {
        let qa = named_class(&format!("Q_{a}"), Space::X).unwrap();
        let e = DivisorClass::generator(Space::X, Generator::from_label(a).unwrap()).unwrap();
        let lhs = kummer::restrict(&qa).unwrap();
        let rhs = apply_ns(&kappa, &kummer::restrict(&e).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "alpha = {a}");
    }
}

#[test]
fn corrupted_eta_breaks_intertwining() {
    let mut eta = eta_matrix();
    eta.matrix[(0, 0)] += q(1);
    let (a, b) = intertwine_pair(&eta, &keum_matrix(Hexad::H)).unwrap();
    assert_ne!(a, b);
}

#[test]
fn inverse() {
    assert!(dual_check().unwrap());
    let inv = eta_inverse().unwrap();
    assert!(inv.matrix.is_integral());
    assert!(eta_matrix().matrix.mul(&inv.matrix).unwrap().is_identity());
    assert_eq!(apply_class(&inv, &class("E15")).unwrap(), class("E03"));
}

#[test]
fn f_examples() {
    assert_eq!(iterate_f(1), class("E15"));
    let q15 = named_class("Q_15", Space::X).unwrap();
    assert_eq!(iterate_f(2), q15);
    assert_eq!(q15, named_class("A", Space::X).unwrap().sub(&class("E24")));
    assert_eq!(iterate_f(3), closed_form_f(3));
    assert_eq!(closed_form_f(1), class("E15"));
    assert_eq!(closed_form_f(2), q15);
    assert_eq!(closed_form_f(10).degree(), q(180));
}

#[test]
fn boundary_convention_at_k1() {
    // Forcing m_0 = 0 gives -(E12 + E25) instead of E15.
    let forced = closed_form_f_with(1, Boundary::Zero);
    assert_ne!(forced, iterate_f(1));
    assert_eq!(forced, class("-E12 - E25"));
    for k in 2..20 {
        assert_eq!(closed_form_f_with(k, Boundary::Zero), closed_form_f(k));
    }
}

#[test]
fn closed_form_matches_iteration_to_500() {
    let t = Instant::now();
    let fs = iterate_f_all(500);
    for (i, f) in fs.iter().enumerate() {
        let k = (i + 1) as u64;
        assert_eq!(f, &closed_form_f(k), "k = {k}");
        let kk = k as i64;
        assert_eq!(f.degree(), q(2 * kk * (kk - 1)));
        for p in 0..6 {
            assert_eq!(f.coeff(Generator::E(p)), q(-kk * (kk - 1)));
        }
    }
    assert!(nonproportionality_scan(&fs));
    assert!(t.elapsed().as_secs() < 30);
}

#[test]
fn nonproportionality_negative_control() {
    let f1 = iterate_f(1);
    assert!(!nonproportionality_scan(&[f1.clone(), f1.scale(&q(2))]));
    assert!(nonproportionality_scan(&iterate_f_all(2)));
}

#[test]
fn no_small_power_is_identity() {
    let ev = order_evidence(100);
    assert!(ev.kappa_power_is_identity.is_empty());
    assert!(ev.eta_power_is_identity.is_empty());
    assert!(ev.degrees_match);
    assert_eq!(ev.eta_charpoly.len(), 23);
}

proptest! {
    #[test]
    fn kappa_preserves_gram_on_random_vectors(a in prop::collection::vec(-5i64..5, 17), b in prop::collection::vec(-5i64..5, 17)) {
        let k = keum_matrix(Hexad::H);
        let v = |x: &Vec<i64>| NsClass(x.iter().map(|&y| q(y)).collect());
        let (a, b) = (v(&a), v(&b));
        prop_assert_eq!(gram(&apply_ns(&k, &a).unwrap(), &apply_ns(&k, &b).unwrap()), gram(&a, &b));
    }

    #[test]
    fn intertwining_on_random_classes(a in prop::collection::vec(-5i64..5, 22)) {
        let c = DivisorClass { space: Space::X, coeffs: a.iter().map(|&x| q(x)).collect() };
        let lhs = kummer::restrict(&apply_class(&eta_matrix(), &c).unwrap()).unwrap();
        let rhs = apply_ns(&keum_matrix(Hexad::H), &kummer::restrict(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
