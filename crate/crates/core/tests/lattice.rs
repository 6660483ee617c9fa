use std::collections::BTreeSet;

use cremona_core::divisor::{
    fusion_multiplicity, make_basis, named_class, s3_elements, s3_orbit, DivisorClass, Generator,
    Space, ALPHA, BETA, INDEX_SWAP, S3_CYCLE, S3_SWAP,
};
use cremona_core::kummer::{self, gram, NsClass, NsLattice};
use cremona_core::rational::{q, Q};
use cremona_core::twotorsion::{self, enumerate_flats, gamma, gamma_c, labels_of};
use num_traits::Zero;
use proptest::prelude::*;

fn class(space: Space, text: &str) -> DivisorClass {
    DivisorClass::parse(space, text).unwrap()
}

#[test]
fn named_class_examples() {
    let q24 = named_class("Q_24", Space::Y).unwrap();
    assert_eq!(q24, named_class("A", Space::Y).unwrap().sub(&class(Space::Y, "E03")));
    let sum = named_class("D", Space::Y).unwrap().add(&named_class("D'", Space::Y).unwrap());
    assert_eq!(sum.degree(), q(26));
    let k = named_class("-K_X", Space::X).unwrap();
    let mut expect = vec![q(4)];
    expect.extend(std::iter::repeat_n(q(-2), 6));
    expect.extend(std::iter::repeat_n(q(-1), 15));
    assert_eq!(k.coeffs, expect);
    assert!(named_class("-K_X", Space::Y).is_err());
    assert!(named_class("Q_7", Space::Y).is_err());
}

#[test]
fn named_classes_are_integral_and_embed() {
    let mut names: Vec<String> = ["D", "D'", "A", "B", "D_05", "D_13", "D_24", "F_15", "F_25", "F_12"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend(ALPHA.iter().map(|a| format!("Q_{a}")));
    names.extend(BETA.iter().map(|b| format!("P_{b}")));
    for n in &names {
        let y = named_class(n, Space::Y).unwrap();
        let x = named_class(n, Space::X).unwrap();
        assert!(y.is_integral(), "{n}");
        assert_eq!(y.embed(Space::X).unwrap(), x);
        assert!(x.coeffs[16..].iter().all(Zero::is_zero), "{n} has no extra-line part");
        assert_eq!(named_class(n, Space::Yn(5)).unwrap().coeffs.len(), 1 + 8 + 9);
    }
}

#[test]
fn degrees() {
    assert_eq!(named_class("D", Space::Y).unwrap().degree(), q(13));
    assert_eq!(named_class("Q_0", Space::Y).unwrap().degree(), q(4));
    assert_eq!(DivisorClass::zero(Space::X).degree(), q(0));
    for n in ["D_05", "D_13", "D_24", "F_15", "F_25", "F_12"] {
        assert_eq!(named_class(n, Space::Y).unwrap().degree(), q(5));
    }
}

#[test]
fn s3_orbits() {
    let orbit = |n: &str| s3_orbit(&named_class(n, Space::Y).unwrap());
    let set = |ns: &[&str]| -> BTreeSet<Vec<Q>> {
        ns.iter().map(|n| named_class(n, Space::Y).unwrap().coeffs).collect()
    };
    assert_eq!(orbit("D"), set(&["D"]));
    assert_eq!(orbit("A"), set(&["A"]));
    assert_eq!(orbit("Q_0"), set(&["Q_0", "Q_3", "Q_4"]));
    assert_eq!(orbit("Q_05"), set(&["Q_05", "Q_13", "Q_24"]));
    assert_eq!(orbit("Q_12"), set(&["Q_12", "Q_15", "Q_25"]));
}

#[test]
fn s3_is_a_group_action() {
    let c = class(Space::X, "3H -E0 -2E1 +E5 -E03 +4E12 -E45 +2E01");
    let cyc = |x: &DivisorClass| x.permute(&S3_CYCLE);
    assert_eq!(cyc(&cyc(&cyc(&c))), c);
    assert_eq!(c.permute(&S3_SWAP).permute(&S3_SWAP), c);
    assert_eq!(s3_elements().len(), 6);
    let distinct: BTreeSet<_> = s3_elements().into_iter().collect();
    assert_eq!(distinct.len(), 6);
}

#[test]
fn index_swap_involution() {
    let d = named_class("D", Space::Y).unwrap();
    assert_eq!(d.permute(&INDEX_SWAP), named_class("D'", Space::Y).unwrap());
    let qs: BTreeSet<_> = ALPHA
        .iter()
        .map(|a| named_class(&format!("Q_{a}"), Space::Y).unwrap().permute(&INDEX_SWAP).coeffs)
        .collect();
    let ps: BTreeSet<_> = BETA.iter().map(|b| named_class(&format!("P_{b}"), Space::Y).unwrap().coeffs).collect();
    assert_eq!(qs, ps);
}

#[test]
fn fusion_multiplicities_sum_to_13() {
    for b in BETA {
        let total: i64 = ALPHA.iter().map(|a| fusion_multiplicity(a, b).unwrap()).sum();
        assert_eq!(total, 13, "beta = {b}");
    }
    assert_eq!(fusion_multiplicity("0", "1").unwrap(), 2);
    assert_eq!(fusion_multiplicity("05", "03").unwrap(), 1);
    assert_eq!(fusion_multiplicity("03", "2").unwrap(), 0);
}

// ---- Néron–Severi lattice ----

#[derive(Clone, Copy, Debug)]
enum Curve {
    Hs,
    E(u8),
    T(u8, u8),
    /// a line L_I by its 3-subset mask containing 0
    L(u8),
    R,
}

fn curves() -> Vec<Curve> {
    let mut v = vec![Curve::Hs, Curve::R];
    v.extend((0..6).map(Curve::E));
    for i in 0..6 {
        for j in i + 1..6 {
            v.push(Curve::T(i, j));
        }
    }
    for j in 1..6u8 {
        for k in j + 1..6 {
            v.push(Curve::L(1 | 1 << j | 1 << k));
        }
    }
    v
}

fn ns_of(c: Curve) -> NsClass {
    match c {
        Curve::Hs => kummer::h_s(),
        Curve::R => kummer::r(),
        Curve::E(i) => kummer::e(i),
        Curve::T(i, j) => kummer::t(i, j),
        Curve::L(mask) => {
            let idx: Vec<u8> = (0..6).filter(|b| mask >> b & 1 == 1).collect();
            kummer::line(idx[0], idx[1], idx[2])
        }
    }
}

/// Intersection numbers from the combinatorial rules alone.
fn expected(a: Curve, b: Curve) -> i64 {
    use Curve::*;
    let pair_in_line = |i: u8, j: u8, mask: u8| {
        let both = |m: u8| m >> i & 1 == 1 && m >> j & 1 == 1;
        both(mask) || both(0b111111 ^ mask)
    };
    match (a, b) {
        (Hs, Hs) => 4,
        (Hs, E(_)) | (E(_), Hs) => 0,
        (Hs, T(..)) | (T(..), Hs) => 1,
        (Hs, R) | (R, Hs) => 3,
        (Hs, L(_)) | (L(_), Hs) => 1,
        (E(i), E(j)) => if i == j { -2 } else { 0 },
        (E(k), T(i, j)) | (T(i, j), E(k)) => i64::from(k == i || k == j),
        (E(_), R) | (R, E(_)) => 1,
        (E(_), L(_)) | (L(_), E(_)) => 0,
        (T(i, j), T(k, l)) => if (i, j) == (k, l) { -2 } else { 0 },
        (T(i, j), L(m)) | (L(m), T(i, j)) => i64::from(pair_in_line(i, j, m)),
        (T(..), R) | (R, T(..)) => 0,
        (L(m), L(n)) => if m == n { -2 } else { 0 },
        (L(_), R) | (R, L(_)) => 0,
        (R, R) => -2,
    }
}

#[test]
fn intersection_table_matches_combinatorics() {
    let cs = curves();
    assert_eq!(cs.len(), 1 + 1 + 6 + 15 + 10);
    for &a in &cs {
        for &b in &cs {
            assert_eq!(gram(&ns_of(a), &ns_of(b)), q(expected(a, b)), "{a:?}.{b:?}");
        }
    }
}

#[test]
fn lambda_products() {
    let l = kummer::lambda();
    assert_eq!(gram(&l, &kummer::h_s()), q(6));
    for i in 0..6 {
        for j in i + 1..6 {
            assert_eq!(gram(&l, &kummer::t(i, j)), q(2));
        }
    }
}

#[test]
fn rel4_all_triples() {
    let mut n = 0;
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let rhs = kummer::e(i)
                    .add(&kummer::e(j))
                    .add(&kummer::e(k))
                    .add(&kummer::t(i, j))
                    .add(&kummer::t(j, k))
                    .add(&kummer::t(i, k))
                    .add(&kummer::line(i, j, k));
                assert_eq!(kummer::h_s(), rhs);
                n += 1;
            }
        }
    }
    assert_eq!(n, 20);
}

#[test]
fn three_lambda_relation() {
    let lines = kummer::sum(kummer::all_lines());
    assert_eq!(kummer::lambda().scale(&q(3)), kummer::h_s().scale(&q(2)).add(&lines));
    let v = kummer::h_s().scale(&q(2)).add(&lines);
    assert_eq!(gram(&v, &v), q(36));
}

#[test]
fn restriction_kernel_has_degree_zero() {
    let r = kummer::restriction_matrix();
    let ker = r.kernel();
    assert_eq!(ker.len(), 22 - r.rank());
    assert!(!ker.is_empty());
    for v in ker {
        assert!(v[0].is_zero());
    }
}

#[test]
fn a_classes() {
    let a01 = kummer::a(0, 1);
    let rhs = kummer::e(2).add(&kummer::line(0, 1, 2)).add(&kummer::t(0, 2)).add(&kummer::t(1, 2));
    assert_eq!(a01, rhs);
    for i in 0..6 {
        for j in i + 1..6 {
            let a = kummer::a(i, j);
            assert_eq!(gram(&a, &a), q(0));
        }
    }
}

#[test]
fn restriction_examples() {
    assert_eq!(kummer::restrict(&DivisorClass::zero(Space::X)).unwrap(), NsClass::zero());
    let e12 = DivisorClass::generator(Space::Y, Generator::line(1, 2)).unwrap();
    assert_eq!(kummer::restrict(&e12).unwrap(), kummer::t(1, 2));
    assert!(kummer::restrict(&DivisorClass::zero(Space::Yn(4))).is_err());
}

#[test]
fn lattice_membership_examples() {
    let lat = NsLattice::build();
    assert_eq!(lat.rank(), 17);
    assert!(lat.contains(&kummer::half_sum(gamma(0, 1))).unwrap());
    let pair = kummer::e(0).add(&kummer::e(1)).scale(&cremona_core::rational::qf(1, 2));
    assert!(!lat.contains(&pair).unwrap());
    assert!(lat.contains(&kummer::lambda()).unwrap());
    let quarter = kummer::lambda().scale(&cremona_core::rational::qf(1, 4));
    assert!(lat.contains(&quarter).is_err());
}

#[test]
fn half_subset_scan_is_hyperplanes() {
    let lat = NsLattice::build();
    let scan = lat.half_subset_scan();
    let flats = enumerate_flats();
    let mut expect = flats.hyperplanes.clone();
    expect.insert(0);
    expect.insert(u16::MAX);
    assert_eq!(scan.len(), 32);
    assert_eq!(scan, expect);
    assert!(scan.contains(&gamma_c(0, 1)), "{:?}", labels_of(gamma_c(0, 1)));
}

#[test]
fn trope_configuration() {
    let inc = kummer::trope_incidence();
    for row in &inc {
        assert_eq!(row.iter().map(|&x| x as u32).sum::<u32>(), 6);
    }
    for j in 0..16 {
        assert_eq!(inc.iter().map(|r| r[j] as u32).sum::<u32>(), 6);
    }
    let t01: Vec<String> = (0..16)
        .filter(|&j| inc[0][j] == 1)
        .map(|j| twotorsion::LABELS[j].to_string())
        .collect();
    assert_eq!(t01, ["0", "1", "12", "13", "14", "15"]);
}

#[test]
fn discriminant_is_reported() {
    let d = NsLattice::build().discriminant();
    assert!(!d.is_zero());
}

proptest! {
    #[test]
    fn restriction_is_linear(a in prop::collection::vec(-20i64..20, 22), b in prop::collection::vec(-20i64..20, 22)) {
        let ca = DivisorClass { space: Space::X, coeffs: a.iter().map(|&x| q(x)).collect() };
        let cb = DivisorClass { space: Space::X, coeffs: b.iter().map(|&x| q(x)).collect() };
        let lhs = kummer::restrict(&ca.add(&cb)).unwrap();
        let rhs = kummer::restrict(&ca).unwrap().add(&kummer::restrict(&cb).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_display_round_trip(a in prop::collection::vec(-9i64..9, 22)) {
        let c = DivisorClass { space: Space::X, coeffs: a.iter().map(|&x| q(x)).collect() };
        prop_assert_eq!(DivisorClass::parse(Space::X, &c.to_string()).unwrap(), c);
    }

    #[test]
    fn permutation_inverts(a in prop::collection::vec(-9i64..9, 22), which in 0usize..6) {
        let c = DivisorClass { space: Space::X, coeffs: a.iter().map(|&x| q(x)).collect() };
        let p = s3_elements()[which];
        let mut inv = [0u8; 6];
        for (i, &x) in p.iter().enumerate() { inv[x as usize] = i as u8; }
        prop_assert_eq!(c.permute(&p).permute(&inv), c);
    }

    #[test]
    fn gram_is_symmetric_bilinear(a in prop::collection::vec(-6i64..6, 17), b in prop::collection::vec(-6i64..6, 17), c in prop::collection::vec(-6i64..6, 17)) {
        let v = |x: &Vec<i64>| NsClass(x.iter().map(|&y| q(y)).collect());
        let (a, b, c) = (v(&a), v(&b), v(&c));
        prop_assert_eq!(gram(&a, &b), gram(&b, &a));
        prop_assert_eq!(gram(&a.add(&b), &c), gram(&a, &c) + gram(&b, &c));
    }
}

#[test]
fn basis_generator_order() {
    let b = make_basis(Space::X).unwrap();
    let names: Vec<String> = b.generators.iter().map(ToString::to_string).collect();
    assert_eq!(names[..7], ["H", "E0", "E1", "E2", "E3", "E4", "E5"]);
    assert_eq!(
        names[7..],
        ["E03", "E04", "E34", "E12", "E15", "E25", "E05", "E13", "E24", "E01", "E02", "E14", "E23", "E35", "E45"]
    );
}

#[test]
fn dual_quartics_are_inverse_images() {
    let inv = cremona_core::isometry::eta_inverse().unwrap();
    for b in BETA {
        let e = DivisorClass::generator(Space::X, Generator::from_label(b).unwrap()).unwrap();
        let img = cremona_core::isometry::apply_class(&inv, &e).unwrap();
        assert_eq!(img, named_class(&format!("P_{b}"), Space::X).unwrap(), "beta = {b}");
    }
}
