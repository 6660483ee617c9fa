//! Lattice-level invariants of NS(S) and the isometries κ* and η.

use std::collections::BTreeSet;

use cremona_core::divisor::{named_class, DivisorClass, Generator, Space};
use cremona_core::isometry::{apply_class, apply_ns, eta_matrix, intertwine_pair, keum_matrix, Hexad, LatticeMap};
use cremona_core::kummer::{self, gram, NsClass, NsLattice, RANK};
use cremona_core::rational::q;
use cremona_core::twotorsion::{enumerate_flats, labels_of, NodeSet};
use serde_json::json;

use crate::report::{Report, Timer};

#[derive(Clone, Copy, Debug)]
enum Curve {
    Hs,
    E(u8),
    T(u8, u8),
    L(u8, u8, u8),
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
    // L_I = L_{I^c}: one representative per complementary pair, the triple containing 0.
    for j in 1..6 {
        for k in j + 1..6 {
            v.push(Curve::L(0, j, k));
        }
    }
    v
}

fn class_of(c: Curve) -> NsClass {
    match c {
        Curve::Hs => kummer::h_s(),
        Curve::R => kummer::r(),
        Curve::E(i) => kummer::e(i),
        Curve::T(i, j) => kummer::t(i, j),
        Curve::L(i, j, k) => kummer::line(i, j, k),
    }
}

fn mask(i: u8, j: u8, k: u8) -> u8 {
    1 << i | 1 << j | 1 << k
}

/// The intersection number prescribed by the incidence rules on S.
fn rule(a: Curve, b: Curve) -> i64 {
    use Curve::*;
    // T_ij meets L_ijk and L_pqr with {p, q, r} the complement of {i, j, k}.
    let meets = |i: u8, j: u8, m: u8| {
        let both = |s: u8| s >> i & 1 == 1 && s >> j & 1 == 1;
        both(m) || both(0b11_1111 ^ m)
    };
    match (a, b) {
        (Hs, Hs) => 4,
        (Hs, E(_)) | (E(_), Hs) => 0,
        (Hs, T(..)) | (T(..), Hs) | (Hs, L(..)) | (L(..), Hs) => 1,
        (Hs, R) | (R, Hs) => 3,
        (E(i), E(j)) => -2 * i64::from(i == j),
        (E(k), T(i, j)) | (T(i, j), E(k)) => i64::from(k == i || k == j),
        (E(_), R) | (R, E(_)) => 1,
        (E(_), L(..)) | (L(..), E(_)) => 0,
        (T(i, j), T(k, l)) => -2 * i64::from((i, j) == (k, l)),
        (T(i, j), L(x, y, z)) | (L(x, y, z), T(i, j)) => i64::from(meets(i, j, mask(x, y, z))),
        (T(..), R) | (R, T(..)) | (L(..), R) | (R, L(..)) => 0,
        (L(a, b, c), L(x, y, z)) => -2 * i64::from(mask(a, b, c) == mask(x, y, z)),
        (R, R) => -2,
    }
}

fn others(excl: &[u8]) -> Vec<u8> {
    (0..6).filter(|x| !excl.contains(x)).collect()
}

/// Every lattice-level check with the actual κ* and η.
pub fn verify_lattice(timing: bool) -> Report {
    verify_lattice_with(&eta_matrix(), &keum_matrix(Hexad::H), timing)
}

/// The same checks for arbitrary maps; used with corrupted matrices as a negative control.
pub fn verify_lattice_with(eta: &LatticeMap, kappa: &LatticeMap, timing: bool) -> Report {
    let mut rep = Report::new("verify-lattice", None);
    let mut timer = Timer::new(timing);
    let src_products = "nskummer: intersection products on S";

    timer.time("intersection_table", || {
        let cs = curves();
        let mut bad = Vec::new();
        for &a in &cs {
            for &b in &cs {
                let got = gram(&class_of(a), &class_of(b));
                if got != q(rule(a, b)) {
                    bad.push(format!("{a:?}.{b:?} = {got}"));
                }
            }
        }
        rep.push("lattice.intersection_table", src_products, bad.is_empty(), json!({ "pairs": cs.len() * cs.len(), "mismatches": bad }));
    });

    timer.time("lambda_products", || {
        let l = kummer::lambda();
        let lh = gram(&l, &kummer::h_s());
        let mut bad = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if gram(&l, &kummer::t(i, j)) != q(2) {
                    bad.push(format!("T_{i}{j}"));
                }
            }
        }
        rep.push(
            "lattice.lambda_products",
            "nskummer: Λ·H_S = 6 and Λ·T_ij = 2",
            lh == q(6) && bad.is_empty(),
            json!({ "lambda_h": lh.to_string(), "bad_t": bad }),
        );
    });

    timer.time("rel4", || {
        let mut n = 0;
        let mut bad = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    let rhs = kummer::sum([
                        kummer::e(i),
                        kummer::e(j),
                        kummer::e(k),
                        kummer::t(i, j),
                        kummer::t(j, k),
                        kummer::t(i, k),
                        kummer::line(i, j, k),
                    ]);
                    n += 1;
                    if rhs != kummer::h_s() {
                        bad.push(format!("{i}{j}{k}"));
                    }
                }
            }
        }
        rep.push(
            "lattice.rel4",
            "nskummer: H_S = E_i + E_j + E_k + T_ij + T_jk + T_ik + L_ijk",
            n == 20 && bad.is_empty(),
            json!({ "triples": n, "failures": bad }),
        );
    });

    timer.time("three_lambda", || {
        let lhs = kummer::lambda().scale(&q(3));
        let rhs = kummer::h_s().scale(&q(2)).add(&kummer::sum(kummer::all_lines()));
        rep.push("lattice.three_lambda", "nskummer: 3Λ = 2H_S + ΣL_I", lhs == rhs, json!({ "lines": kummer::all_lines().len() }));
    });

    timer.time("half_classes", || {
        let l = kummer::lambda();
        let all_l = kummer::sum(kummer::all_lines());
        let all_e = kummer::sum((0..6).map(kummer::e));
        let mut bad = Vec::new();
        if kummer::h_s().scale(&q(2)) != l.scale(&q(3)).sub(&all_l) {
            bad.push("H_S".to_string());
        }
        for i in 0..6 {
            for j in i + 1..6 {
                let ls = kummer::sum(others(&[i, j]).into_iter().map(|k| kummer::line(i, j, k)));
                let rhs = l.sub(&kummer::e(i)).sub(&kummer::e(j)).sub(&ls);
                if kummer::t(i, j).scale(&q(2)) != rhs {
                    bad.push(format!("T_{i}{j}"));
                }
            }
        }
        if kummer::r().scale(&q(2)) != l.sub(&all_e) {
            bad.push("R".to_string());
        }
        rep.push("lattice.half_classes", "nskummer: H_S, T_ij and R as halves of node sums", bad.is_empty(), json!({ "failures": bad }));
    });

    let lattice = timer.time("build", NsLattice::build);
    rep.push("lattice.rank", "nskummer: NS(S) has rank 17", lattice.rank() == RANK, json!({ "rank": lattice.rank() }));

    timer.time("half_subset_scan", || {
        let found = lattice.half_subset_scan();
        let mut want: BTreeSet<NodeSet> = enumerate_flats().hyperplanes;
        want.insert(0);
        want.insert(NodeSet::MAX);
        let extra: Vec<Vec<String>> = found.difference(&want).map(|&s| labels_of(s)).collect();
        let missing: Vec<Vec<String>> = want.difference(&found).map(|&s| labels_of(s)).collect();
        rep.push(
            "lattice.half_subset_scan",
            "nskummer: the subsets with half node sum in NS(S) are the empty set, A[2] and the 30 hyperplanes",
            found == want,
            json!({ "subsets": 1u32 << 16, "found": found.len(), "extra": extra, "missing": missing }),
        );
    });

    timer.time("kappa_gram", || {
        let imgs: Vec<NsClass> = (0..RANK).map(|i| apply_ns(kappa, &NsClass::unit(i)).expect("17 x 17")).collect();
        let mut bad = 0usize;
        for i in 0..RANK {
            for j in 0..RANK {
                if gram(&imgs[i], &imgs[j]) != gram(&NsClass::unit(i), &NsClass::unit(j)) {
                    bad += 1;
                }
            }
        }
        rep.push("isometry.kappa_gram", "isometry: κ* preserves the intersection form", bad == 0, json!({ "pairs": RANK * RANK, "mismatches": bad }));
    });

    for (id, name, class) in [("isometry.kappa_fixes_r", "R", kummer::r()), ("isometry.kappa_fixes_g", "G", kummer::g())] {
        timer.time(id, || {
            let img = apply_ns(kappa, &class).expect("17 x 17");
            rep.push(id, &format!("isometry: κ*{name} = {name}"), img == class, json!({ "image": img.0.iter().map(ToString::to_string).collect::<Vec<_>>() }));
        });
    }

    timer.time("intertwine", || match intertwine_pair(eta, kappa) {
        Ok((a, b)) => {
            let mut diff = Vec::new();
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    if a[(i, j)] != b[(i, j)] {
                        diff.push((i, j));
                    }
                }
            }
            rep.push("isometry.intertwine", "isometry: r∘η = κ*∘r", diff.is_empty(), json!({ "shape": [a.rows(), a.cols()], "differing_entries": diff }));
        }
        Err(e) => rep.push_error("isometry.intertwine", "isometry: r∘η = κ*∘r", e),
    });

    timer.time("eta_anticanonical", || {
        let k = named_class("-K_X", Space::X).expect("named class");
        let img = apply_class(eta, &k).expect("22 x 22");
        rep.push("isometry.eta_anticanonical", "isometry: η(−K_X) = −K_X", img == k, json!({ "image": img.to_string() }));
    });

    timer.time("eta_inverse_h", || {
        let src = "isometry: η⁻¹(H) = D′";
        let h = DivisorClass::generator(Space::X, Generator::H).expect("H");
        let want = named_class("D'", Space::X).expect("named class");
        let inv = eta.matrix.inverse().map(|m| LatticeMap { matrix: m, ..eta.clone() });
        match inv.and_then(|m| apply_class(&m, &h)) {
            Ok(img) => rep.push("isometry.eta_inverse_h", src, img == want, json!({ "image": img.to_string() })),
            Err(e) => rep.push_error("isometry.eta_inverse_h", src, e),
        }
    });

    timer.finish(&mut rep);
    rep
}
