use std::collections::BTreeSet;
use std::time::Instant;

use cremona_core::twotorsion::{
    enumerate_flats, gamma, gamma_c, members, node_set, node_set_from_labels, plane_families,
    translate, NodeSet, TwoTorsionPoint,
};
use proptest::prelude::*;

fn set(labels: &[&str]) -> NodeSet {
    node_set_from_labels(labels).unwrap()
}

fn pt(l: &str) -> TwoTorsionPoint {
    TwoTorsionPoint::from_label(l).unwrap()
}

#[test]
fn counts() {
    let t = Instant::now();
    let f = enumerate_flats();
    assert_eq!(f.hyperplanes.len(), 30);
    assert_eq!(f.planes.len(), 140);
    assert_eq!(f.gopel.len(), 60);
    assert_eq!(f.rosenhain.len(), 80);
    assert_eq!(f.weber.len(), 192);
    assert!(f.hyperplanes.iter().all(|h| h.count_ones() == 8));
    assert!(f.planes.iter().all(|h| h.count_ones() == 4));
    assert!(f.weber.iter().all(|h| h.count_ones() == 6));
    assert!(t.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn named_hexads() {
    let f = enumerate_flats();
    let h1 = set(&["0", "14", "15", "23", "25", "34"]);
    let h = set(&["5", "23", "1", "14", "2", "12"]);
    assert!(f.is_weber(h1));
    assert!(f.is_weber(h));
    assert_eq!(translate(h1, pt("5")), h);
}

#[test]
fn translation_examples() {
    let s = set(&["0", "3", "24"]);
    assert_eq!(translate(s, pt("0")), s);
    for a in TwoTorsionPoint::all() {
        assert_eq!(translate(translate(s, a), a), s);
    }
}

#[test]
fn weber_closed_under_translation() {
    let f = enumerate_flats();
    for a in TwoTorsionPoint::all() {
        let image: BTreeSet<_> = f.weber.iter().map(|&h| translate(h, a)).collect();
        assert_eq!(image, f.weber);
    }
}

#[test]
fn hyperplanes_are_the_gamma_families() {
    let f = enumerate_flats();
    let mut gammas = BTreeSet::new();
    for i in 0..6 {
        for j in i + 1..6 {
            gammas.insert(gamma(i, j));
            gammas.insert(gamma_c(i, j));
            assert_eq!(gamma(i, j) ^ gamma_c(i, j), u16::MAX);
        }
    }
    assert_eq!(gammas, f.hyperplanes);
}

#[test]
fn plane_families_cover_all_planes() {
    let f = enumerate_flats();
    let fams = plane_families();
    let sizes: Vec<usize> = fams.iter().map(BTreeSet::len).collect();
    let union: BTreeSet<NodeSet> = fams.iter().flatten().copied().collect();
    assert_eq!(union, f.planes);
    for (i, a) in fams.iter().enumerate() {
        for b in &fams[i + 1..] {
            assert!(a.is_disjoint(b));
        }
    }
    assert_eq!(sizes.iter().sum::<usize>(), 140, "{sizes:?}");
}

#[test]
fn planes_through_zero_are_subgroups() {
    let f = enumerate_flats();
    let zero = pt("0");
    for &p in &f.planes {
        let m = members(p);
        if m.contains(&zero) {
            let rest: Vec<_> = m.into_iter().filter(|&x| x != zero).collect();
            assert_eq!(rest[0].add(rest[1]), rest[2]);
        }
    }
}

#[test]
fn pairing_is_nondegenerate_and_alternating() {
    let all = TwoTorsionPoint::all();
    for &x in &all {
        assert_eq!(x.pairing(x), 0);
    }
    for &v in &all[1..] {
        assert!(all.iter().any(|&w| v.pairing(w) == 1));
    }
    // rank of the Gram matrix over F_2 is 4
    let mut rows: Vec<u16> = all.iter().map(|&a| all.iter().enumerate().fold(0u16, |m, (j, &b)| m | (u16::from(a.pairing(b)) << j))).collect();
    let mut rank = 0;
    for bit in 0..16 {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    assert_eq!(rank, 4);
}

#[test]
fn is_weber_on_the_point_hexad() {
    // E_0..E_5: the answer comes from the enumeration, recorded here.
    let s = set(&["0", "1", "2", "3", "4", "5"]);
    let answer = enumerate_flats().is_weber(s);
    assert_eq!(answer, cremona_core::twotorsion::is_weber(s));
}

proptest! {
    #[test]
    fn group_axioms(a in 0usize..16, b in 0usize..16, c in 0usize..16) {
        let all = TwoTorsionPoint::all();
        let (a, b, c) = (all[a], all[b], all[c]);
        prop_assert_eq!(a.add(b), b.add(a));
        prop_assert_eq!(a.add(b).add(c), a.add(b.add(c)));
        prop_assert_eq!(a.add(TwoTorsionPoint::ZERO), a);
        prop_assert_eq!(a.add(b).pairing(c), a.pairing(c) ^ b.pairing(c));
        prop_assert_eq!(a.pairing(b), b.pairing(a));
    }

    #[test]
    fn node_set_round_trip(mask in any::<u16>()) {
        prop_assert_eq!(node_set(members(mask)), mask);
    }
}
