//! Flats and Weber hexads of A[2] = F_2^4.

use std::collections::BTreeSet;

use cremona_core::twotorsion::{enumerate_flats, gamma, gamma_c, labels_of, node_set_from_labels, plane_families, translate, NodeSet, TwoTorsionPoint};
use serde_json::json;

use crate::report::{Report, Timer};

pub const H1: [&str; 6] = ["0", "14", "15", "23", "25", "34"];
pub const H: [&str; 6] = ["5", "23", "1", "14", "2", "12"];

pub fn hexads(timing: bool) -> Report {
    let mut rep = Report::new("hexads", None);
    let mut timer = Timer::new(timing);
    let flats = timer.time("enumerate", enumerate_flats);

    let counts = [
        ("hexads.hyperplanes", "twotorsion: 30 affine hyperplanes", flats.hyperplanes.len(), 30, 8),
        ("hexads.planes", "twotorsion: 140 affine 2-planes", flats.planes.len(), 140, 4),
        ("hexads.gopel", "twotorsion: 60 Göpel tetrads", flats.gopel.len(), 60, 4),
        ("hexads.rosenhain", "twotorsion: 80 Rosenhain tetrads", flats.rosenhain.len(), 80, 4),
        ("hexads.weber", "twotorsion: 192 Weber hexads", flats.weber.len(), 192, 6),
    ];
    let sizes = [&flats.hyperplanes, &flats.planes, &flats.gopel, &flats.rosenhain, &flats.weber];
    for ((id, src, got, want, size), sets) in counts.into_iter().zip(sizes) {
        let sized = sets.iter().all(|s| s.count_ones() == size);
        rep.push(id, src, got == want && sized, json!({ "count": got, "expected": want, "member_size": size }));
    }

    let h1 = node_set_from_labels(&H1).expect("labels");
    let h = node_set_from_labels(&H).expect("labels");
    let t5 = TwoTorsionPoint::from_label("5").expect("label");
    rep.push("hexads.h1_is_weber", "twotorsion: H_1 is a Weber hexad", flats.is_weber(h1), json!({ "hexad": labels_of(h1) }));
    rep.push("hexads.h_is_weber", "twotorsion: H is a Weber hexad", flats.is_weber(h), json!({ "hexad": labels_of(h) }));
    rep.push(
        "hexads.translate",
        "twotorsion: t_5(H_1) = H",
        translate(h1, t5) == h,
        json!({ "image": labels_of(translate(h1, t5)) }),
    );

    let mut gammas = BTreeSet::new();
    for i in 0..6 {
        for j in i + 1..6 {
            gammas.insert(gamma(i, j));
            gammas.insert(gamma_c(i, j));
        }
    }
    rep.push(
        "hexads.hyperplane_families",
        "twotorsion: the hyperplanes are the Γ_ij and Γ_ij^c",
        gammas == flats.hyperplanes,
        json!({ "families": gammas.len() }),
    );

    let fams = plane_families();
    let union: BTreeSet<NodeSet> = fams.iter().flatten().copied().collect();
    rep.push(
        "hexads.plane_families",
        "twotorsion: the four displayed families exhaust the affine 2-planes",
        union == flats.planes,
        json!({ "family_sizes": fams.iter().map(BTreeSet::len).collect::<Vec<_>>(), "union": union.len() }),
    );

    timer.finish(&mut rep);
    rep
}
