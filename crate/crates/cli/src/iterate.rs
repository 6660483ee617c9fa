//! The orbit F_k = η^k(E_03): matrix powers against the closed form.

use std::fmt::Write as _;

use cremona_core::divisor::{Basis, DivisorClass, Space};
use cremona_core::isometry::{closed_form_f, iterate_f_all, nonproportionality_scan, order_evidence};
use cremona_core::rational::q;
use serde_json::json;

use crate::report::{Report, Timer};

/// Powers of κ* and η checked against the identity.
pub const ORDER_BOUND: usize = 100;

#[derive(Debug, thiserror::Error)]
#[error("k-max must be at least 1")]
pub struct KMaxError;

/// Report plus a TSV table with one row (k, deg F_k, coefficients) per k.
pub fn iterate(k_max: usize, timing: bool) -> Result<(Report, String), KMaxError> {
    if k_max == 0 {
        return Err(KMaxError);
    }
    let mut rep = Report::new("iterate", None);
    let mut timer = Timer::new(timing);
    let fs = timer.time("iterate", || iterate_f_all(k_max));

    timer.time("closed_form", || {
        let bad: Vec<usize> = fs.iter().enumerate().filter(|(i, f)| **f != closed_form_f(*i as u64 + 1)).map(|(i, _)| i + 1).collect();
        rep.push("iterate.closed_form", "isometry: η^k(E_03) equals the closed form for F_k", bad.is_empty(), json!({ "k_max": k_max, "mismatched_k": bad }));
    });

    let degree = |k: usize| q(2 * (k as i64) * (k as i64 - 1));
    let bad: Vec<usize> = fs.iter().enumerate().filter(|(i, f)| f.degree() != degree(i + 1)).map(|(i, _)| i + 1).collect();
    rep.push("iterate.degrees", "isometry: deg F_k = 2k(k-1)", bad.is_empty(), json!({ "mismatched_k": bad }));

    let e15 = DivisorClass::parse(Space::X, "E15").expect("generator");
    rep.push("iterate.first", "isometry: F_1 = E_15", fs[0] == e15, json!({ "f1": fs[0].to_string() }));

    timer.time("nonproportional", || {
        let ok = nonproportionality_scan(&fs);
        rep.push("iterate.nonproportional", "isometry: the F_k are pairwise non-proportional", ok, json!({ "pairs": k_max * (k_max - 1) / 2 }));
    });

    timer.time("order", || {
        let ev = order_evidence(ORDER_BOUND);
        let ok = ev.kappa_power_is_identity.is_empty() && ev.eta_power_is_identity.is_empty();
        rep.push(
            "iterate.infinite_order",
            "isometry: no power of κ* or η up to the bound is the identity",
            ok,
            json!({ "bound": ORDER_BOUND, "kappa_identity_at": ev.kappa_power_is_identity, "eta_identity_at": ev.eta_power_is_identity, "eta_growth": ev.eta_growth }),
        );
    });

    timer.finish(&mut rep);
    Ok((rep, table(&fs)))
}

pub fn table(fs: &[DivisorClass]) -> String {
    let basis = Basis::new(Space::X).expect("X");
    let mut s = String::from("k\tdegree");
    for g in &basis.generators {
        let _ = write!(s, "\t{g}");
    }
    s.push('\n');
    for (i, f) in fs.iter().enumerate() {
        let _ = write!(s, "{}\t{}", i + 1, f.degree());
        for c in &f.coeffs {
            let _ = write!(s, "\t{c}");
        }
        s.push('\n');
    }
    s
}
