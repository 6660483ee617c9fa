//! The inverse map built on the dual configuration: the quartics g_beta on
//! the target, their pullbacks, and the composite with psi.

use std::collections::BTreeMap;

use cremona_core::divisor::{fusion_multiplicity, named_class, Space, ALPHA, BETA};
use cremona_core::rational::Q;
use cremona_core::QMatrix;
use num_traits::Zero;
use rand::Rng;

use crate::config::PointConfig;
use crate::cremona::Cremona;
use crate::error::{PolyError, Result};
use crate::expr::{identity_check, random_point, CheckOptions, Expr, IdentityOutcome};
use crate::geometry::plane_through;
use crate::multipoly::MultiPoly;
use crate::quartics::unique_section;

/// The nine quartics g_beta of the classes P_beta on the dual configuration.
pub fn target_quartics(q: &PointConfig) -> Result<BTreeMap<String, MultiPoly>> {
    BETA.iter()
        .map(|b| {
            let class = named_class(&format!("P_{b}"), Space::Y)?;
            Ok((b.to_string(), unique_section(&class, q)?))
        })
        .collect()
}

pub fn target_plane(q: &PointConfig, [i, j, k]: [usize; 3]) -> Result<MultiPoly> {
    plane_through(q.point(i), q.point(j), q.point(k))
}

pub fn psi_exprs(c: &Cremona) -> Vec<Expr> {
    c.s.iter().map(Expr::poly).collect()
}

/// prod_alpha f_alpha^{m^alpha_beta}.
pub fn fusion_rhs(c: &Cremona, beta: &str) -> Result<Expr> {
    let mut factors = Vec::new();
    for alpha in ALPHA {
        let m = fusion_multiplicity(alpha, beta)?;
        if m > 0 {
            factors.push(Expr::poly(c.f(alpha)).pow(m as u32));
        }
    }
    Ok(Expr::Product(factors))
}

pub fn check_fusion<R: Rng>(
    c: &Cremona,
    g: &BTreeMap<String, MultiPoly>,
    beta: &str,
    opts: CheckOptions,
    rng: &mut R,
) -> Result<IdentityOutcome> {
    let lhs = Expr::poly(&g[beta]).compose(psi_exprs(c));
    identity_check(&lhs, &fusion_rhs(c, beta)?, 4, opts, rng)
}

/// The four target planes of the inverse map and their pullbacks.
pub const PLANE_FUSION: [([usize; 3], [u8; 3], [&str; 3]); 4] = [
    ([1, 2, 5], [1, 2, 5], ["12", "15", "25"]),
    ([0, 2, 5], [1, 2, 4], ["0", "05", "25"]),
    ([1, 2, 4], [1, 3, 5], ["4", "24", "12"]),
    ([1, 3, 5], [0, 2, 5], ["3", "13", "15"]),
];

pub fn check_plane_fusion<R: Rng>(
    c: &Cremona,
    q: &PointConfig,
    index: usize,
    opts: CheckOptions,
    rng: &mut R,
) -> Result<IdentityOutcome> {
    let (qp, pp, fs) = PLANE_FUSION[index];
    let lhs = Expr::poly(&target_plane(q, qp)?).compose(psi_exprs(c));
    let rhs = Expr::product_of(&[c.plane(pp), c.f(fs[0]), c.f(fs[1]), c.f(fs[2])]);
    identity_check(&lhs, &rhs, 4, opts, rng)
}

/// Quartic factors of the coordinates of psi' next to their planes.
pub const PSI_PRIME: [([usize; 3], [&str; 3]); 4] = [
    ([1, 2, 5], ["1", "2", "5"]),
    ([0, 2, 5], ["1", "2", "24"]),
    ([1, 2, 4], ["1", "5", "13"]),
    ([1, 3, 5], ["2", "5", "05"]),
];

pub fn psi_prime(q: &PointConfig, g: &BTreeMap<String, MultiPoly>) -> Result<Vec<Expr>> {
    PSI_PRIME
        .iter()
        .map(|(plane, gs)| {
            let p = target_plane(q, *plane)?;
            Ok(Expr::product_of(&[&p, &g[gs[0]], &g[gs[1]], &g[gs[2]]]))
        })
        .collect()
}

/// F = (f_0 f_3 f_4)^7 (f_05 f_13 f_24)^4 (f_12 f_15 f_25)^3.
pub fn common_factor(c: &Cremona) -> Expr {
    let group = |names: [&str; 3], k: u32| names.map(|a| Expr::poly(c.f(a)).pow(k)).to_vec();
    let mut v = group(["0", "3", "4"], 7);
    v.extend(group(["05", "13", "24"], 4));
    v.extend(group(["12", "15", "25"], 3));
    Expr::Product(v)
}

#[derive(Clone, Debug)]
pub struct CompositeOutcome {
    /// Linear forms L_i with t_i(psi) = L_i F, fitted on the first samples.
    pub forms: Vec<Vec<Q>>,
    /// Further samples reproduced by every form.
    pub reproduced: usize,
    pub checked: usize,
    pub invertible: bool,
    /// Whether L_i is proportional to p_125, p_124, p_135, p_025.
    pub matches_planes: bool,
}

pub const COMPOSITE_PLANES: [[u8; 3]; 4] = [[1, 2, 5], [1, 2, 4], [1, 3, 5], [0, 2, 5]];

/// Fit t_i(psi)/F as linear forms through `fit` samples and test them on
/// `extra` further samples.
pub fn composite_linearity<R: Rng>(
    c: &Cremona,
    q: &PointConfig,
    g: &BTreeMap<String, MultiPoly>,
    fit: usize,
    extra: usize,
    rng: &mut R,
) -> Result<CompositeOutcome> {
    let t: Vec<Expr> = psi_prime(q, g)?.into_iter().map(|e| e.compose(psi_exprs(c))).collect();
    let f = common_factor(c);
    let mut samples = Vec::new();
    while samples.len() < fit + extra {
        let x = random_point(rng, 4);
        let fx = f.eval(&x)?;
        if fx.is_zero() {
            continue;
        }
        let ratios = t.iter().map(|e| Ok(e.eval(&x)? / &fx)).collect::<Result<Vec<Q>>>()?;
        samples.push((x, ratios));
    }
    let mut forms = Vec::new();
    for i in 0..4 {
        let rows: Vec<Vec<Q>> = samples[..fit]
            .iter()
            .map(|(x, r)| {
                let mut row = x.clone();
                row.push(-r[i].clone());
                row
            })
            .collect();
        let ker = QMatrix::from_rows(&rows).kernel();
        let [v] = ker.as_slice() else {
            return Err(PolyError::Residual(format!("t_{i}/F is not linear on the fitting samples")));
        };
        if v[4].is_zero() {
            return Err(PolyError::Residual(format!("t_{i}/F fit is degenerate")));
        }
        forms.push(v[..4].iter().map(|x| x / &v[4]).collect::<Vec<Q>>());
    }
    let reproduced = samples[fit..]
        .iter()
        .filter(|(x, r)| {
            forms.iter().zip(r).all(|(l, ri)| l.iter().zip(x).fold(Q::zero(), |acc, (a, b)| acc + a * b) == *ri)
        })
        .count();
    let invertible = !QMatrix::from_rows(&forms).determinant().is_zero();
    let matches_planes = forms.iter().zip(COMPOSITE_PLANES).all(|(l, p)| {
        let lin = MultiPoly::linear(crate::multipoly::p3_vars(), l);
        lin.proportional(c.plane(p))
    });
    Ok(CompositeOutcome { forms, reproduced, checked: extra, invertible, matches_planes })
}
