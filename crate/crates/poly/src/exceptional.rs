//! The Jacobian of psi, the local charts showing that no quartic is
//! contracted, and the conics cut on the exceptional plane over p_4.

use cremona_core::rational::Q;
use num_traits::{One, Zero};
use rand::Rng;

use crate::config::PointConfig;
use crate::cremona::Cremona;
use crate::displays::{plane_poly, ypoint, H12, H24};
use crate::error::{PolyError, Result};
use crate::expr::{identity_check, random_point, CheckOptions, Expr, IdentityOutcome};
use crate::geometry::{restrict_to_exceptional, same_point};
use crate::inverse::psi_exprs;
use crate::jacobian::{det_q, quotient_gradient};
use crate::multipoly::{curve_vars, MultiPoly};
use crate::points::points_on_quartic;
use cremona_core::divisor::{named_class, Space, ALPHA};

/// f_0^2 f_3^2 f_4^2 f_05 f_13 f_24 f_12 f_15 f_25.
pub fn jacobian_rhs(c: &Cremona) -> Expr {
    let mut v: Vec<Expr> = ["0", "3", "4"].iter().map(|a| Expr::poly(c.f(a)).pow(2)).collect();
    v.extend(["05", "13", "24", "12", "15", "25"].iter().map(|a| Expr::poly(c.f(a))));
    Expr::Product(v)
}

pub fn check_jacobian<R: Rng>(c: &Cremona, opts: CheckOptions, rng: &mut R) -> Result<IdentityOutcome> {
    identity_check(&Expr::JacobianDet(psi_exprs(c)), &jacobian_rhs(c), 4, opts, rng)
}

/// A factor of a closed form: x_0, a quartic f_alpha or a plane p_ijk.
#[derive(Clone, Copy, Debug)]
pub enum Factor {
    X0,
    F(&'static str),
    P([u8; 3]),
}

/// The affine chart x_0 = 1 of a lifted map: three ratios of sections
/// and the predicted Jacobian as a product of factors with exponents.
#[derive(Clone, Debug)]
pub struct Chart {
    pub quartic: &'static str,
    /// Ratios (numerator, denominator) as indices into `sections`.
    pub ratios: [(usize, usize); 3],
    pub closed_form: &'static [(Factor, i32)],
}

use Factor::{F, P, X0};

pub const CHARTS: [Chart; 3] = [
    // (s_0/s_1, s_2/s_0, s_3/s_0)
    Chart {
        quartic: "0",
        ratios: [(0, 1), (2, 0), (3, 0)],
        closed_form: &[
            (X0, 1),
            (F("05"), 1),
            (F("13"), 1),
            (F("12"), 1),
            (F("15"), 1),
            (F("25"), 1),
            (P([0, 3, 4]), -2),
            (P([0, 4, 5]), -2),
            (F("3"), -2),
            (F("4"), -2),
            (F("24"), -1),
        ],
    },
    // (s_1/s_0, s'_2/s_0, s_3/s'_2)
    Chart {
        quartic: "05",
        ratios: [(1, 0), (2, 0), (3, 2)],
        closed_form: &[
            (X0, 1),
            (F("13"), 1),
            (F("24"), 1),
            (F("12"), 1),
            (F("15"), 1),
            (F("25"), 1),
            (P([0, 3, 4]), -3),
            (P([0, 2, 4]), -1),
            (F("0"), -2),
            (F("3"), -2),
            (F("4"), -1),
        ],
    },
    // (s''_0/s_1, s_2/s_1, s''_3/s''_0)
    Chart {
        quartic: "12",
        ratios: [(0, 1), (2, 1), (3, 0)],
        closed_form: &[
            (X0, 1),
            (F("0"), 2),
            (F("05"), 1),
            (F("15"), 1),
            (F("25"), 1),
            (P([0, 4, 5]), -3),
            (P([2, 4, 5]), -1),
            (F("3"), -2),
            (F("4"), -1),
            (F("24"), -2),
        ],
    },
];

/// The four sections a chart is written in.
pub fn chart_sections(c: &Cremona, quartic: &str) -> Result<[MultiPoly; 4]> {
    let s = &c.s;
    Ok(match quartic {
        "0" => s.clone(),
        "05" => [s[0].clone(), s[1].clone(), c.s_prime[2].clone(), s[3].clone()],
        "12" => [c.s_second[0].clone(), s[1].clone(), s[2].clone(), c.s_second[1].clone()],
        _ => return Err(PolyError::Degenerate(format!("no chart for Q_{quartic}"))),
    })
}

/// Value of a product of factors; `None` if a denominator vanishes.
pub fn closed_form_value(c: &Cremona, form: &[(Factor, i32)], x: &[Q]) -> Option<Q> {
    let mut acc = Q::one();
    for &(f, e) in form {
        let v = match f {
            X0 => x[0].clone(),
            F(a) => c.f(a).eval(x),
            P(p) => c.plane(p).eval(x),
        };
        if e < 0 && v.is_zero() {
            return None;
        }
        let mut p = Q::one();
        for _ in 0..e.unsigned_abs() {
            p *= &v;
        }
        acc = if e < 0 { acc / p } else { acc * p };
    }
    Some(acc)
}

/// Jacobian determinant of the three ratios in (x_1, x_2, x_3) at the
/// point (1, x_1, x_2, x_3); `None` if a denominator vanishes.
pub fn chart_jacobian(sections: &[Expr], ratios: &[(usize, usize); 3], x: &[Q]) -> Result<Option<Q>> {
    let vals = sections.iter().map(|e| e.eval_grad(x)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for &(n, d) in ratios {
        let (a, da) = &vals[n];
        let (b, db) = &vals[d];
        if b.is_zero() {
            return Ok(None);
        }
        rows.push(quotient_gradient(a, da, b, db)[1..].to_vec());
    }
    Ok(Some(det_q(&rows)))
}

#[derive(Clone, Debug)]
pub struct ChartOutcome {
    pub quartic: &'static str,
    /// The closed form equals the chart Jacobian up to this scalar.
    pub scalar: Option<Q>,
    pub generic_samples: usize,
    /// General points of Q_alpha with x_0 = 1 where the closed form is defined and nonzero.
    pub nonzero_on_quartic: usize,
    pub quartic_samples: usize,
}

impl ChartOutcome {
    pub fn passed(&self) -> bool {
        self.scalar.is_some() && self.quartic_samples > 0 && self.nonzero_on_quartic == self.quartic_samples
    }
}

pub fn check_chart<R: Rng>(c: &Cremona, chart: &Chart, samples: usize, rng: &mut R) -> Result<ChartOutcome> {
    let sections: Vec<Expr> = chart_sections(c, chart.quartic)?.iter().map(Expr::poly).collect();
    let mut scalar: Option<Q> = None;
    let mut consistent = true;
    let mut n = 0;
    let mut tries = 0;
    while n < samples {
        tries += 1;
        if tries > 4 * samples + 10 {
            return Err(PolyError::Resample(tries));
        }
        let mut x = random_point(rng, 4);
        x[0] = Q::one();
        let (Some(actual), Some(closed)) = (chart_jacobian(&sections, &chart.ratios, &x)?, closed_form_value(c, chart.closed_form, &x))
        else {
            continue;
        };
        if closed.is_zero() {
            continue;
        }
        n += 1;
        let r = actual / closed;
        match &scalar {
            None => scalar = Some(r),
            Some(s) => consistent &= *s == r,
        }
    }
    let scalar = scalar.filter(|s| consistent && !s.is_zero());
    let class = named_class(&format!("Q_{}", chart.quartic), Space::Y)?;
    let pts = points_on_quartic(c.f(chart.quartic), &class, &c.config, samples, rng)?;
    let mut quartic_samples = 0;
    let mut nonzero = 0;
    // A general point of Q_alpha lies on no other Q_beta.
    let general = |p: &Vec<Q>| !p[0].is_zero() && ALPHA.iter().all(|b| *b == chart.quartic || !c.f(b).eval(p).is_zero());
    for p in pts.iter().filter(|p| general(p)) {
        let x: Vec<Q> = p.iter().map(|v| v / &p[0]).collect();
        quartic_samples += 1;
        if closed_form_value(c, chart.closed_form, &x).is_some_and(|v| !v.is_zero()) {
            nonzero += 1;
        }
    }
    Ok(ChartOutcome { quartic: chart.quartic, scalar, generic_samples: n, nonzero_on_quartic: nonzero, quartic_samples })
}

#[derive(Clone, Debug)]
pub struct E4Outcome {
    pub h12: MultiPoly,
    pub h24: MultiPoly,
    pub h12_matches: bool,
    pub h24_matches: bool,
    /// The second point of h_12 on the line bY = aZ.
    pub point: Vec<Q>,
    pub point_matches: bool,
    pub on_h24: bool,
}

impl E4Outcome {
    pub fn passed(&self) -> bool {
        self.h12_matches && self.h24_matches && self.point_matches && self.on_h24
    }
}

/// Tangent cones of f_12 and f_24 at p_4 = [0:0:0:1] on configuration C.
pub fn e4_conics(c: &Cremona) -> Result<E4Outcome> {
    let cfg: &PointConfig = &c.config;
    let p4 = cfg.point(4);
    let h12 = restrict_to_exceptional(c.f("12"), p4)?;
    let h24 = restrict_to_exceptional(c.f("24"), p4)?;
    let h12_matches = h12.proportional(&plane_poly(H12, cfg)?);
    let h24_matches = h24.proportional(&plane_poly(H24, cfg)?);
    // Restrict h_12 to [X : a t : b t]; one root is X = t, the other X/t = gamma/alpha.
    let (a, b, _) = cfg.abc()?;
    let vars = curve_vars();
    let lin = |x: Q, y: Q| MultiPoly::linear(vars.clone(), &[x, y]);
    let r = h12.compose(&[lin(Q::one(), Q::zero()), lin(Q::zero(), a.clone()), lin(Q::zero(), b.clone())]);
    let (ca, cb, cg) = (r.coeff(&[2, 0]), r.coeff(&[1, 1]), r.coeff(&[0, 2]));
    if ca.is_zero() || !(&ca + &cb + &cg).is_zero() {
        return Err(PolyError::Residual(format!("h_12 on the line bY = aZ is {r}")));
    }
    let point = vec![cg / ca, a, b];
    let point_matches = same_point(&point, &ypoint(cfg)?);
    let on_h24 = h24.eval(&point).is_zero();
    Ok(E4Outcome { h12, h24, h12_matches, h24_matches, point, point_matches, on_h24 })
}
