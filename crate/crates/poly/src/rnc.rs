//! Restriction to the rational normal curve through the six points of the
//! placement p = (e_0, e_3, e_2, [1:1:1:1], [1:1/a:1/b:1/c], e_1).

use cremona_core::rational::Q;
use num_traits::{One, Zero};

use crate::config::PointConfig;
use crate::cremona::Cremona;
use crate::error::{PolyError, Result};
use crate::multipoly::{curve_vars, MultiPoly};

/// alpha = (c-1)(b-a)/((b-1)(c-a)), or `None` when undefined or forbidden.
pub fn alpha_formula(a: &Q, b: &Q, c: &Q) -> Option<Q> {
    let one = Q::one();
    let den = (b - &one) * (c - a);
    if den.is_zero() {
        return None;
    }
    let alpha = (c - &one) * (b - a) / den;
    (!forbidden_values(a, b, c).contains(&alpha)).then_some(alpha)
}

/// The finite values alpha must avoid: -1, -1/c, -1/b, 0, -1/a.
/// (The sixth, infinity, is excluded by alpha being a finite rational.)
pub fn forbidden_values(a: &Q, b: &Q, c: &Q) -> Vec<Q> {
    let one = Q::one();
    vec![-one.clone(), -(&one / c), -(&one / b), Q::zero(), -(&one / a)]
}

/// The six linear forms u, v, u+v, au+v, bu+v, cu+v vanishing at the
/// parameters of p_3, p_4, p_0, p_5, p_2, p_1.
pub const FACTOR_NAMES: [&str; 6] = ["u", "v", "u+v", "au+v", "bu+v", "cu+v"];

fn factors(a: &Q, b: &Q, c: &Q) -> [MultiPoly; 6] {
    let lin = |x: Q, y: Q| MultiPoly::linear(curve_vars(), &[x, y]);
    let (z, o) = (Q::zero(), Q::one());
    [lin(o.clone(), z.clone()), lin(z, o.clone()), lin(o.clone(), o.clone()), lin(a.clone(), o.clone()), lin(b.clone(), o.clone()), lin(c.clone(), o)]
}

/// The parametrization [(au+v)(bu+v)(cu+v) : (u+v)(bu+v)(cu+v) :
/// (u+v)(au+v)(cu+v) : (u+v)(au+v)(bu+v)].
pub fn rnc_map(config: &PointConfig) -> Result<[MultiPoly; 4]> {
    let (a, b, c) = config.abc()?;
    let [_, _, l1, la, lb, lc] = factors(&a, &b, &c);
    Ok([la.mul(&lb).mul(&lc), l1.mul(&lb).mul(&lc), l1.mul(&la).mul(&lc), l1.mul(&la).mul(&lb)])
}

/// Expected exponents of the six known linear factors.
pub struct RncRow {
    pub name: &'static str,
    pub known: [u32; 6],
    /// Whether a residual linear factor u + t v is expected.
    pub residual: bool,
}

const fn row(name: &'static str, known: [u32; 6], residual: bool) -> RncRow {
    RncRow { name, known, residual }
}

pub const RNC_TABLE: [RncRow; 13] = [
    row("f_12", [2, 2, 2, 2, 2, 2], false),
    row("f_15", [2, 2, 2, 2, 2, 2], false),
    row("f_25", [2, 2, 2, 2, 2, 2], false),
    row("f_05", [2, 2, 2, 2, 2, 2], false),
    row("f_13", [2, 2, 2, 2, 2, 2], false),
    row("f_24", [2, 2, 2, 2, 2, 2], false),
    row("f_0", [1, 1, 2, 3, 2, 2], true),
    row("f_3", [2, 1, 1, 2, 2, 3], true),
    row("f_4", [1, 2, 1, 2, 3, 2], true),
    row("p_034", [1, 1, 1, 0, 0, 0], false),
    row("p_045", [0, 1, 1, 1, 0, 0], false),
    row("p_234", [1, 1, 0, 0, 1, 0], false),
    row("p_013", [1, 0, 1, 0, 0, 1], false),
];

#[derive(Clone, Debug)]
pub struct RncResult {
    pub name: &'static str,
    pub restricted: MultiPoly,
    /// What is left after dividing out the known factors.
    pub residual: MultiPoly,
    /// t with residual proportional to u + t v.
    pub parameter: Option<Q>,
}

#[derive(Clone, Debug)]
pub struct RncTable {
    pub rows: Vec<RncResult>,
    pub alpha: Q,
    pub beta: Q,
    pub gamma: Q,
}

fn polynomial_for<'a>(c: &'a Cremona, name: &str) -> &'a MultiPoly {
    match name.split_once('_') {
        Some(("f", alpha)) => c.f(alpha),
        Some(("p", digits)) => {
            let d: Vec<u8> = digits.bytes().map(|x| x - b'0').collect();
            c.plane([d[0], d[1], d[2]])
        }
        _ => unreachable!("table names are f_* or p_*"),
    }
}

/// Restrict every listed polynomial to the curve, divide out the predicted
/// factors exactly and read alpha, beta, gamma off the residual factors.
pub fn rnc_restrict(c: &Cremona) -> Result<RncTable> {
    let (a, b, cc) = c.config.abc()?;
    let map = rnc_map(&c.config)?;
    let lin = factors(&a, &b, &cc);
    let mut rows = Vec::new();
    for r in &RNC_TABLE {
        let restricted = polynomial_for(c, r.name).compose(&map);
        let mut rest = restricted.clone();
        for (f, &k) in lin.iter().zip(&r.known) {
            for _ in 0..k {
                rest = rest
                    .div_exact(f)
                    .ok_or_else(|| PolyError::Residual(format!("{} is not divisible by the predicted factors", r.name)))?;
            }
        }
        let parameter = match (r.residual, rest.degree()) {
            (false, Some(0)) => None,
            (true, Some(1)) => {
                let cu = rest.coeff(&[1, 0]);
                if cu.is_zero() {
                    return Err(PolyError::Residual(format!("{}: residual factor is v", r.name)));
                }
                Some(rest.coeff(&[0, 1]) / cu)
            }
            _ => return Err(PolyError::Residual(format!("{}: residual {rest}", r.name))),
        };
        rows.push(RncResult { name: r.name, restricted, residual: rest, parameter });
    }
    let param = |n: &str| rows.iter().find(|r| r.name == n).and_then(|r| r.parameter.clone()).expect("residual parameter");
    let (alpha, beta, gamma) = (param("f_0"), param("f_3"), param("f_4"));
    Ok(RncTable { rows, alpha, beta, gamma })
}

/// The cubic R'(u, v) = [1 : v/(u+alpha v) : u/(u+gamma v) : (u+v)/(u+beta v)]
/// with denominators cleared.
pub fn image_curve(t: &RncTable) -> [MultiPoly; 4] {
    let lin = |x: Q, y: Q| MultiPoly::linear(curve_vars(), &[x, y]);
    let (z, o) = (Q::zero(), Q::one());
    let u = lin(o.clone(), z.clone());
    let v = lin(z, o.clone());
    let ua = lin(o.clone(), t.alpha.clone());
    let ub = lin(o.clone(), t.beta.clone());
    let ug = lin(o.clone(), t.gamma.clone());
    let uv = lin(o.clone(), o);
    [ua.mul(&ub).mul(&ug), v.mul(&ub).mul(&ug), u.mul(&ua).mul(&ub), uv.mul(&ua).mul(&ug)]
}

/// psi composed with the curve, with the common factor removed: the
/// scalars lambda_i with psi(r(u, v)) proportional to (lambda_i R'_i), or
/// `None` if some coordinate is not a multiple of R'_i.
pub fn psi_on_curve_scalars(c: &Cremona, t: &RncTable) -> Result<Option<Vec<Q>>> {
    let map = rnc_map(&c.config)?;
    let target = image_curve(t);
    let image: Vec<MultiPoly> = c.s.iter().map(|s| s.compose(&map)).collect();
    let lead = image[0].clone();
    let Some(common) = lead.div_exact(&target[0]) else { return Ok(None) };
    let mut out = Vec::new();
    for (p, r) in image.iter().zip(&target) {
        match p.ratio_to(&common.mul(r)) {
            Some(l) if !l.is_zero() => out.push(l),
            _ => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// The point of R' at parameter [u : v], scaled by `lambda`.
pub fn image_curve_point(t: &RncTable, lambda: &[Q], u: &Q, v: &Q) -> Vec<Q> {
    image_curve(t).iter().zip(lambda).map(|(p, l)| l * p.eval(&[u.clone(), v.clone()])).collect()
}

/// Candidate parameters [u : v] of the images of the six points.
pub fn special_parameters(t: &RncTable) -> Vec<(&'static str, [Q; 2])> {
    let (z, o) = (Q::zero(), Q::one());
    vec![
        ("-alpha", [-t.alpha.clone(), o.clone()]),
        ("-beta", [-t.beta.clone(), o.clone()]),
        ("-gamma", [-t.gamma.clone(), o.clone()]),
        ("0", [z.clone(), o.clone()]),
        ("infinity", [o.clone(), z]),
        ("-1", [-o.clone(), o]),
    ]
}
