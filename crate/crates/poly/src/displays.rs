//! Polynomials written out in closed form for the fixture placements,
//! with the parameters a, b, c (or A, B, C) substituted on demand.

use std::collections::BTreeMap;

use cremona_core::rational::Q;

use crate::config::PointConfig;
use crate::error::Result;
use crate::multipoly::{p3_vars, parse_expr, plane_vars, vars_named, MultiPoly};

/// Q_0 on placement B.
pub const F0: &str = "b*c*(-a+b-1)*x*y*z*(y-w) + a*(c-b)*y*z^2*(y-w) + a*b*x*z^2*(y-w)
    + b^2*c*x*y*(x-w)*(y-z) - a*b*c*x*z*(x-y)*(y-z) + b*(c-a)*y*z*(z-w)*(x-y)";

/// Q_12 on placement C.
pub const F12: &str = "-a*(b-1)^2*c*y*z*(x-w)*(z-w) + a*(b-c)*c*y*z*(x-w)*(x-z)
    - b*(b-c)*c*y^2*(x-w)*(x-z) + a*b*(1-2*c+b*c)*w*y*(x-z)*(z-w)
    + a^2*b*(c-1)*w*x*(x-z)*(z-w) - a*(b-1)*b*c*x*y*(x-z)*(z-w)";

/// Q_24 on placement C.
pub const F24: &str = "(a-b)*(a-c)*(b-c)*y*w*(x-z)*(x-w) + a*(a-b)*b*(a-c)*(c-1)*x*w*(x-z)*(y-w)
    - (a-1)*a*b*(a-c)*(c-1)*x*w*(x-z)*(y-z) + a*(a-b)*(b-1)*(c-1)*c*x*z*(x-w)*(y-w)
    + (a-1)*(b-1)*b*(b-c)*c*x*y*(x-w)*(y-w) - a*(b-1)^2*(a-c)*c*x*y*(x-w)*(z-w)";

/// Conic cut by Q_12 on the exceptional plane over p_4, placement C.
pub const H12: &str = "-a*(b-1)^2*c*Y*Z - a*b*(1-2*c+b*c)*Y*(X-Z) - a^2*b*(c-1)*X*(X-Z)";

/// Conic cut by Q_24 on the exceptional plane over p_4, placement C.
pub const H24: &str = "-(a-b)*(a-c)*(b-c)*Y*(X-Z) - a*(a-b)*b*(a-c)*(c-1)*X*(X-Z)
    + a*(a-b)*(b-1)*(c-1)*c*X*Z + (a-1)*(b-1)*b*(b-c)*c*X*Y - a*(b-1)^2*(a-c)*c*X*Y";

/// Fourth common point of the two conics on the line bY - aZ = 0.
pub const YPOINT: [&str; 3] = ["b-c", "a*(1-c)", "b*(1-c)"];

/// The line bY - aZ = 0 on the exceptional plane over p_4.
pub const ELL12: &str = "b*Y - a*Z";

/// Five sections of the anticanonical system of the five-point blow-up,
/// placement A.
pub const F_ANTI: [&str; 5] = [
    "(x-y)*(z-w)*x*y",
    "(x-y)*(z-w)*z*w",
    "(x-z)*(y-w)*x*z",
    "(x-z)*(y-w)*y*w",
    "(x-w)*(y-z)*x*w",
];

/// Coefficients of the anticanonical quartic in the basis above.
pub const G_ANTI: [&str; 5] = ["(B-1)*C", "A-C", "-(A-1)*C", "-(B-C)", "A*B-C"];

/// Rows of the matrix M_{p_0}, as linear forms in the coefficients
/// (a, b, c, d, e) of the five sections.
pub const M_P0: [[&str; 5]; 6] = [
    ["0", "A*B*C*(C-B)", "0", "A*B*C*(C-A)", "0"],
    ["A^2*(C-B)", "-B*C*(C-B)", "B^2*(C-A)", "-A*C*(C-A)", "C^2*(B-A)"],
    ["A*(C-B)", "0", "B*(C-A)", "0", "C*(B-A)"],
    [
        "(A-2)*(A-1)*(C-B)",
        "(A-2)*B*(C-B)*C",
        "(B-1)*B*(1-A+C)",
        "(A-1)*(B-1)*C*(1-A+C)",
        "(1-A+B)*(C-1)*C",
    ],
    ["(2*A-3)*(C-B)", "B*C*(C-B)", "-B*(B-1)", "C*(B-1)*(2-2*A+C)", "-C*(C-1)"],
    ["C-B", "0", "0", "-C*(B-1)", "0"],
];

fn params(config: &PointConfig) -> BTreeMap<String, Q> {
    config.params.clone()
}

/// A displayed quartic in x, y, z, w, rewritten in x_0..x_3.
pub fn space_poly(text: &str, config: &PointConfig) -> Result<MultiPoly> {
    let p = parse_expr(vars_named(&["x", "y", "z", "w"]), text, &params(config))?;
    Ok(p.rename(p3_vars()))
}

pub fn plane_poly(text: &str, config: &PointConfig) -> Result<MultiPoly> {
    parse_expr(plane_vars(), text, &params(config))
}

/// A displayed scalar expression in the parameters.
pub fn scalar(text: &str, config: &PointConfig) -> Result<Q> {
    let p = parse_expr(vars_named(&[]), text, &params(config))?;
    Ok(p.terms().get(&0).cloned().unwrap_or_default())
}

pub fn anticanonical_basis(config: &PointConfig) -> Result<Vec<MultiPoly>> {
    F_ANTI.iter().map(|t| space_poly(t, config)).collect()
}

pub fn anticanonical_coefficients(config: &PointConfig) -> Result<Vec<Q>> {
    G_ANTI.iter().map(|t| scalar(t, config)).collect()
}

pub fn m_p0(config: &PointConfig) -> Result<Vec<Vec<Q>>> {
    M_P0.iter().map(|row| row.iter().map(|t| scalar(t, config)).collect()).collect()
}

pub fn ypoint(config: &PointConfig) -> Result<Vec<Q>> {
    YPOINT.iter().map(|t| scalar(t, config)).collect()
}
