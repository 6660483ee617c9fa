//! Rational points on the quartic surfaces.
//!
//! If f has multiplicity at least 2 at P and vanishes at R, then f restricted
//! to the line PR is s^2 (c_2 + c_3 s) in the parameter of P + sR, so the
//! third intersection P - (c_2 / c_3) R is rational.

use cremona_core::divisor::{DivisorClass, Generator};
use cremona_core::rational::Q;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::config::PointConfig;
use crate::error::{PolyError, Result};
use crate::multipoly::{vars_named, MultiPoly};

/// Restriction of f to the line P + sR as coefficients in s.
pub fn restrict_to_line(f: &MultiPoly, p: &[Q], r: &[Q]) -> Vec<Q> {
    let vars = vars_named(&["s"]);
    let s = MultiPoly::var(vars.clone(), 0);
    let subs: Vec<MultiPoly> =
        p.iter().zip(r).map(|(a, b)| MultiPoly::constant(vars.clone(), a.clone()).add(&s.scale(b))).collect();
    let g = f.compose(&subs);
    let d = f.degree().unwrap_or(0) as usize;
    (0..=d).map(|k| g.coeff(&[k as u32])).collect()
}

/// Residual intersection of the line PR with f, for P singular on f and R on f.
pub fn third_point(f: &MultiPoly, p: &[Q], r: &[Q]) -> Option<Vec<Q>> {
    let c = restrict_to_line(f, p, r);
    if c.len() != 5 || !(c[0].is_zero() && c[1].is_zero() && c[4].is_zero()) || c[2].is_zero() || c[3].is_zero() {
        return None;
    }
    let s = -&c[2] / &c[3];
    Some(p.iter().zip(r).map(|(a, b)| a + &s * b).collect())
}

fn line_mult(class: &DivisorClass, i: u8, j: u8) -> Q {
    -class.coeff(Generator::line(i, j))
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Q {
    loop {
        let n = rng.gen_range(-30i64..=30);
        let d = rng.gen_range(1i64..=7);
        if n != 0 {
            return Q::new(BigInt::from(n), BigInt::from(d));
        }
    }
}

fn on_line<R: Rng>(config: &PointConfig, i: u8, j: u8, rng: &mut R) -> Vec<Q> {
    let t = small_rational(rng);
    config.point(i as usize).iter().zip(config.point(j as usize)).map(|(a, b)| a + &t * b).collect()
}

/// Random rational points on the surface f = 0 of the given class, using a
/// line of multiplicity 2 and a disjoint line of multiplicity 1.
pub fn points_on_quartic<R: Rng>(
    f: &MultiPoly,
    class: &DivisorClass,
    config: &PointConfig,
    count: usize,
    rng: &mut R,
) -> Result<Vec<Vec<Q>>> {
    let lines = class.space.lines();
    let double = lines.iter().find(|&&(i, j)| line_mult(class, i, j) >= Q::from_integer(2.into()));
    let &(i, j) = double.ok_or_else(|| PolyError::Degenerate(format!("{class} has no double line")))?;
    let simple: Vec<(u8, u8)> = lines
        .iter()
        .copied()
        .filter(|&(k, l)| line_mult(class, k, l).is_positive() && ![i, j].contains(&k) && ![i, j].contains(&l))
        .collect();
    if simple.is_empty() {
        return Err(PolyError::Degenerate(format!("{class} has no line skew to p{i}p{j}")));
    }
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 50 * count + 50 {
            return Err(PolyError::Resample(attempts));
        }
        let (k, l) = simple[rng.gen_range(0..simple.len())];
        let p = on_line(config, i, j, rng);
        let r = on_line(config, k, l, rng);
        if let Some(x) = third_point(f, &p, &r) {
            if !x.iter().all(Zero::is_zero) && f.eval(&x).is_zero() {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// Random rational points on a surface singular at a configuration point
/// and containing a line through two others.
pub fn points_through_node<R: Rng>(
    f: &MultiPoly,
    config: &PointConfig,
    node: usize,
    line: (u8, u8),
    count: usize,
    rng: &mut R,
) -> Result<Vec<Vec<Q>>> {
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 50 * count + 50 {
            return Err(PolyError::Resample(attempts));
        }
        let r = on_line(config, line.0, line.1, rng);
        if let Some(x) = third_point(f, config.point(node), &r) {
            if f.eval(&x).is_zero() {
                out.push(x);
            }
        }
    }
    Ok(out)
}
