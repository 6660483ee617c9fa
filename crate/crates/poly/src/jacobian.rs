//! Determinants of polynomial matrices and Jacobians.

use cremona_core::rational::Q;
use num_traits::Zero;

use crate::multipoly::MultiPoly;

fn minor2(a: &[MultiPoly], b: &[MultiPoly], i: usize, j: usize) -> MultiPoly {
    a[i].mul(&b[j]).sub(&a[j].mul(&b[i]))
}

/// Determinant of a 4x4 polynomial matrix, by Laplace expansion along the
/// first two rows.
pub fn det4(m: &[Vec<MultiPoly>]) -> MultiPoly {
    assert!(m.len() == 4 && m.iter().all(|r| r.len() == 4));
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let vars = m[0][0].vars().clone();
    let mut out = MultiPoly::zero(vars);
    for &(i, j) in &pairs {
        let top = minor2(&m[0], &m[1], i, j);
        if top.is_zero() {
            continue;
        }
        let rest: Vec<usize> = (0..4).filter(|&c| c != i && c != j).collect();
        let bottom = minor2(&m[2], &m[3], rest[0], rest[1]);
        let sign = if (i + j) % 2 == 1 { 1 } else { -1 };
        let term = top.mul(&bottom);
        out = if sign > 0 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// Rows are the polynomials, columns the variables.
pub fn jacobian_matrix(fs: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    fs.iter().map(|f| f.gradient()).collect()
}

/// det of (d f_i / d x_j) for four polynomials in four variables.
pub fn jacobian_det(fs: &[MultiPoly]) -> MultiPoly {
    assert_eq!(fs.len(), 4);
    det4(&jacobian_matrix(fs))
}

/// Determinant of a small square rational matrix by cofactor expansion.
pub fn det_q(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    match n {
        0 => Q::from_integer(1.into()),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = Q::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Q>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
                let t = &m[0][c] * det_q(&sub);
                if c % 2 == 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            acc
        }
    }
}

/// Gradient of a / b from values and gradients (quotient rule).
pub fn quotient_gradient(a: &Q, da: &[Q], b: &Q, db: &[Q]) -> Vec<Q> {
    let b2 = b * b;
    da.iter().zip(db).map(|(x, y)| (b * x - a * y) / &b2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{p3_vars, parse_poly};

    #[test]
    fn det4_matches_cofactor_expansion() {
        let q = |n: i64| Q::from_integer(n.into());
        let m: Vec<Vec<Q>> = vec![
            vec![q(2), q(-1), q(0), q(3)],
            vec![q(1), q(4), q(-2), q(0)],
            vec![q(0), q(5), q(1), q(-3)],
            vec![q(7), q(0), q(2), q(1)],
        ];
        let pm: Vec<Vec<MultiPoly>> =
            m.iter().map(|r| r.iter().map(|x| MultiPoly::constant(p3_vars(), x.clone())).collect()).collect();
        assert_eq!(det4(&pm), MultiPoly::constant(p3_vars(), det_q(&m)));
        let p = |s: &str| parse_poly(p3_vars(), s).unwrap();
        assert_eq!(jacobian_det(&[p("x1"), p("x0"), p("x2"), p("x3")]), p("-1"));
    }
}
