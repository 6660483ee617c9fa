//! Planes, lines, multiplicities and tangent cones in P^3.

use cremona_core::rational::Q;
use cremona_core::QMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::integer_vector;
use crate::error::{PolyError, Result};
use crate::multipoly::{exponent, monomials, p3_vars, plane_vars, power_list, Exp, MultiPoly};

/// Linear form through three points, first nonzero coefficient 1.
pub fn plane_through(p: &[Q], q: &[Q], r: &[Q]) -> Result<MultiPoly> {
    let m = QMatrix::from_rows(&[p.to_vec(), q.to_vec(), r.to_vec()]);
    let ker = m.kernel();
    if ker.len() != 1 {
        return Err(PolyError::Collinear);
    }
    Ok(MultiPoly::linear(p3_vars(), &ker[0]).monic_linear())
}

fn falling(e: u32, a: u32) -> u64 {
    (0..a).map(|k| (e - k) as u64).product()
}

/// Integer-coefficient snapshot of a polynomial for repeated partials.
pub struct IntPoly {
    pub nvars: usize,
    pub terms: Vec<(Exp, BigInt)>,
    pub degree: u32,
}

impl IntPoly {
    pub fn new(f: &MultiPoly) -> IntPoly {
        let (terms, _) = f.integer_form();
        IntPoly { nvars: f.nvars(), terms, degree: f.degree().unwrap_or(0) }
    }

    /// Partial derivative with multi-index `a` at an integer point, up to
    /// the positive common denominator of the coefficients.
    pub fn partial_at(&self, a: &[u32], table: &[Vec<BigInt>]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            let mut ok = true;
            for i in 0..self.nvars {
                let k = exponent(*e, i);
                if k < a[i] {
                    ok = false;
                    break;
                }
                let ff = falling(k, a[i]);
                if ff != 1 {
                    t *= ff;
                }
                let r = (k - a[i]) as usize;
                if r > 0 {
                    t *= &table[i][r];
                }
            }
            if ok {
                acc += t;
            }
        }
        acc
    }
}

pub fn point_table(p: &[BigInt], top: u32) -> Vec<Vec<BigInt>> {
    p.iter().map(|x| power_list(x, top)).collect()
}

/// Multi-indices of total order `k` supported on `dirs`, in the full
/// four-variable layout.
pub fn multi_indices(dirs: &[usize], k: u32, n: usize) -> Vec<Vec<u32>> {
    monomials(dirs.len(), k)
        .into_iter()
        .map(|m| {
            let mut a = vec![0; n];
            for (t, &d) in dirs.iter().enumerate() {
                a[d] = exponent(m, t);
            }
            a
        })
        .collect()
}

/// A coordinate with nonzero entry.
pub fn chart(p: &[BigInt]) -> usize {
    p.iter().position(|x| !x.is_zero()).expect("nonzero point")
}

/// Coordinate directions (a, b) complementary to the line PQ.
pub fn transverse_pair(p: &[BigInt], q: &[BigInt]) -> Result<(usize, usize)> {
    for c in 0..4 {
        for d in c + 1..4 {
            if &p[c] * &q[d] - &p[d] * &q[c] != BigInt::zero() {
                let rest: Vec<usize> = (0..4).filter(|&x| x != c && x != d).collect();
                return Ok((rest[0], rest[1]));
            }
        }
    }
    Err(PolyError::Degenerate("line through coincident points".into()))
}

/// Points P + tQ, t = 0..count.
pub fn line_points(p: &[BigInt], q: &[BigInt], count: usize) -> Vec<Vec<BigInt>> {
    (0..count)
        .map(|t| p.iter().zip(q).map(|(a, b)| a + b * BigInt::from(t)).collect())
        .collect()
}

/// Multiplicity of f at the projective point p: the order of vanishing in
/// the affine chart of a nonzero coordinate of p.
pub fn mult_at_point(f: &MultiPoly, p: &[Q]) -> Result<u32> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let ip = IntPoly::new(f);
    let pi = integer_vector(p);
    let j = chart(&pi);
    let dirs: Vec<usize> = (0..4).filter(|&k| k != j).collect();
    let table = point_table(&pi, ip.degree);
    for k in 0..=ip.degree {
        if multi_indices(&dirs, k, 4).iter().any(|a| !ip.partial_at(a, &table).is_zero()) {
            return Ok(k);
        }
    }
    unreachable!("a nonzero polynomial has finite order")
}

/// Order of vanishing of f along the line through p and q.
pub fn mult_along_line(f: &MultiPoly, p: &[Q], q: &[Q]) -> Result<u32> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (pi, qi) = (integer_vector(p), integer_vector(q));
    let (a, b) = transverse_pair(&pi, &qi)?;
    let ip = IntPoly::new(f);
    let d = ip.degree;
    for k in 0..=d {
        let pts = line_points(&pi, &qi, (d - k + 1) as usize);
        let tables: Vec<_> = pts.iter().map(|x| point_table(x, d)).collect();
        for idx in multi_indices(&[a, b], k, 4) {
            if tables.iter().any(|t| !ip.partial_at(&idx, t).is_zero()) {
                return Ok(k);
            }
        }
    }
    unreachable!("a nonzero polynomial has finite order along a line")
}

/// Tangent cone of f at p, written in the coordinates (X, Y, Z) of the
/// exceptional plane: the lowest-degree part of f(p + u) with u supported
/// on the three coordinates other than the chart coordinate of p.
pub fn restrict_to_exceptional(f: &MultiPoly, p: &[Q]) -> Result<MultiPoly> {
    let m = mult_at_point(f, p)?;
    let ip = IntPoly::new(f);
    let pi = integer_vector(p);
    let j = chart(&pi);
    let dirs: Vec<usize> = (0..4).filter(|&k| k != j).collect();
    let table = point_table(&pi, ip.degree);
    let mut out = MultiPoly::zero(plane_vars());
    for a in multi_indices(&dirs, m, 4) {
        let v = ip.partial_at(&a, &table);
        if v.is_zero() {
            continue;
        }
        let fact: u64 = a.iter().map(|&k| falling(k, k)).product();
        let exps: Vec<u32> = dirs.iter().map(|&d| a[d]).collect();
        out = out.add(&MultiPoly::monomial(plane_vars(), &exps, Q::new(v, BigInt::from(fact))));
    }
    Ok(out.normalized())
}

/// A line in P^3 spanned by two points.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub basis: [Vec<Q>; 2],
}

impl Line {
    pub fn through(p: &[Q], q: &[Q]) -> Result<Line> {
        if QMatrix::from_rows(&[p.to_vec(), q.to_vec()]).rank() < 2 {
            return Err(PolyError::Degenerate("line through coincident points".into()));
        }
        Ok(Line { basis: [p.to_vec(), q.to_vec()] })
    }

    /// Line spanned by sample points; errors unless they span exactly a line.
    pub fn fit(points: &[Vec<Q>]) -> Result<Line> {
        let m = QMatrix::from_rows(points);
        if m.rank() != 2 {
            return Err(PolyError::Degenerate(format!("samples span rank {}", m.rank())));
        }
        let (r, _) = m.rref();
        Ok(Line { basis: [r.row(0).to_vec(), r.row(1).to_vec()] })
    }

    /// Line cut out by two independent linear forms.
    pub fn from_equations(l1: &[Q], l2: &[Q]) -> Result<Line> {
        let ker = QMatrix::from_rows(&[l1.to_vec(), l2.to_vec()]).kernel();
        if ker.len() != 2 {
            return Err(PolyError::Degenerate("dependent equations".into()));
        }
        Line::fit(&ker)
    }

    pub fn contains(&self, p: &[Q]) -> bool {
        QMatrix::from_rows(&[self.basis[0].clone(), self.basis[1].clone(), p.to_vec()]).rank() == 2
    }

    pub fn same(&self, other: &Line) -> bool {
        other.contains(&self.basis[0]) && other.contains(&self.basis[1])
    }

    /// Intersection point with another line, if they meet in one point.
    pub fn meet(&self, other: &Line) -> Option<Vec<Q>> {
        let cols = [
            self.basis[0].clone(),
            self.basis[1].clone(),
            other.basis[0].iter().map(|x| -x).collect(),
            other.basis[1].iter().map(|x| -x).collect(),
        ];
        let ker = QMatrix::from_columns(&cols).kernel();
        if ker.len() != 1 {
            return None;
        }
        let v = &ker[0];
        let p: Vec<Q> = (0..4).map(|i| &v[0] * &self.basis[0][i] + &v[1] * &self.basis[1][i]).collect();
        Some(normalize_point(&p))
    }
}

/// Scale a projective point so its first nonzero coordinate is 1.
pub fn normalize_point(p: &[Q]) -> Vec<Q> {
    match p.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            p.iter().map(|x| x / &lead).collect()
        }
        None => p.to_vec(),
    }
}

pub fn same_point(p: &[Q], q: &[Q]) -> bool {
    QMatrix::from_rows(&[p.to_vec(), q.to_vec()]).rank() == 1
}

pub fn unit(i: usize) -> Vec<Q> {
    (0..4).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse_poly;
    use cremona_core::rational::q;

    fn p(s: &str) -> MultiPoly {
        parse_poly(p3_vars(), s).unwrap()
    }

    #[test]
    fn planes() {
        assert_eq!(plane_through(&unit(1), &unit(2), &unit(3)).unwrap(), p("x0"));
        let r = plane_through(&unit(0), &unit(1), &[q(1), q(1), q(0), q(0)]);
        assert!(matches!(r, Err(PolyError::Collinear)));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(mult_at_point(&p("x1"), &unit(0)).unwrap(), 1);
        assert_eq!(mult_at_point(&p("x1*x2^2 + x3^3"), &unit(0)).unwrap(), 3);
        assert_eq!(mult_at_point(&p("x0^2"), &unit(0)).unwrap(), 0);
        assert_eq!(mult_along_line(&p("x2"), &unit(0), &unit(1)).unwrap(), 1);
        assert_eq!(mult_along_line(&p("x2^2*x0 + x3^3"), &unit(0), &unit(1)).unwrap(), 2);
        assert!(mult_at_point(&MultiPoly::zero(p3_vars()), &unit(0)).is_err());
    }

    #[test]
    fn tangent_cone() {
        let h = restrict_to_exceptional(&p("x0*x3^2 + x1*x2*x3 + x0^3"), &unit(3)).unwrap();
        assert_eq!(h, parse_poly(plane_vars(), "X + 0*Y").unwrap());
    }

    #[test]
    fn lines_meet() {
        let l1 = Line::through(&unit(0), &unit(1)).unwrap();
        let l2 = Line::through(&[q(1), q(1), q(0), q(0)], &unit(2)).unwrap();
        assert_eq!(l1.meet(&l2), Some(vec![q(1), q(1), q(0), q(0)]));
        let l3 = Line::through(&unit(2), &unit(3)).unwrap();
        assert_eq!(l1.meet(&l3), None);
    }
}
