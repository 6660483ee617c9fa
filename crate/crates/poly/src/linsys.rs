//! Linear systems of surfaces with assigned multiplicities at the
//! configuration points and along lines through pairs of them.

use cremona_core::divisor::{DivisorClass, Generator};
use cremona_core::rational::Q;
use cremona_core::QMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::config::PointConfig;
use crate::error::{PolyError, Result};
use crate::geometry::{chart, line_points, multi_indices, point_table, transverse_pair};
use crate::modular::{annihilates, modular_kernel, primes, rank_mod};
use crate::multipoly::{exponent, from_coeffs, monomials, p3_vars, Exp, MultiPoly};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Conditions {
    pub points: Vec<(usize, u32)>,
    pub lines: Vec<((usize, usize), u32)>,
}

impl Conditions {
    /// Degree and conditions of dH - sum m_i E_i - sum n_ij E_ij.
    /// Nonnegative exceptional coefficients impose nothing.
    pub fn from_class(class: &DivisorClass) -> Result<(u32, Conditions)> {
        let d = class.coeff(Generator::H);
        let d = d.to_integer().to_u32().filter(|_| d.is_integer() && d.is_positive());
        let d = d.ok_or_else(|| PolyError::Degenerate(format!("degree of {class} is not a positive integer")))?;
        let mut out = Conditions::default();
        let mult = |g: Generator| -> Option<u32> {
            let c = -class.coeff(g);
            (c.is_positive()).then(|| c.to_integer().to_u32().expect("small multiplicity"))
        };
        for i in 0..class.space.npoints() {
            if let Some(m) = mult(Generator::E(i as u8)) {
                out.points.push((i, m));
            }
        }
        for (i, j) in class.space.lines() {
            if let Some(m) = mult(Generator::line(i, j)) {
                out.lines.push(((i as usize, j as usize), m));
            }
        }
        Ok((d, out))
    }
}

/// Exact integer condition matrix on the degree-d monomial basis.
///
/// A point of multiplicity m contributes every partial of order < m in the
/// three coordinates other than a chart coordinate of the point. A line of
/// multiplicity n through P and Q contributes, for each partial of order
/// k < n in two coordinate directions transverse to the line, vanishing at
/// d - k + 1 points of the line, which forces the degree-(d - k)
/// restriction to vanish.
pub fn condition_rows(d: u32, conds: &Conditions, config: &PointConfig) -> (Vec<Exp>, Vec<Vec<BigInt>>) {
    let monos = monomials(4, d);
    let mut rows = Vec::new();
    let eval_row = |a: &[u32], table: &[Vec<BigInt>]| -> Vec<BigInt> {
        monos
            .iter()
            .map(|&e| {
                let mut t = BigInt::from(1);
                for i in 0..4 {
                    let k = exponent(e, i);
                    if k < a[i] {
                        return BigInt::zero();
                    }
                    let ff: u64 = (0..a[i]).map(|s| (k - s) as u64).product();
                    t *= ff;
                    t *= &table[i][(k - a[i]) as usize];
                }
                t
            })
            .collect()
    };
    for &(i, m) in &conds.points {
        let p = config.integer_point(i);
        let j = chart(&p);
        let dirs: Vec<usize> = (0..4).filter(|&k| k != j).collect();
        let table = point_table(&p, d);
        for k in 0..m.min(d + 1) {
            for a in multi_indices(&dirs, k, 4) {
                rows.push(eval_row(&a, &table));
            }
        }
    }
    for &((i, j), n) in &conds.lines {
        let (p, q) = (config.integer_point(i), config.integer_point(j));
        let (a, b) = transverse_pair(&p, &q).expect("distinct configuration points");
        for k in 0..n.min(d + 1) {
            let pts = line_points(&p, &q, (d - k + 1) as usize);
            for idx in multi_indices(&[a, b], k, 4) {
                for x in &pts {
                    rows.push(eval_row(&idx, &point_table(x, d)));
                }
            }
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    (monos, rows)
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub degree: u32,
    pub point_conditions: Vec<(usize, u32)>,
    pub line_conditions: Vec<((usize, usize), u32)>,
    pub basis: Vec<MultiPoly>,
}

impl LinearSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Above this many monomials the kernel is computed multi-modularly.
const EXACT_COLUMNS: usize = 120;
const MAX_PRIMES: usize = 64;

pub fn linear_system(d: u32, conds: &Conditions, config: &PointConfig) -> Result<LinearSystem> {
    let (monos, rows) = condition_rows(d, conds, config);
    let kernel = if rows.is_empty() {
        (0..monos.len()).map(|i| (0..monos.len()).map(|j| Q::from_integer(BigInt::from((i == j) as u8))).collect()).collect()
    } else if monos.len() <= EXACT_COLUMNS {
        let m = QMatrix::from_rows(
            &rows.iter().map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect()).collect::<Vec<_>>(),
        );
        m.kernel()
    } else {
        modular_kernel(&rows, monos.len(), MAX_PRIMES)
            .ok_or_else(|| PolyError::Degenerate("kernel did not stabilize".into()))?
            .vectors
    };
    let basis = kernel.iter().map(|v| from_coeffs(p3_vars(), &monos, v).normalized()).collect();
    Ok(LinearSystem {
        degree: d,
        point_conditions: conds.points.clone(),
        line_conditions: conds.lines.clone(),
        basis,
    })
}

pub fn linear_system_of_class(class: &DivisorClass, config: &PointConfig) -> Result<LinearSystem> {
    let (d, conds) = Conditions::from_class(class)?;
    linear_system(d, &conds, config)
}

/// Dimension certificate for large systems: the kernel mod p bounds the
/// rational dimension from above, and exactly verified independent
/// sections bound it from below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCertificate {
    pub upper: usize,
    pub lower: usize,
    pub rows: usize,
    pub columns: usize,
}

impl DimensionCertificate {
    pub fn exact(&self) -> Option<usize> {
        (self.upper == self.lower).then_some(self.upper)
    }
}

pub fn dimension_certificate(
    d: u32,
    conds: &Conditions,
    config: &PointConfig,
    witnesses: &[MultiPoly],
) -> DimensionCertificate {
    let (monos, rows) = condition_rows(d, conds, config);
    let rank = primes(2).into_iter().map(|p| rank_mod(&rows, monos.len(), p)).max().unwrap_or(0);
    let upper = monos.len() - rank;
    let vecs: Vec<Vec<Q>> = witnesses
        .iter()
        .filter(|w| w.is_homogeneous() && w.degree() == Some(d))
        .map(|w| monos.iter().map(|&e| w.terms().get(&e).cloned().unwrap_or_default()).collect::<Vec<Q>>())
        .filter(|v| annihilates(&rows, v))
        .collect();
    let lower = if vecs.is_empty() { 0 } else { QMatrix::from_rows(&vecs).rank() };
    DimensionCertificate { upper, lower, rows: rows.len(), columns: monos.len() }
}

/// Whether f satisfies every condition exactly.
pub fn satisfies(f: &MultiPoly, conds: &Conditions, config: &PointConfig) -> bool {
    let Some(d) = f.degree() else { return true };
    if !f.is_homogeneous() {
        return false;
    }
    let (monos, rows) = condition_rows(d, conds, config);
    let v: Vec<Q> = monos.iter().map(|&e| f.terms().get(&e).cloned().unwrap_or_default()).collect();
    annihilates(&rows, &v)
}

/// Coefficients c with target = sum c_i basis_i, if the target lies in
/// the span and the basis is independent.
pub fn span_coefficients(target: &MultiPoly, basis: &[MultiPoly]) -> Option<Vec<Q>> {
    let mut monos: Vec<Exp> = target.terms().keys().copied().collect();
    for b in basis {
        monos.extend(b.terms().keys().copied());
    }
    monos.sort_unstable();
    monos.dedup();
    let column = |p: &MultiPoly| -> Vec<Q> { monos.iter().map(|e| p.terms().get(e).cloned().unwrap_or_default()).collect() };
    let mut cols: Vec<Vec<Q>> = basis.iter().map(column).collect();
    cols.push(column(target));
    let ker = QMatrix::from_columns(&cols).kernel();
    match ker.as_slice() {
        [v] if !v[basis.len()].is_zero() => {
            let last = v[basis.len()].clone();
            Some(v[..basis.len()].iter().map(|x| -x / &last).collect())
        }
        _ => None,
    }
}
