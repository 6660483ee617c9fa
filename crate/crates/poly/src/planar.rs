//! Plane quartics double at three points and passing through three more.

use cremona_core::rational::Q;
use cremona_core::QMatrix;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{PolyError, Result};
use crate::multipoly::{monomials, plane_vars, unpack, MultiPoly};
use crate::points::small_rational;

fn det3(a: &[Q], b: &[Q], c: &[Q]) -> Q {
    QMatrix::from_rows(&[a.to_vec(), b.to_vec(), c.to_vec()]).determinant()
}

fn conic_row(p: &[Q]) -> Vec<Q> {
    let (x, y, z) = (&p[0], &p[1], &p[2]);
    vec![x * x, y * y, z * z, x * y, x * z, y * z]
}

/// Check the three hypotheses on a_1, ..., a_6, reporting the first
/// violated clause.
pub fn check_hypotheses(a: &[Vec<Q>]) -> Result<()> {
    if a.len() != 6 || a.iter().any(|p| p.len() != 3) {
        return Err(PolyError::Hypothesis("expected six points of P^2".into()));
    }
    if det3(&a[0], &a[1], &a[2]).is_zero() {
        return Err(PolyError::Hypothesis("clause 1: a_1, a_2, a_3 are collinear".into()));
    }
    for i in 3..6 {
        for (j, k) in [(0, 1), (0, 2), (1, 2)] {
            if det3(&a[j], &a[k], &a[i]).is_zero() {
                return Err(PolyError::Hypothesis(format!("clause 2: a_{} lies on the line a_{}a_{}", i + 1, j + 1, k + 1)));
            }
        }
    }
    let rows: Vec<Vec<Q>> = a.iter().map(|p| conic_row(p)).collect();
    if QMatrix::from_rows(&rows).determinant().is_zero() {
        return Err(PolyError::Hypothesis("clause 3: a conic passes through all six points".into()));
    }
    Ok(())
}

/// The projective transformation sending a_1, a_2, a_3 to the coordinate
/// points, applied to all six points.
pub fn to_triangle(a: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let m = QMatrix::from_columns(&a[..3]).inverse()?;
    a.iter().map(|p| Ok(m.apply(p)?)).collect()
}

/// Monomials x^2y^2, x^2z^2, y^2z^2, x^2yz, xy^2z, xyz^2 in the r_1..r_6 order.
pub const TRIANGLE_MONOMIALS: [[u32; 3]; 6] = [[2, 2, 0], [2, 0, 2], [0, 2, 2], [2, 1, 1], [1, 2, 1], [1, 1, 2]];

#[derive(Clone, Debug)]
pub struct PlanarOutcome {
    /// The 3x6 matrix of a_4, a_5, a_6 on the monomials above.
    pub matrix: Vec<Vec<Q>>,
    /// Projective dimension 5 - rank.
    pub dimension: usize,
    /// The minor at the columns (r_2, r_4, r_6).
    pub minor: Q,
    /// Projective dimension from the full 15-monomial system in the original coordinates.
    pub dimension_full: usize,
}

impl PlanarOutcome {
    pub fn passed(&self) -> bool {
        self.dimension == 2 && self.dimension_full == 2 && !self.minor.is_zero()
    }
}

pub fn planar_quartic_dim(a: &[Vec<Q>]) -> Result<PlanarOutcome> {
    check_hypotheses(a)?;
    let t = to_triangle(a)?;
    let matrix: Vec<Vec<Q>> = t[3..]
        .iter()
        .map(|p| {
            TRIANGLE_MONOMIALS
                .iter()
                .map(|e| (0..3).fold(Q::one(), |acc, k| acc * pow(&p[k], e[k])))
                .collect()
        })
        .collect();
    let rank = QMatrix::from_rows(&matrix).rank();
    let minor_rows: Vec<Vec<Q>> = matrix.iter().map(|r| vec![r[1].clone(), r[3].clone(), r[5].clone()]).collect();
    let minor = QMatrix::from_rows(&minor_rows).determinant();
    Ok(PlanarOutcome { matrix, dimension: 5 - rank, minor, dimension_full: full_system_dimension(a) })
}

fn pow(x: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * x)
}

/// Quartics in x, y, z with vanishing gradient at a_1, a_2, a_3 and
/// vanishing at a_4, a_5, a_6, on all 15 monomials.
pub fn full_system_dimension(a: &[Vec<Q>]) -> usize {
    let monos = monomials(3, 4);
    let polys: Vec<MultiPoly> = monos
        .iter()
        .map(|&e| MultiPoly::monomial(plane_vars(), &unpack(e, 3), Q::one()))
        .collect();
    let mut rows = Vec::new();
    for p in &a[..3] {
        for k in 0..3 {
            rows.push(polys.iter().map(|m| m.derivative(k).eval(p)).collect::<Vec<Q>>());
        }
    }
    for p in &a[3..] {
        rows.push(polys.iter().map(|m| m.eval(p)).collect());
    }
    QMatrix::from_rows(&rows).kernel().len() - 1
}

/// The standard triangle with [1:1:1], [1:u:v], [1:t:w] for random nonzero
/// u, v, t, w, moved by a random invertible matrix; resampled until the
/// hypotheses hold.
pub fn random_instance<R: Rng>(rng: &mut R) -> Vec<Vec<Q>> {
    loop {
        let mut nz = || loop {
            let x = small_rational(rng);
            if !x.is_zero() {
                break x;
            }
        };
        let (o, z) = (Q::one(), Q::zero());
        let (u, v, t, w) = (nz(), nz(), nz(), nz());
        let pts = [
            vec![o.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z, o.clone()],
            vec![o.clone(), o.clone(), o.clone()],
            vec![o.clone(), u, v],
            vec![o, t, w],
        ];
        let g = QMatrix::from_rows(&(0..3).map(|_| (0..3).map(|_| small_rational(rng)).collect()).collect::<Vec<_>>());
        if g.determinant().is_zero() {
            continue;
        }
        let moved: Vec<Vec<Q>> = pts.iter().map(|p| g.apply(p).expect("3x3 times 3-vector")).collect();
        if check_hypotheses(&moved).is_ok() {
            return moved;
        }
    }
}

/// Six points on the conic xy + yz + zx = 0.
pub fn conic_instance() -> Vec<Vec<Q>> {
    let q = |n: i64| Q::from_integer(n.into());
    let on_conic = |t: Q| {
        let z = -(&t) / (Q::one() + &t);
        vec![Q::one(), t, z]
    };
    vec![
        vec![q(1), q(0), q(0)],
        vec![q(0), q(1), q(0)],
        vec![q(0), q(0), q(1)],
        on_conic(q(1)),
        on_conic(q(2)),
        on_conic(q(3)),
    ]
}
