//! The six points q_i on the target and the projective equivalence with
//! the source configuration.

use std::collections::BTreeMap;

use cremona_core::divisor::{named_class, Space};
use cremona_core::rational::Q;
use cremona_core::QMatrix;
use num_traits::Zero;
use rand::Rng;

use crate::config::PointConfig;
use crate::cremona::Cremona;
use crate::error::{PolyError, Result};
use crate::geometry::{normalize_point, same_point, Line};
use crate::points::points_on_quartic;

/// Quartics contracted to points, with the stated images.
pub const POINT_QUARTICS: [(&str, usize, [i64; 4]); 3] =
    [("0", 0, [0, 1, 0, 0]), ("3", 3, [0, 0, 0, 1]), ("4", 4, [0, 0, 1, 0])];

/// Quartics contracted to lines.
pub const LINE_QUARTICS: [&str; 6] = ["05", "13", "24", "12", "15", "25"];

/// For q_1, q_2, q_5: the three lines meeting there.
pub const TRIPLES: [(usize, [&str; 3]); 3] = [(1, ["12", "15", "13"]), (5, ["15", "25", "05"]), (2, ["25", "12", "24"])];

#[derive(Clone, Debug)]
pub struct DualConfig {
    pub q: PointConfig,
    /// Images of sample points of each contracted quartic.
    pub images: BTreeMap<String, Vec<Vec<Q>>>,
    /// Lines fitted through the images.
    pub fitted: BTreeMap<String, Line>,
    /// Lines from the quintic relations.
    pub algebraic: BTreeMap<String, Line>,
    /// M with M p_i = lambda_i q_i.
    pub m: QMatrix,
    pub lambdas: Vec<Q>,
}

/// Images under psi of random rational points on Q_alpha.
pub fn images_of<R: Rng>(c: &Cremona, alpha: &str, count: usize, rng: &mut R) -> Result<Vec<Vec<Q>>> {
    let class = named_class(&format!("Q_{alpha}"), Space::Y)?;
    let f = c.f(alpha);
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > 20 * count {
            return Err(PolyError::Resample(tries));
        }
        let pts = points_on_quartic(f, &class, &c.config, 1, rng)?;
        match c.psi_eval(&pts[0]) {
            Ok(y) => out.push(y),
            Err(PolyError::Indeterminate) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

pub fn algebraic_lines(c: &Cremona) -> Result<BTreeMap<String, Line>> {
    LINE_QUARTICS
        .iter()
        .map(|a| {
            let [l1, l2] = c.algebraic_line(a)?;
            Ok((a.to_string(), Line::from_equations(&l1, &l2)?))
        })
        .collect()
}

/// Solve M p_i = lambda_i q_i exactly; the kernel must be one-dimensional
/// and M invertible.
pub fn projective_equivalence(p: &PointConfig, q: &PointConfig) -> Result<(QMatrix, Vec<Q>)> {
    let n = p.len();
    let ncols = 16 + n;
    let mut rows = Vec::new();
    for i in 0..n {
        for r in 0..4 {
            let mut row = vec![Q::zero(); ncols];
            for c in 0..4 {
                row[4 * r + c] = p.point(i)[c].clone();
            }
            row[16 + i] = -q.point(i)[r].clone();
            rows.push(row);
        }
    }
    let ker = QMatrix::from_rows(&rows).kernel();
    let [v] = ker.as_slice() else {
        return Err(PolyError::NoEquivalence(format!("solution space has dimension {}", ker.len())));
    };
    let m = QMatrix::from_fn(4, 4, |r, c| v[4 * r + c].clone());
    let lambdas = v[16..].to_vec();
    if m.determinant().is_zero() || lambdas.iter().any(Zero::is_zero) {
        return Err(PolyError::NoEquivalence("the solution is singular".into()));
    }
    Ok((m, lambdas))
}

pub fn dual_config<R: Rng>(c: &Cremona, samples: usize, rng: &mut R) -> Result<DualConfig> {
    let mut images = BTreeMap::new();
    let mut q: Vec<Option<Vec<Q>>> = vec![None; 6];
    for (alpha, idx, want) in POINT_QUARTICS {
        let imgs = images_of(c, alpha, samples, rng)?;
        let w: Vec<Q> = want.iter().map(|&x| Q::from_integer(x.into())).collect();
        if imgs.iter().any(|y| !same_point(y, &w)) {
            return Err(PolyError::Degenerate(format!("Q_{alpha} is not contracted to {want:?}")));
        }
        q[idx] = Some(w);
        images.insert(alpha.to_string(), imgs);
    }
    let mut fitted = BTreeMap::new();
    for alpha in LINE_QUARTICS {
        let imgs = images_of(c, alpha, samples.max(2), rng)?;
        fitted.insert(alpha.to_string(), Line::fit(&imgs)?);
        images.insert(alpha.to_string(), imgs);
    }
    let algebraic = algebraic_lines(c)?;
    for (idx, [a, b, third]) in TRIPLES {
        let x = fitted[a]
            .meet(&fitted[b])
            .ok_or_else(|| PolyError::Degenerate(format!("l_{a} and l_{b} do not meet in a point")))?;
        if !fitted[third].contains(&x) {
            return Err(PolyError::Degenerate(format!("l_{third} misses l_{a} and l_{b}")));
        }
        q[idx] = Some(x);
    }
    let q = PointConfig::new(
        &format!("{}-dual", c.config.name),
        q.into_iter().map(|x| normalize_point(&x.expect("all six points set"))).collect(),
    );
    let (m, lambdas) = projective_equivalence(&c.config, &q)?;
    Ok(DualConfig { q, images, fitted, algebraic, m, lambdas })
}

/// Whether M p_i is a nonzero multiple of q_i for every i.
pub fn sends(m: &QMatrix, p: &PointConfig, q: &PointConfig) -> bool {
    (0..p.len()).all(|i| match m.apply(p.point(i)) {
        Ok(v) => !v.iter().all(Zero::is_zero) && same_point(&v, q.point(i)),
        Err(_) => false,
    })
}

