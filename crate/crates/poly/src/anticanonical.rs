//! The anticanonical quartic S' on placement A.

use cremona_core::divisor::{named_class, Space};
use cremona_core::rational::Q;
use cremona_core::QMatrix;
use num_traits::Zero;
use rand::Rng;

use crate::config::PointConfig;
use crate::cremona::combine;
use crate::displays::{anticanonical_basis, anticanonical_coefficients, m_p0};
use crate::error::Result;
use crate::linsys::linear_system_of_class;
use crate::multipoly::{curve_vars, MultiPoly};
use crate::points::points_through_node;

#[derive(Clone, Debug)]
pub struct AnticanonicalOutcome {
    pub dimension: usize,
    pub section: Option<MultiPoly>,
    /// The section is proportional to sum g_i f_i.
    pub matches_display: bool,
    pub coefficients: Vec<Q>,
    pub m_rank: usize,
    /// M_{p_0} annihilates (g_1, ..., g_5).
    pub m_kills_g: bool,
    /// The rows obtained by restricting to the lines p_0p_1, p_0p_2 span the same space as M_{p_0}.
    pub rows_match: bool,
    pub gradient_zero_at_points: bool,
    pub nonsingular_samples: usize,
    pub samples: usize,
}

impl AnticanonicalOutcome {
    pub fn passed(&self) -> bool {
        self.dimension == 1
            && self.matches_display
            && self.m_rank == 4
            && self.m_kills_g
            && self.rows_match
            && self.gradient_zero_at_points
            && self.nonsingular_samples == self.samples
    }
}

/// Coefficients of t^2, t^3, t^4 of sum c_i f_i on [1 : At : Bt : Ct] and
/// [t : (A-1)t + 1 : Bt : Ct], as rows in (c_1, ..., c_5).
pub fn line_rows(config: &PointConfig) -> Result<Vec<Vec<Q>>> {
    let basis = anticanonical_basis(config)?;
    let (a, b, c) = config.abc()?;
    let lin = |x: Q, y: Q| MultiPoly::linear(curve_vars(), &[x, y]);
    let (z, o) = (Q::zero(), Q::from_integer(1.into()));
    let first = [lin(o.clone(), z.clone()), lin(z.clone(), a.clone()), lin(z.clone(), b.clone()), lin(z.clone(), c.clone())];
    let second = [lin(z.clone(), o.clone()), lin(o.clone(), &a - &o), lin(z.clone(), b), lin(z, c)];
    let mut rows = Vec::new();
    for sub in [first, second] {
        let restricted: Vec<MultiPoly> = basis.iter().map(|f| f.compose(&sub)).collect();
        for k in 2..=4 {
            rows.push(restricted.iter().map(|r| r.coeff(&[4 - k, k])).collect());
        }
    }
    Ok(rows)
}

pub fn check_anticanonical<R: Rng>(config: &PointConfig, samples: usize, rng: &mut R) -> Result<AnticanonicalOutcome> {
    let system = linear_system_of_class(&named_class("-K_X", Space::X)?, config)?;
    let coefficients = anticanonical_coefficients(config)?;
    let f = combine(&anticanonical_basis(config)?, &coefficients);
    let section = system.basis.first().cloned();
    let matches_display = system.dimension() == 1 && section.as_ref().is_some_and(|s| s.proportional(&f));
    let m = m_p0(config)?;
    let mm = QMatrix::from_rows(&m);
    let m_rank = mm.rank();
    let m_kills_g = mm.apply(&coefficients)?.iter().all(Zero::is_zero);
    let derived = QMatrix::from_rows(&line_rows(config)?);
    let stacked = QMatrix::from_rows(&[m.clone(), line_rows(config)?].concat());
    let rows_match = derived.rank() == m_rank && stacked.rank() == m_rank;
    let grad = f.gradient();
    let gradient_zero_at_points = (0..config.len()).all(|i| grad.iter().all(|g| g.eval(config.point(i)).is_zero()));
    let pts = points_through_node(&f, config, 0, (1, 2), samples, rng)?;
    let nonsingular_samples = pts.iter().filter(|p| grad.iter().any(|g| !g.eval(p).is_zero())).count();
    Ok(AnticanonicalOutcome {
        dimension: system.dimension(),
        section,
        matches_display,
        coefficients,
        m_rank,
        m_kills_g,
        rows_match,
        gradient_zero_at_points,
        nonsingular_samples,
        samples: pts.len(),
    })
}
