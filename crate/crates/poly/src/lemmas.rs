//! Identities for Jacobians of homogeneous polynomials, checked on random
//! instances.

use cremona_core::rational::Q;
use num_traits::Zero;
use rand::Rng;

use crate::expr::random_point;
use crate::jacobian::{det4, det_q, jacobian_det, quotient_gradient};
use crate::multipoly::{monomials, p3_vars, MultiPoly};

/// A random homogeneous form of degree d in x_0..x_3 with at most `terms`
/// terms and small integer coefficients; never zero.
pub fn random_form<R: Rng>(rng: &mut R, d: u32, terms: usize) -> MultiPoly {
    let monos = monomials(4, d);
    loop {
        let t = (0..terms).map(|_| {
            let e = monos[rng.gen_range(0..monos.len())];
            (e, Q::from_integer(rng.gen_range(-9i64..=9).into()))
        });
        let f = MultiPoly::from_terms(p3_vars(), t);
        if !f.is_zero() {
            return f;
        }
    }
}

/// det of the matrix with rows (h_j), (h_j)_{x_1}, (h_j)_{x_2}, (h_j)_{x_3}.
pub fn bordered_det(h: &[MultiPoly]) -> MultiPoly {
    let mut rows = vec![h.to_vec()];
    for k in 1..4 {
        rows.push(h.iter().map(|f| f.derivative(k)).collect());
    }
    det4(&rows)
}

/// (x_0 / d) det J(h) == bordered determinant, exactly.
pub fn fake_jac_holds(h: &[MultiPoly], d: u32) -> bool {
    let x0 = MultiPoly::var(p3_vars(), 0);
    bordered_det(h).scale(&Q::from_integer(d.into())) == x0.mul(&jacobian_det(h))
}

/// sum x_i (h)_{x_i} == d h.
pub fn euler_holds(h: &MultiPoly, d: u32) -> bool {
    let lhs = (0..4).fold(MultiPoly::zero(p3_vars()), |acc, i| acc.add(&MultiPoly::var(p3_vars(), i).mul(&h.derivative(i))));
    lhs == h.scale(&Q::from_integer(d.into()))
}

/// With h_i = g f_i for i < m, g^{m-1} divides det J(h).
pub fn det_n_holds(g: &MultiPoly, h: &[MultiPoly], m: usize) -> bool {
    let hs: Vec<MultiPoly> = h.iter().enumerate().map(|(i, f)| if i < m { g.mul(f) } else { f.clone() }).collect();
    let det = jacobian_det(&hs);
    det.div_exact(&g.pow(m as u32 - 1)).is_some()
}

/// Jacobian in (x_1, x_2, x_3) of three ratios h_n / h_d at a point.
fn ratio_jacobian(h: &[MultiPoly], ratios: [(usize, usize); 3], x: &[Q]) -> Option<Q> {
    let vals: Vec<(Q, Vec<Q>)> = h.iter().map(|f| (f.eval(x), f.gradient().iter().map(|g| g.eval(x)).collect())).collect();
    let mut rows = Vec::new();
    for (n, d) in ratios {
        if vals[d].0.is_zero() {
            return None;
        }
        rows.push(quotient_gradient(&vals[n].0, &vals[n].1, &vals[d].0, &vals[d].1)[1..].to_vec());
    }
    Some(det_q(&rows))
}

/// Both quotient formulas at a point: det J(h_0/h_1, h_2/h_0, h_3/h_0) =
/// -x_0 det J(h) / ((h_0 h_1)^2 d) and det J(h_1/h_0, h_2/h_0, h_3/h_2) =
/// x_0 det J(h) / (h_0^3 h_2 d). `None` if a denominator vanishes.
pub fn images_jac_holds(h: &[MultiPoly], d: u32, x: &[Q]) -> Option<(bool, bool)> {
    let full: Vec<Vec<Q>> = h.iter().map(|f| f.gradient().iter().map(|g| g.eval(x)).collect()).collect();
    let dj = det_q(&full);
    let hv: Vec<Q> = h.iter().map(|f| f.eval(x)).collect();
    let dq = Q::from_integer(d.into());
    let first = ratio_jacobian(h, [(0, 1), (2, 0), (3, 0)], x)?;
    let second = ratio_jacobian(h, [(1, 0), (2, 0), (3, 2)], x)?;
    let h01 = &hv[0] * &hv[1];
    let want1 = -(&x[0] * &dj) / (&h01 * &h01 * &dq);
    let want2 = &x[0] * &dj / (&hv[0] * &hv[0] * &hv[0] * &hv[2] * &dq);
    Some((first == want1, second == want2))
}

/// A random point where none of the h vanish.
pub fn generic_point<R: Rng>(rng: &mut R, h: &[MultiPoly]) -> Vec<Q> {
    loop {
        let x = random_point(rng, 4);
        if h.iter().all(|f| !f.eval(&x).is_zero()) {
            return x;
        }
    }
}
