//! Expression trees over polynomials, evaluated exactly at rational points
//! or expanded, and polynomial identity checks up to a global scalar.

use std::sync::{Arc, OnceLock};

use cremona_core::rational::Q;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{PolyError, Result};
use crate::jacobian::{det4, det_q};
use crate::multipoly::{eval_integer_form, vars_named, Exp, MultiPoly, Vars};

/// A polynomial with its integer form and derivatives cached.
pub struct PreparedPoly {
    pub poly: MultiPoly,
    nums: Vec<(Exp, BigInt)>,
    den: BigInt,
    degree: u32,
    grad: OnceLock<Vec<Arc<PreparedPoly>>>,
}

impl PreparedPoly {
    pub fn new(poly: MultiPoly) -> Arc<PreparedPoly> {
        let (nums, den) = poly.integer_form();
        let degree = poly.degree().unwrap_or(0);
        Arc::new(PreparedPoly { poly, nums, den, degree, grad: OnceLock::new() })
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        if self.nums.is_empty() {
            return Q::zero();
        }
        eval_integer_form(&self.nums, &self.den, self.degree, point)
    }

    pub fn gradient(&self) -> &[Arc<PreparedPoly>] {
        self.grad.get_or_init(|| self.poly.gradient().into_iter().map(PreparedPoly::new).collect())
    }
}

#[derive(Clone)]
pub enum Expr {
    Const(Q),
    Poly(Arc<PreparedPoly>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Scale(Q, Box<Expr>),
    /// Outer expression in as many variables as there are inner expressions.
    Compose(Box<Expr>, Vec<Expr>),
    JacobianDet(Vec<Expr>),
}

impl Expr {
    pub fn poly(p: &MultiPoly) -> Expr {
        Expr::Poly(PreparedPoly::new(p.clone()))
    }

    pub fn product_of(ps: &[&MultiPoly]) -> Expr {
        Expr::Product(ps.iter().map(|p| Expr::poly(p)).collect())
    }

    pub fn pow(self, k: u32) -> Expr {
        Expr::Power(Box::new(self), k)
    }

    pub fn compose(self, inner: Vec<Expr>) -> Expr {
        Expr::Compose(Box::new(self), inner)
    }

    /// Upper bound on the total degree.
    pub fn degree(&self) -> u32 {
        match self {
            Expr::Const(_) => 0,
            Expr::Poly(p) => p.degree,
            Expr::Sum(v) => v.iter().map(Expr::degree).max().unwrap_or(0),
            Expr::Product(v) => v.iter().map(Expr::degree).sum(),
            Expr::Power(e, k) => e.degree() * k,
            Expr::Scale(_, e) => e.degree(),
            Expr::Compose(o, v) => o.degree() * v.iter().map(Expr::degree).max().unwrap_or(0),
            Expr::JacobianDet(v) => v.iter().map(|e| e.degree().saturating_sub(1)).sum(),
        }
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        Ok(match self {
            Expr::Const(c) => c.clone(),
            Expr::Poly(p) => p.eval(point),
            Expr::Sum(v) => {
                let mut acc = Q::zero();
                for e in v {
                    acc += e.eval(point)?;
                }
                acc
            }
            Expr::Product(v) => {
                let mut acc = Q::one();
                for e in v {
                    acc *= e.eval(point)?;
                    if acc.is_zero() {
                        break;
                    }
                }
                acc
            }
            Expr::Power(e, k) => num_traits::pow(e.eval(point)?, *k as usize),
            Expr::Scale(s, e) => s * e.eval(point)?,
            Expr::Compose(o, v) => {
                let inner = v.iter().map(|e| e.eval(point)).collect::<Result<Vec<_>>>()?;
                o.eval(&inner)?
            }
            Expr::JacobianDet(v) => {
                let rows = v.iter().map(|e| Ok(e.eval_grad(point)?.1)).collect::<Result<Vec<_>>>()?;
                det_q(&rows)
            }
        })
    }

    /// Value and gradient at a point.
    pub fn eval_grad(&self, point: &[Q]) -> Result<(Q, Vec<Q>)> {
        let n = point.len();
        let zeros = || vec![Q::zero(); n];
        Ok(match self {
            Expr::Const(c) => (c.clone(), zeros()),
            Expr::Poly(p) => (p.eval(point), p.gradient().iter().map(|d| d.eval(point)).collect()),
            Expr::Sum(v) => {
                let mut val = Q::zero();
                let mut grad = zeros();
                for e in v {
                    let (a, g) = e.eval_grad(point)?;
                    val += a;
                    for (x, y) in grad.iter_mut().zip(g) {
                        *x += y;
                    }
                }
                (val, grad)
            }
            Expr::Product(v) => {
                let mut val = Q::one();
                let mut grad = zeros();
                for e in v {
                    let (a, g) = e.eval_grad(point)?;
                    for (x, y) in grad.iter_mut().zip(&g) {
                        *x = &*x * &a + &val * y;
                    }
                    val *= a;
                }
                (val, grad)
            }
            Expr::Power(e, k) => {
                if *k == 0 {
                    return Ok((Q::one(), zeros()));
                }
                let (a, g) = e.eval_grad(point)?;
                let lower = num_traits::pow(a.clone(), (*k - 1) as usize);
                let f = Q::from_integer(BigInt::from(*k)) * &lower;
                (lower * a, g.iter().map(|y| &f * y).collect())
            }
            Expr::Scale(s, e) => {
                let (a, g) = e.eval_grad(point)?;
                (s * a, g.iter().map(|y| s * y).collect())
            }
            Expr::Compose(o, v) => {
                let inner = v.iter().map(|e| e.eval_grad(point)).collect::<Result<Vec<_>>>()?;
                let vals: Vec<Q> = inner.iter().map(|(a, _)| a.clone()).collect();
                let (val, og) = o.eval_grad(&vals)?;
                let mut grad = zeros();
                for (dy, (_, g)) in og.iter().zip(&inner) {
                    for (x, y) in grad.iter_mut().zip(g) {
                        *x += dy * y;
                    }
                }
                (val, grad)
            }
            Expr::JacobianDet(_) => {
                return Err(PolyError::Degenerate("gradient of a Jacobian determinant".into()));
            }
        })
    }

    /// Full expansion in the given ring, refused above `cap` monomials.
    pub fn expand(&self, vars: &Vars, cap: usize) -> Result<MultiPoly> {
        let estimate = dense_count(vars.len(), self.degree());
        if estimate > cap {
            return Err(PolyError::ExpansionCap { cap, estimate });
        }
        self.expand_in(vars)
    }

    fn expand_in(&self, vars: &Vars) -> Result<MultiPoly> {
        Ok(match self {
            Expr::Const(c) => MultiPoly::constant(vars.clone(), c.clone()),
            Expr::Poly(p) => p.poly.rename(vars.clone()),
            Expr::Sum(v) => {
                let mut acc = MultiPoly::zero(vars.clone());
                for e in v {
                    acc = acc.add(&e.expand_in(vars)?);
                }
                acc
            }
            Expr::Product(v) => {
                let mut acc = MultiPoly::constant(vars.clone(), Q::one());
                for e in v {
                    acc = acc.mul(&e.expand_in(vars)?);
                }
                acc
            }
            Expr::Power(e, k) => e.expand_in(vars)?.pow(*k),
            Expr::Scale(s, e) => e.expand_in(vars)?.scale(s),
            Expr::Compose(o, v) => {
                let outer = o.expand_in(&anonymous_vars(v.len()))?;
                let inner = v.iter().map(|e| e.expand_in(vars)).collect::<Result<Vec<_>>>()?;
                outer.compose(&inner)
            }
            Expr::JacobianDet(v) => {
                let rows = v.iter().map(|e| Ok(e.expand_in(vars)?.gradient())).collect::<Result<Vec<_>>>()?;
                if rows.len() != 4 {
                    return Err(PolyError::Degenerate("expanded Jacobians are 4x4".into()));
                }
                det4(&rows)
            }
        })
    }
}

fn anonymous_vars(n: usize) -> Vars {
    let names: Vec<String> = (0..n).map(|i| format!("y{i}")).collect();
    vars_named(&names.iter().map(String::as_str).collect::<Vec<_>>())
}

/// Number of monomials of degree d in n variables.
pub fn dense_count(n: usize, d: u32) -> usize {
    let (n, d) = (n as u128, d as u128);
    let mut c: u128 = 1;
    for i in 1..n {
        c = c * (d + i) / i;
    }
    c.min(usize::MAX as u128) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sample,
    Expand,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "sample" => Ok(Mode::Sample),
            "expand" => Ok(Mode::Expand),
            _ => Err(PolyError::Parse(format!("unknown mode {s}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub mode: Mode,
    pub samples: usize,
    pub cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { mode: Mode::Sample, samples: 40, cap: 200_000 }
    }
}

/// Half-width of the sampling box.
pub const SAMPLE_RANGE: i64 = 10_000;

#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub holds: bool,
    pub scalar: Option<Q>,
    pub samples: usize,
    pub resampled: usize,
    pub degree: u32,
    /// Per-sample false-accept bound degree / (2 * SAMPLE_RANGE).
    pub bound: Q,
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Q> {
    (0..n).map(|_| Q::from_integer(BigInt::from(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)))).collect()
}

/// lhs = lambda * rhs for one nonzero rational lambda.
pub fn identity_check<R: Rng>(lhs: &Expr, rhs: &Expr, nvars: usize, opts: CheckOptions, rng: &mut R) -> Result<IdentityOutcome> {
    let degree = lhs.degree().max(rhs.degree());
    let bound = Q::new(BigInt::from(degree), BigInt::from(2 * SAMPLE_RANGE));
    match opts.mode {
        Mode::Expand => {
            let vars = anonymous_vars(nvars);
            let l = lhs.expand(&vars, opts.cap)?;
            let r = rhs.expand(&vars, opts.cap)?;
            let scalar = if l.is_zero() || r.is_zero() { None } else { l.ratio_to(&r) };
            Ok(IdentityOutcome { holds: scalar.is_some(), scalar, samples: 0, resampled: 0, degree, bound: Q::zero() })
        }
        Mode::Sample => {
            let mut scalar: Option<Q> = None;
            let mut used = 0;
            let mut resampled = 0;
            while used < opts.samples {
                if resampled > 4 * opts.samples {
                    return Err(PolyError::Resample(resampled));
                }
                let batch: Vec<Vec<Q>> = (0..opts.samples - used).map(|_| random_point(rng, nvars)).collect();
                let values = batch
                    .par_iter()
                    .map(|p| Ok((lhs.eval(p)?, rhs.eval(p)?)))
                    .collect::<Result<Vec<_>>>()?;
                for (a, b) in values {
                    match (a.is_zero(), b.is_zero()) {
                        (true, true) => resampled += 1,
                        (false, false) => {
                            let r = a / b;
                            match &scalar {
                                None => scalar = Some(r),
                                Some(s) if *s == r => {}
                                Some(_) => {
                                    return Ok(IdentityOutcome { holds: false, scalar, samples: used + 1, resampled, degree, bound });
                                }
                            }
                            used += 1;
                        }
                        _ => return Ok(IdentityOutcome { holds: false, scalar, samples: used + 1, resampled, degree, bound }),
                    }
                }
            }
            Ok(IdentityOutcome { holds: true, scalar, samples: used, resampled, degree, bound })
        }
    }
}
