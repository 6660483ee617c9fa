//! The degree-13 sections s_i built from planes and quartics, their scalar
//! normalization, and the map psi = [s_0 : s_1 : s_2 : s_3].

use std::collections::BTreeMap;

use cremona_core::divisor::{named_class, plane_class, DivisorClass, Generator, Space};
use cremona_core::rational::Q;
use num_traits::{One, Zero};

use crate::config::PointConfig;
use crate::error::{PolyError, Result};
use crate::geometry::plane_through;
use crate::linsys::span_coefficients;
use crate::multipoly::{p3_vars, MultiPoly};
use crate::quartics::all_quartics;

/// A product p_{ijk} f_alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quintic {
    pub plane: [u8; 3],
    pub quartic: &'static str,
}

const fn qn(plane: [u8; 3], quartic: &'static str) -> Quintic {
    Quintic { plane, quartic }
}

/// One row of the quintic pencil table: the class, and each listed
/// product with the exceptional markers completing it to that class.
pub struct PencilRow {
    pub class: &'static str,
    pub entries: &'static [(Quintic, &'static [&'static str])],
}

pub const PENCIL_TABLE: [PencilRow; 6] = [
    PencilRow {
        class: "D_05",
        entries: &[
            (qn([0, 3, 4], "0"), &["E15", "E25"]),
            (qn([0, 4, 5], "24"), &["E4"]),
            (qn([0, 3, 5], "13"), &["E3"]),
        ],
    },
    PencilRow {
        class: "D_13",
        entries: &[
            (qn([0, 3, 4], "3"), &["E12", "E15"]),
            (qn([0, 1, 3], "05"), &["E0"]),
            (qn([1, 3, 4], "24"), &["E4"]),
        ],
    },
    PencilRow {
        class: "D_24",
        entries: &[
            (qn([0, 3, 4], "4"), &["E12", "E25"]),
            (qn([2, 3, 4], "13"), &["E3"]),
            (qn([0, 2, 4], "05"), &["E0"]),
        ],
    },
    PencilRow {
        class: "F_15",
        entries: &[
            (qn([1, 3, 4], "0"), &["E25"]),
            (qn([0, 4, 5], "3"), &["E12"]),
            (qn([0, 1, 5], "25"), &["E0"]),
            (qn([1, 3, 5], "12"), &["E3"]),
        ],
    },
    PencilRow {
        class: "F_25",
        entries: &[
            (qn([2, 3, 4], "0"), &["E15"]),
            (qn([0, 3, 5], "4"), &["E12"]),
            (qn([0, 2, 5], "15"), &["E0"]),
            (qn([2, 4, 5], "12"), &["E4"]),
        ],
    },
    PencilRow {
        class: "F_12",
        entries: &[
            (qn([0, 2, 4], "3"), &["E15"]),
            (qn([0, 1, 3], "4"), &["E25"]),
            (qn([1, 2, 3], "15"), &["E3"]),
            (qn([1, 2, 4], "25"), &["E4"]),
        ],
    },
];

/// Divisor class of a listed product plus its markers.
pub fn pencil_entry_class(entry: &(Quintic, &[&str])) -> Result<DivisorClass> {
    let (q, markers) = entry;
    let [i, j, k] = q.plane;
    let mut c = plane_class(Space::Y, i, j, k)?.add(&named_class(&format!("Q_{}", q.quartic), Space::Y)?);
    for m in *markers {
        c = c.add(&DivisorClass::generator(Space::Y, Generator::from_label(m.trim_start_matches('E'))?)?);
    }
    Ok(c)
}

/// A quintic identity target = c_0 basis_0 + c_1 basis_1 with solved scalars.
#[derive(Clone, Debug)]
pub struct Relation {
    pub target: Quintic,
    pub basis: [Quintic; 2],
    pub coeffs: [Q; 2],
}

/// The sections after normalization, with the planes and quartics rescaled
/// so that s_0 = s_1 - s'_1 = s_2 - s'_2 = s_3 - s'_3.
#[derive(Clone, Debug)]
pub struct Cremona {
    pub config: PointConfig,
    pub quartics: BTreeMap<String, MultiPoly>,
    pub planes: BTreeMap<[u8; 3], MultiPoly>,
    /// Scalars (a, b, c, d) with s''_0 = d s'_1 + c s_2 and s''_3 = a s'_3 + b s_1.
    pub abcd: [Q; 4],
    pub relations: Vec<Relation>,
    pub s: [MultiPoly; 4],
    pub s_prime: [MultiPoly; 4],
    pub s_second: [MultiPoly; 2],
}

fn key(mut p: [u8; 3]) -> [u8; 3] {
    p.sort_unstable();
    p
}

impl Cremona {
    pub fn new(config: &PointConfig) -> Result<Cremona> {
        config.check_general_position()?;
        let quartics = all_quartics(config)?;
        let mut planes = BTreeMap::new();
        for i in 0..6u8 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    let p = plane_through(config.point(i as usize), config.point(j as usize), config.point(k as usize))?;
                    planes.insert([i, j, k], p);
                }
            }
        }
        let mut c = Cremona {
            config: config.clone(),
            quartics,
            planes,
            abcd: [Q::zero(), Q::zero(), Q::zero(), Q::zero()],
            relations: Vec::new(),
            s: std::array::from_fn(|_| MultiPoly::zero(p3_vars())),
            s_prime: std::array::from_fn(|_| MultiPoly::zero(p3_vars())),
            s_second: std::array::from_fn(|_| MultiPoly::zero(p3_vars())),
        };
        // p034 f0 = p045 f24 - p035 f13, p034 f4 = p234 f13 - p024 f05,
        // p034 f3 = p013 f05 - p134 f24: absorb the scalars into the planes.
        let absorbed = [
            (qn([0, 3, 4], "0"), qn([0, 4, 5], "24"), qn([0, 3, 5], "13")),
            (qn([0, 3, 4], "4"), qn([2, 3, 4], "13"), qn([0, 2, 4], "05")),
            (qn([0, 3, 4], "3"), qn([0, 1, 3], "05"), qn([1, 3, 4], "24")),
        ];
        for (t, b0, b1) in absorbed {
            let r = c.solve(t, [b0, b1])?;
            c.rescale_plane(b0.plane, &r.coeffs[0]);
            c.rescale_plane(b1.plane, &-r.coeffs[1].clone());
        }
        for (t, b0, b1) in absorbed {
            let r = c.solve(t, [b0, b1])?;
            debug_assert!(r.coeffs[0].is_one() && (-r.coeffs[1].clone()).is_one());
            c.relations.push(r);
        }
        // p245 f12 = d p035 f4 + c p234 f0 and p135 f12 = a p134 f0 + b p045 f3.
        let r4 = c.solve(qn([2, 4, 5], "12"), [qn([0, 3, 5], "4"), qn([2, 3, 4], "0")])?;
        let r5 = c.solve(qn([1, 3, 5], "12"), [qn([1, 3, 4], "0"), qn([0, 4, 5], "3")])?;
        c.abcd = [r5.coeffs[0].clone(), r5.coeffs[1].clone(), r4.coeffs[1].clone(), r4.coeffs[0].clone()];
        c.relations.push(r4);
        c.relations.push(r5);
        for (t, b) in [
            (qn([0, 1, 5], "25"), [qn([1, 3, 4], "0"), qn([0, 4, 5], "3")]),
            (qn([0, 2, 5], "15"), [qn([2, 3, 4], "0"), qn([0, 3, 5], "4")]),
            (qn([1, 2, 3], "15"), [qn([0, 2, 4], "3"), qn([0, 1, 3], "4")]),
            (qn([1, 2, 4], "25"), [qn([0, 2, 4], "3"), qn([0, 1, 3], "4")]),
        ] {
            let r = c.solve(t, b)?;
            c.relations.push(r);
        }
        c.s = [
            c.product([0, 3, 4], &["0", "3", "4"]),
            c.product([0, 4, 5], &["3", "4", "24"]),
            c.product([2, 3, 4], &["0", "3", "13"]),
            c.product([0, 1, 3], &["0", "4", "05"]),
        ];
        c.s_prime = [
            c.s[0].clone(),
            c.product([0, 3, 5], &["3", "4", "13"]),
            c.product([0, 2, 4], &["0", "3", "05"]),
            c.product([1, 3, 4], &["0", "4", "24"]),
        ];
        c.s_second = [c.product([2, 4, 5], &["12", "3", "13"]), c.product([1, 3, 5], &["12", "4", "24"])];
        Ok(c)
    }

    pub fn plane(&self, p: [u8; 3]) -> &MultiPoly {
        &self.planes[&key(p)]
    }

    pub fn f(&self, alpha: &str) -> &MultiPoly {
        &self.quartics[alpha]
    }

    fn rescale_plane(&mut self, p: [u8; 3], s: &Q) {
        let v = self.planes[&key(p)].scale(s);
        self.planes.insert(key(p), v);
    }

    pub fn quintic(&self, q: Quintic) -> MultiPoly {
        self.plane(q.plane).mul(self.f(q.quartic))
    }

    pub fn product(&self, plane: [u8; 3], quartics: &[&str]) -> MultiPoly {
        quartics.iter().fold(self.plane(plane).clone(), |acc, a| acc.mul(self.f(a)))
    }

    fn solve(&self, target: Quintic, basis: [Quintic; 2]) -> Result<Relation> {
        let t = self.quintic(target);
        let b = [self.quintic(basis[0]), self.quintic(basis[1])];
        let coeffs = span_coefficients(&t, &b).ok_or_else(|| {
            PolyError::Normalization(format!(
                "p{:?} f{} is not in the span of p{:?} f{}, p{:?} f{}",
                target.plane, target.quartic, basis[0].plane, basis[0].quartic, basis[1].plane, basis[1].quartic
            ))
        })?;
        Ok(Relation { target, basis, coeffs: [coeffs[0].clone(), coeffs[1].clone()] })
    }

    pub fn relation(&self, target: Quintic) -> Option<&Relation> {
        self.relations.iter().find(|r| r.target == target)
    }

    /// Two linear forms in the target coordinates cutting out the line l_alpha,
    /// read off from the normalization and the quintic relations.
    pub fn algebraic_line(&self, alpha: &str) -> Result<[Vec<Q>; 2]> {
        let (z, o) = (Q::zero(), Q::one());
        // y-coordinates of s'_1, s'_2, s'_3 (s'_i = s_i - s_0).
        let sp = |i: usize, w: &Q| -> Vec<Q> {
            let mut v = vec![-w.clone(), z.clone(), z.clone(), z.clone()];
            v[i] = w.clone();
            v
        };
        let sy = |i: usize, w: &Q| -> Vec<Q> {
            let mut v = vec![z.clone(); 4];
            v[i] = w.clone();
            v
        };
        let add = |a: Vec<Q>, b: Vec<Q>| -> Vec<Q> { a.into_iter().zip(b).map(|(x, y)| x + y).collect() };
        let coeffs = |t: Quintic| -> Result<[Q; 2]> {
            self.relation(t)
                .map(|r| r.coeffs.clone())
                .ok_or_else(|| PolyError::Normalization(format!("missing relation for {t:?}")))
        };
        Ok(match alpha {
            "05" => [sp(2, &o), sy(3, &o)],
            "13" => [sp(1, &o), sy(2, &o)],
            "24" => [sy(1, &o), sp(3, &o)],
            "12" => {
                let [a, b, c, d] = &self.abcd;
                [add(sp(1, d), sy(2, c)), add(sp(3, a), sy(1, b))]
            }
            "15" => {
                // p025 f15 = e p234 f0 + e' p035 f4, times f3 f13.
                let [e, e2] = coeffs(qn([0, 2, 5], "15"))?;
                // p123 f15 = g p024 f3 + g' p013 f4, times f0 f05.
                let [g, g2] = coeffs(qn([1, 2, 3], "15"))?;
                [add(sy(2, &e), sp(1, &e2)), add(sp(2, &g), sy(3, &g2))]
            }
            "25" => {
                // p015 f25 = h p134 f0 + h' p045 f3, times f4 f24.
                let [h, h2] = coeffs(qn([0, 1, 5], "25"))?;
                // p124 f25 = k p024 f3 + k' p013 f4, times f0 f05.
                let [k, k2] = coeffs(qn([1, 2, 4], "25"))?;
                [add(sp(3, &h), sy(1, &h2)), add(sp(2, &k), sy(3, &k2))]
            }
            _ => return Err(PolyError::Degenerate(format!("no line l_{alpha}"))),
        })
    }

    /// psi at a point; errors on the common zero locus of the s_i.
    pub fn psi_eval(&self, point: &[Q]) -> Result<Vec<Q>> {
        let v: Vec<Q> = self.s.iter().map(|s| s.eval(point)).collect();
        if v.iter().all(Zero::is_zero) {
            return Err(PolyError::Indeterminate);
        }
        Ok(crate::geometry::normalize_point(&v))
    }
}

/// Linear combination of the sections with the given target coefficients.
pub fn combine(sections: &[MultiPoly], coeffs: &[Q]) -> MultiPoly {
    sections
        .iter()
        .zip(coeffs)
        .fold(MultiPoly::zero(p3_vars()), |acc, (s, c)| acc.add(&s.scale(c)))
}
