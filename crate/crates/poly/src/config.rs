//! Six-point configurations in P^3 and the fixture placements.

use std::collections::BTreeMap;

use cremona_core::rational::{fmt_q, parse_q, q, Q};
use cremona_core::QMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    pub name: String,
    pub points: Vec<Vec<Q>>,
    pub params: BTreeMap<String, Q>,
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    #[serde(default)]
    name: String,
    points: Vec<Vec<String>>,
    #[serde(default)]
    params: BTreeMap<String, String>,
}

impl PointConfig {
    pub fn new(name: &str, points: Vec<Vec<Q>>) -> PointConfig {
        PointConfig { name: name.to_string(), points, params: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[Q] {
        &self.points[i]
    }

    pub fn param(&self, name: &str) -> Option<&Q> {
        self.params.get(name)
    }

    /// Parameters (a, b, c), or (A, B, C) for the anticanonical placement.
    pub fn abc(&self) -> Result<(Q, Q, Q)> {
        let get = |k: &str| self.params.get(k).or_else(|| self.params.get(&k.to_uppercase())).cloned();
        match (get("a"), get("b"), get("c")) {
            (Some(a), Some(b), Some(c)) => Ok((a, b, c)),
            _ => Err(PolyError::Degenerate("missing parameters a, b, c".into())),
        }
    }

    /// Primitive integer representative of point `i`.
    pub fn integer_point(&self, i: usize) -> Vec<BigInt> {
        integer_vector(&self.points[i])
    }

    /// Checks the points are pairwise distinct and every four of them span P^3.
    pub fn check_general_position(&self) -> Result<()> {
        let n = self.points.len();
        for p in &self.points {
            if p.len() != 4 || p.iter().all(Zero::is_zero) {
                return Err(PolyError::Degenerate("point is not in P^3".into()));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if QMatrix::from_rows(&[self.points[i].clone(), self.points[j].clone()]).rank() < 2 {
                    return Err(PolyError::Degenerate(format!("p{i} = p{j}")));
                }
            }
        }
        for idx in quads(n) {
            let m = QMatrix::from_rows(&idx.iter().map(|&i| self.points[i].clone()).collect::<Vec<_>>());
            if m.determinant().is_zero() {
                return Err(PolyError::Degenerate(format!(
                    "p{}, p{}, p{}, p{} are coplanar",
                    idx[0], idx[1], idx[2], idx[3]
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let j = ConfigJson {
            name: self.name.clone(),
            points: self.points.iter().map(|p| p.iter().map(fmt_q).collect()).collect(),
            params: self.params.iter().map(|(k, v)| (k.clone(), fmt_q(v))).collect(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<PointConfig> {
        let j: ConfigJson = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
        let conv = |s: &String| parse_q(s).map_err(|e| PolyError::Parse(e.to_string()));
        let points = j
            .points
            .iter()
            .map(|p| p.iter().map(conv).collect::<Result<Vec<Q>>>())
            .collect::<Result<Vec<_>>>()?;
        let params = j.params.iter().map(|(k, v)| Ok((k.clone(), conv(v)?))).collect::<Result<_>>()?;
        Ok(PointConfig { name: j.name, points, params })
    }
}

pub fn integer_vector(p: &[Q]) -> Vec<BigInt> {
    let den = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = p.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

fn quads(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

fn e(i: usize) -> Vec<Q> {
    (0..4).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

fn pt(xs: [Q; 4]) -> Vec<Q> {
    xs.to_vec()
}

/// The five coordinate placements used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Fixture {
    /// p_0 = [1:A:B:C], p_1..p_4 coordinate points, p_5 = [1:1:1:1].
    A,
    /// The placement used for f_0.
    B,
    /// The placement used for f_12, f_24 and the exceptional plane over p_4.
    C,
    /// The placement on the rational normal curve.
    D,
    /// The placement making the four planes of the inverse map coordinate planes.
    E,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [Fixture::A, Fixture::B, Fixture::C, Fixture::D, Fixture::E];

    pub fn parse(s: &str) -> Result<Fixture> {
        match s {
            "A" => Ok(Fixture::A),
            "B" => Ok(Fixture::B),
            "C" => Ok(Fixture::C),
            "D" => Ok(Fixture::D),
            "E" => Ok(Fixture::E),
            _ => Err(PolyError::Parse(format!("unknown fixture {s}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Fixture::A => "A",
            Fixture::B => "B",
            Fixture::C => "C",
            Fixture::D => "D",
            Fixture::E => "E",
        }
    }

    pub fn default_params(self) -> (Q, Q, Q) {
        match self {
            Fixture::A => (q(2), q(3), q(4)),
            Fixture::B | Fixture::C | Fixture::E => (q(2), q(5), q(-3)),
            Fixture::D => (q(2), q(-3), q(5)),
        }
    }

    pub fn build(self, a: Q, b: Q, c: Q) -> PointConfig {
        let one = q(1);
        let zero = q(0);
        let points = match self {
            Fixture::A => vec![
                pt([one.clone(), a.clone(), b.clone(), c.clone()]),
                e(0),
                e(1),
                e(2),
                e(3),
                pt([one.clone(), one.clone(), one.clone(), one.clone()]),
            ],
            Fixture::B => vec![
                e(0),
                e(1),
                e(2),
                pt([one.clone(), a.clone(), b.clone(), c.clone()]),
                pt([one.clone(), one.clone(), one.clone(), one.clone()]),
                e(3),
            ],
            Fixture::C => vec![
                e(1),
                e(0),
                pt([one.clone(), a.clone(), b.clone(), c.clone()]),
                e(2),
                e(3),
                pt([one.clone(), one.clone(), one.clone(), one.clone()]),
            ],
            Fixture::D => vec![
                e(0),
                e(3),
                e(2),
                pt([one.clone(), one.clone(), one.clone(), one.clone()]),
                pt([one.clone(), Q::one() / &a, Q::one() / &b, Q::one() / &c]),
                e(1),
            ],
            Fixture::E => vec![
                pt([one.clone(), a.clone(), one.clone(), zero.clone()]),
                e(3),
                e(2),
                pt([one.clone(), one.clone(), zero.clone(), b.clone()]),
                pt([one.clone(), zero.clone(), c.clone(), one.clone()]),
                e(1),
            ],
        };
        let keys = if self == Fixture::A { ["A", "B", "C"] } else { ["a", "b", "c"] };
        let params = keys.iter().map(|k| k.to_string()).zip([a, b, c]).collect();
        PointConfig { name: self.name().to_string(), points, params }
    }

    pub fn default_config(self) -> PointConfig {
        let (a, b, c) = self.default_params();
        self.build(a, b, c)
    }

    /// Rejection-sample parameters with small denominators until the
    /// placement is in linearly general position and avoids the
    /// published degeneracies.
    pub fn random_config<R: Rng>(self, rng: &mut R) -> PointConfig {
        loop {
            let mut draw = || Q::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4)));
            let (a, b, c) = (draw(), draw(), draw());
            if [&a, &b, &c].iter().any(|x| x.is_zero() || x.is_one()) || a == b || b == c || a == c {
                continue;
            }
            if self == Fixture::D && crate::rnc::alpha_formula(&a, &b, &c).is_none() {
                continue;
            }
            let cfg = self.build(a, b, c);
            if cfg.check_general_position().is_ok() {
                return cfg;
            }
        }
    }
}
