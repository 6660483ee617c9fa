//! The rank-17 Néron–Severi lattice of the Kummer K3 surface in the frame
//! (Λ, N_α), with Gram form diag(4, −2, …, −2).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::divisor::{Basis, DivisorClass, Generator, Space};
use crate::error::{Error, Result};
use crate::hnf;
use crate::matrix::QMatrix;
use crate::rational::{is_half_integer, q, qf, Q};
use crate::twotorsion::{line_node, point_node, NodeSet, TwoTorsionPoint, LABELS};

pub const RANK: usize = 17;

/// A rational class in the (Λ, N_α) frame. Index 0 is Λ; index 1 + i is the
/// node with label `LABELS[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NsClass(#[serde(with = "crate::rational::serde_q::vec")] pub Vec<Q>);

impl NsClass {
    pub fn zero() -> NsClass {
        NsClass(vec![Q::zero(); RANK])
    }

    pub fn unit(i: usize) -> NsClass {
        let mut v = Self::zero();
        v.0[i] = q(1);
        v
    }

    pub fn add(&self, o: &NsClass) -> NsClass {
        NsClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &NsClass) -> NsClass {
        NsClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Q) -> NsClass {
        NsClass(self.0.iter().map(|a| a * s).collect())
    }

    pub fn is_half_integral(&self) -> bool {
        self.0.iter().all(is_half_integer)
    }

    /// Twice the class, as integers; fails off (1/2)Z^17.
    pub fn doubled(&self) -> Result<Vec<BigInt>> {
        if !self.is_half_integral() {
            return Err(Error::NotHalfIntegral);
        }
        Ok(self.0.iter().map(|x| (x * q(2)).to_integer()).collect())
    }
}

pub fn sum(items: impl IntoIterator<Item = NsClass>) -> NsClass {
    items.into_iter().fold(NsClass::zero(), |a, b| a.add(&b))
}

pub fn gram(a: &NsClass, b: &NsClass) -> Q {
    let mut s = q(4) * &a.0[0] * &b.0[0];
    for i in 1..RANK {
        if !a.0[i].is_zero() && !b.0[i].is_zero() {
            s -= q(2) * &a.0[i] * &b.0[i];
        }
    }
    s
}

pub fn lambda() -> NsClass {
    NsClass::unit(0)
}

pub fn node(p: TwoTorsionPoint) -> NsClass {
    NsClass::unit(1 + p.index())
}

pub fn node_label(label: &str) -> Result<NsClass> {
    TwoTorsionPoint::from_label(label).map(node)
}

pub fn e(i: u8) -> NsClass {
    node(point_node(i))
}

pub fn line(i: u8, j: u8, k: u8) -> NsClass {
    node(line_node(i, j, k))
}

fn others(excl: &[u8]) -> Vec<u8> {
    (0..6).filter(|x| !excl.contains(x)).collect()
}

/// The ten L_I, one per complementary pair of 3-subsets.
pub fn all_lines() -> Vec<NsClass> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..6u8 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let n = line_node(i, j, k);
                if seen.insert(n) {
                    out.push(node(n));
                }
            }
        }
    }
    out
}

/// H_S = (3Λ − Σ L_I) / 2.
pub fn h_s() -> NsClass {
    lambda().scale(&q(3)).sub(&sum(all_lines())).scale(&qf(1, 2))
}

/// T_ij = (Λ − E_i − E_j − Σ_{k≠i,j} L_ijk) / 2.
pub fn t(i: u8, j: u8) -> NsClass {
    let mut v = lambda().sub(&e(i)).sub(&e(j));
    for k in others(&[i, j]) {
        v = v.sub(&line(i, j, k));
    }
    v.scale(&qf(1, 2))
}

/// R = (Λ − Σ E_i) / 2.
pub fn r() -> NsClass {
    let v = (0..6).fold(lambda(), |acc, i| acc.sub(&e(i)));
    v.scale(&qf(1, 2))
}

/// C_ij = (Σ_{k∉{i,j}} (E_k + L_ijk)) / 2.
pub fn c(i: u8, j: u8) -> NsClass {
    let v = sum(others(&[i, j]).into_iter().map(|k| e(k).add(&line(i, j, k))));
    v.scale(&qf(1, 2))
}

/// D_ij = (1/2)Σ N_α − C_ij.
pub fn d(i: u8, j: u8) -> NsClass {
    let all = sum((1..RANK).map(NsClass::unit)).scale(&qf(1, 2));
    all.sub(&c(i, j))
}

/// A_ij = Λ − (E_i + E_j + Σ L_ipq)/2 over pairs p < q outside {i, j}.
pub fn a(i: u8, j: u8) -> NsClass {
    let rest = others(&[i, j]);
    let mut v = e(i).add(&e(j));
    for (x, &p) in rest.iter().enumerate() {
        for &qq in &rest[x + 1..] {
            v = v.add(&line(i, p, qq));
        }
    }
    lambda().sub(&v.scale(&qf(1, 2)))
}

/// G = r(S) = −(3/2)Λ + (1/2)Σ E_i + Σ L_I.
pub fn g() -> NsClass {
    let es = sum((0..6).map(e)).scale(&qf(1, 2));
    lambda().scale(&qf(-3, 2)).add(&es).add(&sum(all_lines()))
}

fn hexad_class(labels: &[&str]) -> NsClass {
    let ns = labels.iter().map(|l| node_label(l).expect("valid label"));
    lambda().scale(&q(2)).sub(&sum(ns))
}

/// U = 2Λ − Σ_{h ∈ H} N_h for H = {5, 23, 1, 14, 2, 12}.
pub fn u() -> NsClass {
    hexad_class(&["1", "2", "5", "12", "23", "14"])
}

/// M = 2Λ − Σ_{h ∈ H_1} N_h for H_1 = {0, 14, 15, 23, 25, 34}.
pub fn m() -> NsClass {
    hexad_class(&["0", "14", "15", "23", "25", "34"])
}

fn digits(s: &str) -> Option<Vec<u8>> {
    s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
}

/// Looks up a class by name: `Lambda`, `N_<label>`, `E_i`, `L_ijk`, `H_S`,
/// `T_ij`, `R`, `C_ij`, `D_ij`, `A_ij`, `G`, `U`, `M`.
pub fn named_ns(name: &str) -> Result<NsClass> {
    let unknown = || Error::UnknownName(name.to_string());
    let pair = |s: &str| -> Result<(u8, u8)> {
        match digits(s).as_deref() {
            Some([i, j]) if i != j && *i < 6 && *j < 6 => Ok((*i, *j)),
            _ => Err(unknown()),
        }
    };
    match name {
        "Lambda" | "Λ" => return Ok(lambda()),
        "H_S" => return Ok(h_s()),
        "R" => return Ok(r()),
        "G" => return Ok(g()),
        "U" => return Ok(u()),
        "M" => return Ok(m()),
        _ => {}
    }
    let (head, idx) = name.split_once('_').ok_or_else(unknown)?;
    match head {
        "N" => node_label(idx).map_err(|_| unknown()),
        "E" => match digits(idx).as_deref() {
            Some([i]) if *i < 6 => Ok(e(*i)),
            _ => Err(unknown()),
        },
        "L" => match digits(idx).as_deref() {
            Some([i, j, k]) if i != j && j != k && i != k && *i < 6 && *j < 6 && *k < 6 => {
                Ok(line(*i, *j, *k))
            }
            _ => Err(unknown()),
        },
        "T" => pair(idx).map(|(i, j)| t(i, j)),
        "C" => pair(idx).map(|(i, j)| c(i, j)),
        "D" => pair(idx).map(|(i, j)| d(i, j)),
        "A" => pair(idx).map(|(i, j)| a(i, j)),
        _ => Err(unknown()),
    }
}

/// Half the sum of the nodes in a subset.
pub fn half_sum(set: NodeSet) -> NsClass {
    let mut v = NsClass::zero();
    for i in 0..16 {
        if set >> i & 1 == 1 {
            v.0[1 + i] = qf(1, 2);
        }
    }
    v
}

/// Image of a generator of Pic(X) under restriction.
fn restrict_generator(g: Generator) -> NsClass {
    match g {
        Generator::H => h_s(),
        Generator::E(i) => e(i),
        Generator::L(i, j) => t(i, j),
    }
}

/// The 17×22 matrix of r : Pic(X) → NS(S).
pub fn restriction_matrix() -> QMatrix {
    let basis = Basis::new(Space::X).expect("X");
    let cols: Vec<Vec<Q>> = basis.generators.iter().map(|&g| restrict_generator(g).0).collect();
    QMatrix::from_columns(&cols)
}

pub fn restrict(class: &DivisorClass) -> Result<NsClass> {
    let x = match class.space {
        Space::X => class.clone(),
        Space::Y => class.embed(Space::X)?,
        s => return Err(Error::BasisMismatch { name: "restriction".into(), space: s.to_string() }),
    };
    Ok(NsClass(restriction_matrix().apply(&x.coeffs)?))
}

/// The lattice spanned by the exhibited classes, scaled by 2.
#[derive(Clone, Debug)]
pub struct NsLattice {
    pub generator_names: Vec<String>,
    pub generator_matrix: Vec<Vec<BigInt>>,
    pub hnf: Vec<Vec<BigInt>>,
    small: Vec<Vec<i64>>,
}

impl NsLattice {
    pub fn build() -> NsLattice {
        let mut names = vec!["Lambda".to_string(), "H_S".into(), "R".into()];
        names.extend(LABELS.iter().map(|l| format!("N_{l}")));
        for i in 0..6u8 {
            for j in i + 1..6 {
                for head in ["T", "C", "D"] {
                    names.push(format!("{head}_{i}{j}"));
                }
            }
        }
        let generator_matrix: Vec<Vec<BigInt>> = names
            .iter()
            .map(|n| named_ns(n).and_then(|c| c.doubled()).expect("exhibited classes are half-integral"))
            .collect();
        let hnf = hnf::hnf(&generator_matrix);
        let small = hnf
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("small entries")).collect())
            .collect();
        NsLattice { generator_names: names, generator_matrix, hnf, small }
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    pub fn contains(&self, x: &NsClass) -> Result<bool> {
        Ok(hnf::in_span(&self.hnf, &x.doubled()?))
    }

    fn contains_small(&self, v: &mut [i64; RANK]) -> bool {
        for row in &self.small {
            let c = row.iter().position(|&x| x != 0).expect("nonzero row");
            if v[..c].iter().any(|&x| x != 0) {
                return false;
            }
            if v[c] % row[c] != 0 {
                return false;
            }
            let f = v[c] / row[c];
            if f != 0 {
                for (t, &x) in v.iter_mut().zip(row) {
                    *t -= f * x;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Every subset M of the sixteen nodes with (1/2)Σ_M N_α in the lattice.
    pub fn half_subset_scan(&self) -> BTreeSet<NodeSet> {
        (0..=u16::MAX)
            .filter(|&set| {
                let mut v = [0i64; RANK];
                for i in 0..16 {
                    v[1 + i] = i64::from(set >> i & 1);
                }
                self.contains_small(&mut v)
            })
            .collect()
    }

    /// Discriminant of the computed lattice: det of its Gram matrix.
    pub fn discriminant(&self) -> Q {
        let basis: Vec<NsClass> = self
            .hnf
            .iter()
            .map(|r| NsClass(r.iter().map(|x| Q::new(x.clone(), BigInt::from(2))).collect()))
            .collect();
        let n = basis.len();
        QMatrix::from_fn(n, n, |i, j| gram(&basis[i], &basis[j])).determinant()
    }
}

/// The sixteen tropes: T_ij in lexicographic order, then R.
pub fn tropes() -> Vec<(String, NsClass)> {
    let mut out = Vec::new();
    for i in 0..6u8 {
        for j in i + 1..6 {
            out.push((format!("T_{i}{j}"), t(i, j)));
        }
    }
    out.push(("R".into(), r()));
    out
}

/// Incidence matrix: entry (trope, node) is 1 iff their product is 1.
pub fn trope_incidence() -> Vec<Vec<u8>> {
    tropes()
        .iter()
        .map(|(_, tr)| {
            TwoTorsionPoint::all()
                .into_iter()
                .map(|p| u8::from(gram(tr, &node(p)) == q(1)))
                .collect()
        })
        .collect()
}
