//! Keum's isometry κ* of NS(S), the pullback η on Pic(X), and the orbit
//! F_k = η^k(E_03).

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::divisor::{named_class, Basis, DivisorClass, Generator, Space};
use crate::error::{Error, Result};
use crate::kummer::{self, node_label, NsClass};
use crate::matrix::QMatrix;
use crate::rational::{proportional, q, Q};
use crate::twotorsion::LABELS;

/// An exact linear map; column j is the image of source generator j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeMap {
    pub source: String,
    pub target: String,
    pub matrix: QMatrix,
}

impl LatticeMap {
    pub fn apply(&self, v: &[Q]) -> Result<Vec<Q>> {
        self.matrix.apply(v)
    }

    pub fn compose(&self, inner: &LatticeMap) -> Result<LatticeMap> {
        if inner.target != self.source {
            return Err(Error::Shape(format!("{} -> {} after {}", self.source, self.target, inner.target)));
        }
        Ok(LatticeMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hexad {
    /// H = {5, 23, 1, 14, 2, 12}, the automorphism κ used throughout.
    H,
    /// H_1 = {0, 14, 15, 23, 25, 34}, Keum's κ_1.
    H1,
}

impl Hexad {
    pub fn parse(s: &str) -> Result<Hexad> {
        match s {
            "H" => Ok(Hexad::H),
            "H1" | "H_1" => Ok(Hexad::H1),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

enum Image {
    Node(&'static str),
    /// hexad class minus a node
    Minus(&'static str),
}

fn keum_table(h: Hexad) -> (&'static [&'static str; 6], [(&'static str, Image); 16]) {
    use Image::*;
    match h {
        Hexad::H => (
            &["1", "2", "5", "12", "23", "14"],
            [
                ("34", Node("34")),
                ("25", Node("35")),
                ("35", Node("24")),
                ("24", Node("25")),
                ("15", Node("45")),
                ("45", Node("13")),
                ("13", Node("15")),
                ("23", Minus("2")),
                ("14", Minus("1")),
                ("0", Minus("12")),
                ("12", Minus("5")),
                ("3", Minus("14")),
                ("4", Minus("23")),
                ("5", Node("0")),
                ("1", Node("3")),
                ("2", Node("4")),
            ],
        ),
        Hexad::H1 => (
            &["0", "14", "15", "23", "25", "34"],
            [
                ("12", Node("12")),
                ("2", Node("3")),
                ("3", Node("13")),
                ("13", Node("2")),
                ("1", Node("4")),
                ("4", Node("24")),
                ("24", Node("1")),
                ("14", Minus("25")),
                ("23", Minus("15")),
                ("5", Minus("34")),
                ("34", Minus("0")),
                ("35", Minus("23")),
                ("45", Minus("14")),
                ("0", Node("5")),
                ("15", Node("35")),
                ("25", Node("45")),
            ],
        ),
    }
}

/// κ*_H as a 17×17 matrix in the (Λ, N) frame.
pub fn keum_matrix(h: Hexad) -> LatticeMap {
    let (hexad, table) = keum_table(h);
    let hex_sum = hexad.iter().fold(NsClass::zero(), |acc, l| acc.add(&node_label(l).expect("label")));
    let lambda = kummer::lambda();
    let special = lambda.scale(&q(2)).sub(&hex_sum);
    let mut cols = vec![Vec::new(); kummer::RANK];
    cols[0] = lambda.scale(&q(7)).sub(&hex_sum.scale(&q(4))).0;
    for (src, img) in table {
        let i = 1 + LABELS.iter().position(|&l| l == src).expect("label");
        let v = match img {
            Image::Node(l) => node_label(l).expect("label"),
            Image::Minus(l) => special.sub(&node_label(l).expect("label")),
        };
        cols[i] = v.0;
    }
    assert!(cols.iter().all(|c| c.len() == kummer::RANK), "table covers every node");
    LatticeMap { source: "NS".into(), target: "NS".into(), matrix: QMatrix::from_columns(&cols) }
}

fn eta_image(g: Generator) -> DivisorClass {
    let x = |name: &str| named_class(name, Space::X).expect("named class");
    let gen = |text: &str| DivisorClass::parse(Space::X, text).expect("generator");
    match g {
        Generator::H => x("D"),
        Generator::E(i) => match i {
            0 => x("Q_0"),
            3 => x("Q_3"),
            4 => x("Q_4"),
            1 => gen("E3"),
            2 => gen("E4"),
            5 => gen("E0"),
            _ => unreachable!(),
        },
        Generator::L(i, j) => match (i, j) {
            (0, 5) => x("Q_05"),
            (1, 3) => x("Q_13"),
            (2, 4) => x("Q_24"),
            (1, 2) => x("Q_12"),
            (1, 5) => x("Q_15"),
            (2, 5) => x("Q_25"),
            (0, 3) => gen("E15"),
            (0, 4) => gen("E25"),
            (3, 4) => gen("E12"),
            (0, 2) => gen("E14"),
            (3, 5) => gen("E02"),
            (1, 4) => gen("E35"),
            (4, 5) => gen("E01"),
            (2, 3) => gen("E45"),
            (0, 1) => gen("E23"),
            _ => unreachable!(),
        },
    }
}

/// η as a 22×22 matrix on the X basis.
pub fn eta_matrix() -> LatticeMap {
    let basis = Basis::new(Space::X).expect("X");
    let cols: Vec<Vec<Q>> = basis.generators.iter().map(|&g| eta_image(g).coeffs).collect();
    LatticeMap { source: "X".into(), target: "X".into(), matrix: QMatrix::from_columns(&cols) }
}

pub fn restriction_map() -> LatticeMap {
    LatticeMap { source: "X".into(), target: "NS".into(), matrix: kummer::restriction_matrix() }
}

/// r∘η and κ*∘r as 17×22 matrices.
pub fn intertwine_pair(eta: &LatticeMap, kappa: &LatticeMap) -> Result<(QMatrix, QMatrix)> {
    let r = restriction_map();
    Ok((r.compose(eta)?.matrix, kappa.compose(&r)?.matrix))
}

pub fn intertwine_check() -> bool {
    let (a, b) = intertwine_pair(&eta_matrix(), &keum_matrix(Hexad::H)).expect("shapes");
    a == b
}

pub fn apply_class(map: &LatticeMap, c: &DivisorClass) -> Result<DivisorClass> {
    let x = c.embed(Space::X)?;
    Ok(DivisorClass { space: Space::X, coeffs: map.apply(&x.coeffs)? })
}

pub fn apply_ns(map: &LatticeMap, c: &NsClass) -> Result<NsClass> {
    Ok(NsClass(map.apply(&c.0)?))
}

/// F_1, …, F_k by repeated application of η to E_03.
pub fn iterate_f_all(k: usize) -> Vec<DivisorClass> {
    let eta = eta_matrix();
    let mut cur = DivisorClass::generator(Space::X, Generator::line(0, 3)).expect("E03");
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        cur = apply_class(&eta, &cur).expect("shape");
        out.push(cur.clone());
    }
    out
}

pub fn iterate_f(k: usize) -> DivisorClass {
    assert!(k >= 1, "k must be positive");
    iterate_f_all(k).pop().expect("k >= 1")
}

/// How the m_{k-1} term is evaluated at k = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Use the k = 3d row with d = 0, giving m_0 = −1.
    Table,
    /// Force m_0 = 0.
    Zero,
}

/// (m_k, n_k, G_k) from the residue table; valid for every k ≥ 0.
pub fn table_row(k: u64) -> (i64, i64, &'static str) {
    let d = (k / 3) as i64;
    match k % 3 {
        0 => (3 * d * d - 1, 2 * (3 * d - 1) * d, "E04 + E34"),
        1 => (d * (3 * d + 2), 2 * (3 * d + 1) * d, "E12 + E25"),
        _ => ((3 * d + 1) * (d + 1), 2 * (3 * d * d + 3 * d + 1), "-E05 - E13"),
    }
}

pub fn closed_form_f_with(k: u64, boundary: Boundary) -> DivisorClass {
    assert!(k >= 1, "k must be positive");
    let (m, n, g) = table_row(k);
    let m_prev = match (k, boundary) {
        (1, Boundary::Zero) => 0,
        _ => table_row(k - 1).0,
    };
    let kk = k as i64;
    let a = 2 * kk * (kk - 1);
    let b = kk * (kk - 1);
    let text = format!(
        "{a}H -{b}E0 -{b}E1 -{b}E2 -{b}E3 -{b}E4 -{b}E5 \
         -{m}E03 -{m}E04 -{m}E34 -{m_prev}E12 -{m_prev}E15 -{m_prev}E25 \
         -{n}E05 -{n}E13 -{n}E24"
    )
    .replace("--", "+");
    let base = DivisorClass::parse(Space::X, &text).expect("closed form");
    base.sub(&DivisorClass::parse(Space::X, g).expect("G_k"))
}

pub fn closed_form_f(k: u64) -> DivisorClass {
    closed_form_f_with(k, Boundary::Table)
}

/// True iff F_i and F_j are non-proportional for all 1 ≤ i < j ≤ K.
pub fn nonproportionality_scan(classes: &[DivisorClass]) -> bool {
    classes
        .iter()
        .enumerate()
        .all(|(i, a)| classes[i + 1..].iter().all(|b| !proportional(&a.coeffs, &b.coeffs)))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderEvidence {
    pub n: usize,
    pub kappa_power_is_identity: Vec<usize>,
    pub eta_power_is_identity: Vec<usize>,
    /// Coefficients of det(tI − η), constant term first.
    #[serde(with = "crate::rational::serde_q::vec")]
    pub eta_charpoly: Vec<Q>,
    /// (n, largest |entry| of η^n) at a few sample exponents.
    pub eta_growth: Vec<(usize, String)>,
    pub degrees_match: bool,
}

pub fn order_evidence(n: usize) -> OrderEvidence {
    let kappa = keum_matrix(Hexad::H).matrix;
    let eta = eta_matrix().matrix;
    let mut kp = QMatrix::identity(kappa.rows());
    let mut ep = QMatrix::identity(eta.rows());
    let mut kid = Vec::new();
    let mut eid = Vec::new();
    let mut growth = Vec::new();
    for i in 1..=n {
        kp = kappa.mul(&kp).expect("square");
        ep = eta.mul(&ep).expect("square");
        if kp.is_identity() {
            kid.push(i);
        }
        if ep.is_identity() {
            eid.push(i);
        }
        if i.is_power_of_two() || i == n {
            growth.push((i, ep.max_abs_entry().to_string()));
        }
    }
    let degrees_match = iterate_f_all(n)
        .iter()
        .enumerate()
        .all(|(i, f)| {
            let k = (i + 1) as i64;
            f.degree() == q(2 * k * (k - 1))
        });
    OrderEvidence {
        n,
        kappa_power_is_identity: kid,
        eta_power_is_identity: eid,
        eta_charpoly: eta.charpoly(),
        eta_growth: growth,
        degrees_match,
    }
}

pub fn eta_inverse() -> Result<LatticeMap> {
    let m = eta_matrix().matrix.inverse()?;
    Ok(LatticeMap { source: "X".into(), target: "X".into(), matrix: m })
}

/// η^{-1}(H) = D′.
pub fn dual_check() -> Result<bool> {
    let inv = eta_inverse()?;
    let h = DivisorClass::generator(Space::X, Generator::H)?;
    Ok(apply_class(&inv, &h)? == named_class("D'", Space::X)?)
}

/// Largest |coefficient| of a class; used for growth reporting.
pub fn height(c: &DivisorClass) -> Q {
    c.coeffs.iter().map(Signed::abs).fold(Q::zero(), |a, b| if b > a { b } else { a })
}
