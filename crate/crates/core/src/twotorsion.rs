//! A[2] ≅ F_2^4 as even subsets of {0,…,5} modulo complement.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

const FULL: u8 = 0b11_1111;

/// A 2-torsion point, stored as a canonical even subset of size 0 or 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoTorsionPoint(u8);

/// Node labels in their canonical order.
pub const LABELS: [&str; 16] = [
    "0", "1", "2", "3", "4", "5", "12", "13", "14", "15", "23", "24", "25", "34", "35", "45",
];

impl TwoTorsionPoint {
    pub const ZERO: TwoTorsionPoint = TwoTorsionPoint(0);

    /// Canonicalizes any even subset (bitmask over {0..5}).
    pub fn from_subset(mask: u8) -> Result<TwoTorsionPoint> {
        let mask = mask & FULL;
        match mask.count_ones() {
            0 | 6 => Ok(TwoTorsionPoint(0)),
            2 => Ok(TwoTorsionPoint(mask)),
            4 => Ok(TwoTorsionPoint(FULL ^ mask)),
            _ => Err(Error::Parse(format!("odd subset {mask:#08b}"))),
        }
    }

    pub fn subset(self) -> u8 {
        self.0
    }

    /// `"0"` ↔ ∅, `"i"` ↔ {0,i}, `"jk"` ↔ {j,k}.
    pub fn from_label(label: &str) -> Result<TwoTorsionPoint> {
        let bad = || Error::Parse(label.to_string());
        let d: Vec<u8> = label
            .chars()
            .map(|c| c.to_digit(10).map(|x| x as u8))
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        match d.as_slice() {
            [0] => Ok(Self::ZERO),
            [i] if *i <= 5 => Ok(TwoTorsionPoint(1 | 1 << i)),
            [j, k] if 1 <= *j && j < k && *k <= 5 => Ok(TwoTorsionPoint(1 << j | 1 << k)),
            _ => Err(bad()),
        }
    }

    pub fn label(self) -> String {
        if self.0 == 0 {
            return "0".into();
        }
        let idx: Vec<u32> = (0..6).filter(|b| self.0 >> b & 1 == 1).collect();
        if idx[0] == 0 {
            idx[1].to_string()
        } else {
            format!("{}{}", idx[0], idx[1])
        }
    }

    /// Position of this point in [`LABELS`].
    pub fn index(self) -> usize {
        let l = self.label();
        LABELS.iter().position(|&x| x == l).expect("canonical label")
    }

    pub fn all() -> Vec<TwoTorsionPoint> {
        LABELS.iter().map(|l| Self::from_label(l).expect("valid")).collect()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: TwoTorsionPoint) -> TwoTorsionPoint {
        Self::from_subset(self.0 ^ other.0).expect("even")
    }

    /// Weil pairing: parity of the intersection of representatives.
    pub fn pairing(self, other: TwoTorsionPoint) -> u8 {
        ((self.0 & other.0).count_ones() % 2) as u8
    }
}

impl fmt::Debug for TwoTorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Display for TwoTorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Subsets of A[2] as 16-bit masks over [`LABELS`] order.
pub type NodeSet = u16;

pub fn node_set(points: impl IntoIterator<Item = TwoTorsionPoint>) -> NodeSet {
    points.into_iter().fold(0, |m, p| m | 1 << p.index())
}

pub fn node_set_from_labels(labels: &[&str]) -> Result<NodeSet> {
    let pts = labels.iter().map(|l| TwoTorsionPoint::from_label(l)).collect::<Result<Vec<_>>>()?;
    Ok(node_set(pts))
}

pub fn members(set: NodeSet) -> Vec<TwoTorsionPoint> {
    let all = TwoTorsionPoint::all();
    (0..16).filter(|i| set >> i & 1 == 1).map(|i| all[i]).collect()
}

pub fn labels_of(set: NodeSet) -> Vec<String> {
    members(set).iter().map(|p| p.label()).collect()
}

pub fn translate(set: NodeSet, alpha: TwoTorsionPoint) -> NodeSet {
    node_set(members(set).into_iter().map(|p| p.add(alpha)))
}

#[derive(Clone, Debug)]
pub struct FlatEnumeration {
    pub hyperplanes: BTreeSet<NodeSet>,
    pub planes: BTreeSet<NodeSet>,
    pub gopel: BTreeSet<NodeSet>,
    pub rosenhain: BTreeSet<NodeSet>,
    pub weber: BTreeSet<NodeSet>,
}

impl FlatEnumeration {
    pub fn is_weber(&self, set: NodeSet) -> bool {
        self.weber.contains(&set)
    }
}

fn cosets(subgroup: &[TwoTorsionPoint]) -> BTreeSet<NodeSet> {
    TwoTorsionPoint::all()
        .into_iter()
        .map(|t| node_set(subgroup.iter().map(|&s| s.add(t))))
        .collect()
}

pub fn enumerate_flats() -> FlatEnumeration {
    let pts = TwoTorsionPoint::all();
    let nonzero = &pts[1..];

    let mut hyperplanes = BTreeSet::new();
    for &v in nonzero {
        for level in 0..2 {
            hyperplanes.insert(node_set(pts.iter().copied().filter(|x| x.pairing(v) == level)));
        }
    }

    let mut planes = BTreeSet::new();
    let mut gopel = BTreeSet::new();
    let mut rosenhain = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for (i, &a) in nonzero.iter().enumerate() {
        for &b in &nonzero[i + 1..] {
            let sub = [TwoTorsionPoint::ZERO, a, b, a.add(b)];
            if !seen.insert(node_set(sub)) {
                continue;
            }
            let cs = cosets(&sub);
            planes.extend(cs.iter().copied());
            if a.pairing(b) == 0 {
                gopel.extend(cs);
            } else {
                rosenhain.extend(cs);
            }
        }
    }

    let mut weber = BTreeSet::new();
    for &g in &gopel {
        for &r in &rosenhain {
            let d = g ^ r;
            if d.count_ones() == 6 {
                weber.insert(d);
            }
        }
    }

    FlatEnumeration { hyperplanes, planes, gopel, rosenhain, weber }
}

pub fn is_weber(set: NodeSet) -> bool {
    enumerate_flats().is_weber(set)
}

/// Canonical node of the line L_{ijk} (i, j, k distinct in 0..=5): the
/// 3-subset containing 0 determines the label jk.
pub fn line_node(i: u8, j: u8, k: u8) -> TwoTorsionPoint {
    let mask = (1u8 << i) | (1 << j) | (1 << k);
    assert_eq!(mask.count_ones(), 3, "indices must be distinct");
    let rep = if mask & 1 == 1 { mask } else { FULL ^ mask };
    TwoTorsionPoint::from_subset(rep & !1).expect("two remaining indices")
}

/// Node E_i.
pub fn point_node(i: u8) -> TwoTorsionPoint {
    TwoTorsionPoint::from_label(&i.to_string()).expect("0..=5")
}

fn complement(excl: &[u8]) -> Vec<u8> {
    (0..6).filter(|x| !excl.contains(x)).collect()
}

/// Γ_ij = {E_i, E_j} ∪ {L_iab : a, b ∉ {i, j}}.
pub fn gamma(i: u8, j: u8) -> NodeSet {
    let rest = complement(&[i, j]);
    let mut pts = vec![point_node(i), point_node(j)];
    for (x, &a) in rest.iter().enumerate() {
        for &b in &rest[x + 1..] {
            pts.push(line_node(i, a, b));
        }
    }
    node_set(pts)
}

/// Γ_ij^c = {E_k : k ∉ {i,j}} ∪ {L_ijk : k ∉ {i,j}}.
pub fn gamma_c(i: u8, j: u8) -> NodeSet {
    let rest = complement(&[i, j]);
    let mut pts: Vec<_> = rest.iter().map(|&k| point_node(k)).collect();
    pts.extend(rest.iter().map(|&k| line_node(i, j, k)));
    node_set(pts)
}

/// The four displayed families of affine 2-planes, each as a set.
pub fn plane_families() -> [BTreeSet<NodeSet>; 4] {
    let mut fam: [BTreeSet<NodeSet>; 4] = Default::default();
    let idx: Vec<u8> = (0..6).collect();
    for &i in &idx {
        for &j in &idx {
            for &k in &idx {
                for &m in &idx {
                    let d = [i, j, k, m];
                    let distinct = (0..4).all(|a| (a + 1..4).all(|b| d[a] != d[b]));
                    if distinct {
                        fam[0].insert(node_set([point_node(i), point_node(j), point_node(k), line_node(i, j, k)]));
                        fam[1].insert(node_set([point_node(i), point_node(j), line_node(i, k, m), line_node(j, k, m)]));
                        fam[2].insert(node_set([point_node(i), line_node(i, j, k), line_node(i, j, m), line_node(i, k, m)]));
                    }
                }
            }
        }
    }
    for &i in &idx {
        let rest = complement(&[i]);
        for &k in &rest {
            for &m in &rest {
                for &p in &rest {
                    for &qq in &rest {
                        let d = [k, m, p, qq];
                        let distinct = (0..4).all(|a| (a + 1..4).all(|b| d[a] != d[b]));
                        if distinct {
                            fam[3].insert(node_set([
                                line_node(i, k, p),
                                line_node(i, k, qq),
                                line_node(i, m, p),
                                line_node(i, m, qq),
                            ]));
                        }
                    }
                }
            }
        }
    }
    fam
}
