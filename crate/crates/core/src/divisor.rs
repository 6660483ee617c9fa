//! Picard groups of the blow-ups X, Y and Y_n, and the named divisor classes
//! living on them.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, Q};

/// The nine lines blown up in Y, in canonical order.
pub const LINES_I: [(u8, u8); 9] =
    [(0, 3), (0, 4), (3, 4), (1, 2), (1, 5), (2, 5), (0, 5), (1, 3), (2, 4)];

/// The six further lines blown up in X.
pub const LINES_EXTRA: [(u8, u8); 6] = [(0, 1), (0, 2), (1, 4), (2, 3), (3, 5), (4, 5)];

/// Labels α of the nine quartics Q_α.
pub const ALPHA: [&str; 9] = ["0", "3", "4", "12", "15", "25", "05", "13", "24"];

/// Labels β of the nine dual quartics P_β.
pub const BETA: [&str; 9] = ["1", "2", "5", "03", "04", "34", "05", "13", "24"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    X,
    Y,
    Yn(usize),
}

impl Space {
    pub fn npoints(self) -> usize {
        match self {
            Space::X | Space::Y => 6,
            Space::Yn(n) => n + 3,
        }
    }

    pub fn lines(self) -> Vec<(u8, u8)> {
        match self {
            Space::X => LINES_I.iter().chain(&LINES_EXTRA).copied().collect(),
            _ => LINES_I.to_vec(),
        }
    }

    pub fn rank(self) -> usize {
        1 + self.npoints() + self.lines().len()
    }

    pub fn parse(s: &str) -> Result<Space> {
        match s {
            "X" => Ok(Space::X),
            "Y" => Ok(Space::Y),
            _ => {
                let n = s
                    .strip_prefix("Yn(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|r| r.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(s.to_string()))?;
                Basis::new(Space::Yn(n)).map(|b| b.space)
            }
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::X => write!(f, "X"),
            Space::Y => write!(f, "Y"),
            Space::Yn(n) => write!(f, "Yn({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    H,
    E(u8),
    L(u8, u8),
}

impl Generator {
    /// Line generators are stored with the smaller index first.
    pub fn line(i: u8, j: u8) -> Generator {
        Generator::L(i.min(j), i.max(j))
    }

    /// `"3"` is the point E_3, `"05"` the line E_05.
    pub fn from_label(label: &str) -> Result<Generator> {
        let d: Vec<u8> = label
            .chars()
            .map(|c| c.to_digit(10).map(|x| x as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(label.to_string()))?;
        match d.as_slice() {
            [i] => Ok(Generator::E(*i)),
            [i, j] if i != j => Ok(Generator::line(*i, *j)),
            _ => Err(Error::Parse(label.to_string())),
        }
    }

    pub fn permute(self, perm: &[u8]) -> Generator {
        let p = |i: u8| perm.get(i as usize).copied().unwrap_or(i);
        match self {
            Generator::H => Generator::H,
            Generator::E(i) => Generator::E(p(i)),
            Generator::L(i, j) => Generator::line(p(i), p(j)),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::H => write!(f, "H"),
            Generator::E(i) => write!(f, "E{i}"),
            Generator::L(i, j) => write!(f, "E{i}{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub space: Space,
    pub generators: Vec<Generator>,
}

impl Basis {
    pub fn new(space: Space) -> Result<Basis> {
        if let Space::Yn(n) = space {
            if n < 3 {
                return Err(Error::InvalidDimension(n));
            }
        }
        let mut generators = vec![Generator::H];
        generators.extend((0..space.npoints() as u8).map(Generator::E));
        generators.extend(space.lines().into_iter().map(|(i, j)| Generator::L(i, j)));
        Ok(Basis { space, generators })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index(&self, g: Generator) -> Option<usize> {
        self.generators.iter().position(|&x| x == g)
    }
}

/// An exact divisor class over a blow-up basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub space: Space,
    pub coeffs: Vec<Q>,
}

impl DivisorClass {
    pub fn zero(space: Space) -> DivisorClass {
        DivisorClass { space, coeffs: vec![Q::zero(); space.rank()] }
    }

    pub fn generator(space: Space, g: Generator) -> Result<DivisorClass> {
        let basis = Basis::new(space)?;
        let i = basis.index(g).ok_or_else(|| Error::BasisMismatch {
            name: g.to_string(),
            space: space.to_string(),
        })?;
        let mut c = Self::zero(space);
        c.coeffs[i] = Q::one();
        Ok(c)
    }

    /// Parses a linear combination such as `"4H -2E0 -E03 +3E5"`.
    pub fn parse(space: Space, text: &str) -> Result<DivisorClass> {
        let basis = Basis::new(space)?;
        let mut c = Self::zero(space);
        let bad = || Error::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let split = body.find(|ch: char| !ch.is_ascii_digit()).ok_or_else(bad)?;
            let (num, sym) = body.split_at(split);
            let k: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| bad())? };
            let g = match sym {
                "H" => Generator::H,
                s => Generator::from_label(s.strip_prefix('E').ok_or_else(bad)?)?,
            };
            let i = basis.index(g).ok_or_else(|| Error::BasisMismatch {
                name: g.to_string(),
                space: space.to_string(),
            })?;
            c.coeffs[i] += q(sign * k);
        }
        Ok(c)
    }

    pub fn coeff(&self, g: Generator) -> Q {
        Basis::new(self.space)
            .ok()
            .and_then(|b| b.index(g))
            .map_or_else(Q::zero, |i| self.coeffs[i].clone())
    }

    /// Zero-extension along Y ⊂ X (or into a larger Y_n); fails if a nonzero
    /// coefficient has no counterpart.
    pub fn embed(&self, target: Space) -> Result<DivisorClass> {
        let src = Basis::new(self.space)?;
        let dst = Basis::new(target)?;
        let mut out = Self::zero(target);
        for (g, c) in src.generators.iter().zip(&self.coeffs) {
            match dst.index(*g) {
                Some(i) => out.coeffs[i] = c.clone(),
                None if c.is_zero() => {}
                None => {
                    return Err(Error::BasisMismatch { name: g.to_string(), space: target.to_string() })
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.space, other.space, "classes on different spaces");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        DivisorClass { space: self.space, coeffs }
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Q) -> DivisorClass {
        DivisorClass { space: self.space, coeffs: self.coeffs.iter().map(|x| x * s).collect() }
    }

    pub fn degree(&self) -> Q {
        self.coeffs[0].clone()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|x| x.denom().is_one())
    }

    /// Pushforward along a permutation of the point indices.
    pub fn permute(&self, perm: &[u8]) -> DivisorClass {
        let basis = Basis::new(self.space).expect("valid space");
        let mut out = Self::zero(self.space);
        for (g, c) in basis.generators.iter().zip(&self.coeffs) {
            let i = basis.index(g.permute(perm)).expect("permutation preserves the line set");
            out.coeffs[i] = c.clone();
        }
        out
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = Basis::new(self.space).map_err(|_| fmt::Error)?;
        let mut first = true;
        for (g, c) in basis.generators.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let k = if a.is_one() { String::new() } else { a.to_string() };
            write!(f, "{sign}{k}{g}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    basis: String,
    coeffs: Vec<String>,
}

impl Serialize for DivisorClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassJson { basis: self.space.to_string(), coeffs: self.coeffs.iter().map(fmt_q).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ClassJson::deserialize(d)?;
        let space = Space::parse(&j.basis).map_err(D::Error::custom)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| crate::rational::parse_q(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        if coeffs.len() != space.rank() {
            return Err(D::Error::custom("coefficient count does not match basis"));
        }
        Ok(DivisorClass { space, coeffs })
    }
}

pub fn make_basis(space: Space) -> Result<Basis> {
    Basis::new(space)
}

pub fn degree(class: &DivisorClass) -> Q {
    class.degree()
}

fn q_text(alpha: &str) -> Option<&'static str> {
    Some(match alpha {
        "0" => "4H -2E0 -E3 -E4 -2E1 -2E2 -3E5 -E03 -E04 -2E05 -E13 -E24 -E15 -E25",
        "3" => "4H -E0 -2E3 -E4 -3E1 -2E2 -2E5 -E03 -E34 -E05 -2E13 -E24 -E12 -E15",
        "4" => "4H -E0 -E3 -2E4 -2E1 -3E2 -2E5 -E04 -E34 -E05 -E13 -2E24 -E12 -E25",
        _ => return None,
    })
}

/// P_1, P_2, P_5 as the index swap of Q_3, Q_4, Q_0. The printed
/// displays put the wrong pair of {E03, E04, E34} into these three; the
/// swapped classes are the ones equal to η^{-1}(E_β).
fn p_text(beta: &str) -> Option<&'static str> {
    Some(match beta {
        "1" => "4H -2E1 -E2 -E5 -2E0 -3E3 -2E4 -E12 -E15 -E05 -2E13 -E24 -E03 -E34",
        "2" => "4H -E1 -2E2 -E5 -2E0 -2E3 -3E4 -E12 -E25 -E05 -E13 -2E24 -E04 -E34",
        "5" => "4H -E1 -E2 -2E5 -3E0 -2E3 -2E4 -E15 -E25 -2E05 -E13 -E24 -E03 -E04",
        _ => return None,
    })
}

const A_TEXT: &str = "4H -2E0 -2E1 -2E2 -2E3 -2E4 -2E5 -E03 -E04 -E34 -E05 -E13 -E24";
const B_TEXT: &str = "4H -2E0 -2E1 -2E2 -2E3 -2E4 -2E5 -E12 -E15 -E25 -E05 -E13 -E24";

/// Line subtracted from A to obtain Q_α for the six line labels α.
fn q_line(alpha: &str) -> Option<&'static str> {
    Some(match alpha {
        "05" => "E34",
        "13" => "E04",
        "24" => "E03",
        "12" => "E05",
        "15" => "E24",
        "25" => "E13",
        _ => return None,
    })
}

/// Line subtracted from B to obtain P_β for the six line labels β.
fn p_line(beta: &str) -> Option<&'static str> {
    Some(match beta {
        "05" => "E12",
        "13" => "E25",
        "24" => "E15",
        "34" => "E05",
        "03" => "E24",
        "04" => "E13",
        _ => return None,
    })
}

/// The named classes on Y (zero-extended to X or Y_n on request).
pub fn named_class(name: &str, space: Space) -> Result<DivisorClass> {
    let unknown = || Error::UnknownName(name.to_string());
    let on_y = |text: &str| -> Result<DivisorClass> {
        let c = DivisorClass::parse(Space::Y, text)?;
        c.embed(space).map_err(|_| Error::BasisMismatch {
            name: name.to_string(),
            space: space.to_string(),
        })
    };
    let a = || DivisorClass::parse(Space::Y, A_TEXT);
    match name {
        "D" => on_y("13H -7E1 -7E2 -7E5 -5E0 -5E3 -5E4 -3E03 -3E04 -3E34 -4E05 -4E13 -4E24 -E12 -E15 -E25"),
        "D'" => on_y("13H -5E1 -5E2 -5E5 -7E0 -7E3 -7E4 -E03 -E04 -E34 -4E05 -4E13 -4E24 -3E12 -3E15 -3E25"),
        "A" => on_y(A_TEXT),
        "B" => on_y(B_TEXT),
        "-K_X" => {
            if space != Space::X {
                return Err(Error::BasisMismatch { name: name.into(), space: space.to_string() });
            }
            let mut text = String::from("4H -2E0 -2E1 -2E2 -2E3 -2E4 -2E5");
            for (i, j) in Space::X.lines() {
                text.push_str(&format!(" -E{i}{j}"));
            }
            DivisorClass::parse(Space::X, &text)
        }
        _ => {
            let (head, label) = name.split_once('_').ok_or_else(unknown)?;
            let class = match head {
                "Q" => match (q_text(label), q_line(label)) {
                    (Some(t), _) => DivisorClass::parse(Space::Y, t)?,
                    (None, Some(l)) => a()?.sub(&DivisorClass::parse(Space::Y, l)?),
                    _ => return Err(unknown()),
                },
                "P" => match (p_text(label), p_line(label)) {
                    (Some(t), _) => DivisorClass::parse(Space::Y, t)?,
                    (None, Some(l)) => DivisorClass::parse(Space::Y, B_TEXT)?
                        .sub(&DivisorClass::parse(Space::Y, l)?),
                    _ => return Err(unknown()),
                },
                "D" => {
                    let extra = match label {
                        "05" => "H -E0 -E5 -E03 -E04 -E05",
                        "13" => "H -E1 -E3 -E03 -E34 -E13",
                        "24" => "H -E2 -E4 -E04 -E34 -E24",
                        _ => return Err(unknown()),
                    };
                    a()?.add(&DivisorClass::parse(Space::Y, extra)?)
                }
                "F" => {
                    let extra = match label {
                        "15" => "H -E1 -E5 -E05 -E13 -E15",
                        "25" => "H -E2 -E5 -E05 -E24 -E25",
                        "12" => "H -E1 -E2 -E13 -E24 -E12",
                        _ => return Err(unknown()),
                    };
                    a()?.add(&DivisorClass::parse(Space::Y, extra)?)
                }
                _ => return Err(unknown()),
            };
            class.embed(space).map_err(|_| Error::BasisMismatch {
                name: name.to_string(),
                space: space.to_string(),
            })
        }
    }
}

/// Multiplicity m^α_β: the negated coefficient of E_α in P_β.
pub fn fusion_multiplicity(alpha: &str, beta: &str) -> Result<i64> {
    let p = named_class(&format!("P_{beta}"), Space::Y)?;
    let c = -p.coeff(Generator::from_label(alpha)?);
    Ok(c.to_integer().try_into().expect("small integer"))
}

/// Class of the proper transform of the plane through p_i, p_j, p_k:
/// H minus the three points and every blown-up line it contains.
pub fn plane_class(space: Space, i: u8, j: u8, k: u8) -> Result<DivisorClass> {
    let mut c = DivisorClass::generator(space, Generator::H)?;
    for p in [i, j, k] {
        c = c.sub(&DivisorClass::generator(space, Generator::E(p))?);
    }
    for (a, b) in [(i, j), (i, k), (j, k)] {
        if let Ok(l) = DivisorClass::generator(space, Generator::line(a, b)) {
            c = c.sub(&l);
        }
    }
    Ok(c)
}

/// Point permutation generating the S_3 action on the ordered pairs
/// (5,0), (1,3), (2,4): the 3-cycle and a transposition.
pub const S3_CYCLE: [u8; 6] = [3, 2, 5, 4, 0, 1];
pub const S3_SWAP: [u8; 6] = [3, 5, 2, 0, 4, 1];

/// The involution 1↔3, 2↔4, 0↔5.
pub const INDEX_SWAP: [u8; 6] = [5, 3, 4, 1, 2, 0];

pub fn compose(a: &[u8; 6], b: &[u8; 6]) -> [u8; 6] {
    let mut out = [0; 6];
    for i in 0..6 {
        out[i] = a[b[i] as usize];
    }
    out
}

/// All six elements of the S_3 action as point permutations.
pub fn s3_elements() -> Vec<[u8; 6]> {
    let id = [0, 1, 2, 3, 4, 5];
    let c2 = compose(&S3_CYCLE, &S3_CYCLE);
    vec![
        id,
        S3_CYCLE,
        c2,
        S3_SWAP,
        compose(&S3_CYCLE, &S3_SWAP),
        compose(&c2, &S3_SWAP),
    ]
}

pub fn s3_orbit(class: &DivisorClass) -> BTreeSet<Vec<Q>> {
    s3_elements().iter().map(|p| class.permute(p).coeffs).collect()
}
