//! The nine quartics Q_alpha and multiplicity profiles of divisor classes.

use std::collections::BTreeMap;

use cremona_core::divisor::{named_class, DivisorClass, Generator, Space, ALPHA};
use num_traits::{Signed, ToPrimitive};

use crate::config::PointConfig;
use crate::error::{PolyError, Result};
use crate::geometry::{mult_along_line, mult_at_point};
use crate::linsys::linear_system_of_class;
use crate::multipoly::MultiPoly;

/// Unique section of Q_alpha on the configuration.
pub fn quartic(alpha: &str, config: &PointConfig) -> Result<MultiPoly> {
    let class = named_class(&format!("Q_{alpha}"), Space::Y)?;
    unique_section(&class, config)
}

/// The section of a class whose linear system is one point.
pub fn unique_section(class: &DivisorClass, config: &PointConfig) -> Result<MultiPoly> {
    let sys = linear_system_of_class(class, config)?;
    match sys.basis.as_slice() {
        [f] => Ok(f.clone()),
        other => Err(PolyError::Degenerate(format!("|{class}| has dimension {} on {}", other.len(), config.name))),
    }
}

pub fn all_quartics(config: &PointConfig) -> Result<BTreeMap<String, MultiPoly>> {
    ALPHA.iter().map(|a| Ok((a.to_string(), quartic(a, config)?))).collect()
}

/// One entry of a multiplicity profile: the generator, the multiplicity the
/// class asks for, and the one measured on the polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub generator: Generator,
    pub expected: u32,
    pub measured: u32,
}

/// Degree plus multiplicity at every point and along every blown-up line.
/// A generic member of the class has exactly the prescribed multiplicities.
pub fn profile(f: &MultiPoly, class: &DivisorClass, config: &PointConfig) -> Result<Vec<ProfileEntry>> {
    let want = |g: Generator| -> u32 {
        let c = -class.coeff(g);
        if c.is_positive() {
            c.to_integer().to_u32().expect("small multiplicity")
        } else {
            0
        }
    };
    let mut out = Vec::new();
    let deg = class.coeff(Generator::H).to_integer().to_u32().unwrap_or(0);
    out.push(ProfileEntry { generator: Generator::H, expected: deg, measured: f.degree().unwrap_or(0) });
    for i in 0..class.space.npoints() {
        let g = Generator::E(i as u8);
        out.push(ProfileEntry { generator: g, expected: want(g), measured: mult_at_point(f, config.point(i))? });
    }
    for (i, j) in class.space.lines() {
        let g = Generator::line(i, j);
        let measured = mult_along_line(f, config.point(i as usize), config.point(j as usize))?;
        out.push(ProfileEntry { generator: g, expected: want(g), measured });
    }
    Ok(out)
}

pub fn profile_matches(entries: &[ProfileEntry]) -> bool {
    entries.iter().all(|e| e.expected == e.measured)
}
