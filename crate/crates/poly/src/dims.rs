//! Dimension certificates for |D|, |D - E_4| and the quintic pencils.

use cremona_core::divisor::{named_class, DivisorClass, Generator, Space};
use cremona_core::QMatrix;

use crate::cremona::{pencil_entry_class, Cremona, PENCIL_TABLE};
use crate::error::Result;
use crate::linsys::{dimension_certificate, Conditions, DimensionCertificate};
use crate::multipoly::MultiPoly;

pub fn certificate(class: &DivisorClass, c: &Cremona, witnesses: &[MultiPoly]) -> Result<DimensionCertificate> {
    let (d, conds) = Conditions::from_class(class)?;
    Ok(dimension_certificate(d, &conds, &c.config, witnesses))
}

/// |D| with witnesses s_0, ..., s_3.
pub fn d_certificate(c: &Cremona) -> Result<DimensionCertificate> {
    certificate(&named_class("D", Space::Y)?, c, &c.s)
}

/// |D - E_4| with witnesses s_1, s'_3, s''_0.
pub fn d_minus_e4_certificate(c: &Cremona) -> Result<DimensionCertificate> {
    let class = named_class("D", Space::Y)?.sub(&DivisorClass::generator(Space::Y, Generator::E(4))?);
    certificate(&class, c, &[c.s[1].clone(), c.s_prime[3].clone(), c.s_second[0].clone()])
}

#[derive(Clone, Debug)]
pub struct PencilOutcome {
    pub class: &'static str,
    pub certificate: DimensionCertificate,
    /// Every listed product plus markers has exactly this class.
    pub classes_match: bool,
    /// Rank of the listed products; 2 means they are dependent in the pencil.
    pub rank: usize,
    pub entries: usize,
}

impl PencilOutcome {
    pub fn passed(&self) -> bool {
        self.certificate.exact() == Some(2) && self.classes_match && self.rank == 2
    }
}

pub fn pencils(c: &Cremona) -> Result<Vec<PencilOutcome>> {
    PENCIL_TABLE
        .iter()
        .map(|row| {
            let class = named_class(row.class, Space::Y)?;
            let mut classes_match = true;
            for e in row.entries {
                classes_match &= pencil_entry_class(e)? == class;
            }
            let products: Vec<MultiPoly> = row.entries.iter().map(|(q, _)| c.quintic(*q)).collect();
            let certificate = certificate(&class, c, &products)?;
            let monos: Vec<_> = products.iter().flat_map(|p| p.terms().keys().copied()).collect();
            let rows: Vec<Vec<_>> = products
                .iter()
                .map(|p| monos.iter().map(|e| p.terms().get(e).cloned().unwrap_or_default()).collect())
                .collect();
            let rank = QMatrix::from_rows(&rows).rank();
            Ok(PencilOutcome { class: row.class, certificate, classes_match, rank, entries: products.len() })
        })
        .collect()
}
