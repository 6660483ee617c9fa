//! Lattice-level machinery for the blow-up of P^3 at six points and fifteen
//! lines: Picard-group bookkeeping, the F_2^4 geometry of the Kummer nodes,
//! the Néron–Severi lattice of the Kummer K3, and the isometries acting on
//! both.

pub mod divisor;
pub mod error;
pub mod hnf;
pub mod isometry;
pub mod kummer;
pub mod matrix;
pub mod rational;
pub mod twotorsion;

pub use divisor::{Basis, DivisorClass, Generator, Space};
pub use error::{Error, Result};
pub use kummer::{NsClass, NsLattice};
pub use matrix::QMatrix;
pub use rational::Q;
pub use twotorsion::TwoTorsionPoint;
