//! Exact polynomial computations for the degree-13 Cremona transformation
//! of P^3 attached to six points: quartics, linear systems, sections,
//! Jacobians, the dual configuration and rational-normal-curve
//! restrictions.

pub mod anticanonical;
pub mod config;
pub mod cremona;
pub mod displays;
pub mod dims;
pub mod dual;
pub mod error;
pub mod exceptional;
pub mod expr;
pub mod geometry;
pub mod inverse;
pub mod jacobian;
pub mod lemmas;
pub mod linsys;
pub mod modular;
pub mod multipoly;
pub mod planar;
pub mod points;
pub mod quartics;
pub mod rnc;

pub use config::{Fixture, PointConfig};
pub use error::{PolyError, Result};
pub use multipoly::MultiPoly;
