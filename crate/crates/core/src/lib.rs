//! Exact commutative algebra for curves in projective space: Gröbner bases,
//! free resolutions, generic initial ideals, Hartshorne-Rao modules, and the
//! closed-form bounds for extremal curves.
//!
//! Everything is generic over the coefficient [`Field`]; the aliases at the
//! crate root fix the exact rationals.

pub mod betti;
pub mod cohomology;
pub mod construct;
pub mod error;
pub mod field;
pub mod formulas;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod monomial_ideal;
pub mod ops;
pub mod oracle;
pub mod poly;
pub mod resolution;
pub mod verify;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use field::{Field, Rational, Zp, Zp32003};
pub use groebner::{buchberger, GroebnerBasis};
pub use ideal::GradedIdeal;
pub use linalg::Matrix;
pub use module::{FreeModuleElement, ModuleOrder, Term};
pub use monomial::Monomial;
pub use monomial_ideal::MonomialIdeal;
pub use poly::Polynomial;
pub use resolution::{free_resolution, Resolution};

pub type QPoly = Polynomial<Rational>;
pub type QIdeal = GradedIdeal<Rational>;
pub type QResolution = Resolution<Rational>;
pub type QMatrix = Matrix<Rational>;
