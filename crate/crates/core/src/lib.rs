//! Exact structure-constant engine for finite-dimensional Hopf algebras,
//! lazy 2-cocycles and the constructions built on them.

pub mod biproduct;
pub mod cocycle;
pub mod double;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod io;
pub mod lift;
pub mod linalg;
pub mod linmap;
pub mod report;
pub mod scalar;
pub mod yd;

pub use error::{Error, Result};
pub use linalg::{solve_linear_system, LinearSolution, Matrix};
pub use linmap::LinMap;
pub use report::{Check, Report, Status, Witness};
pub use scalar::{Cyclotomic, Field, FieldSpec, Fp, Rational};

pub type Q = Rational;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type QZeta3 = Cyclotomic<3>;
