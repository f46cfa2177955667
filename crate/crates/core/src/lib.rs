//! Quadratic character sums `Σ σ(f(x))` over finite fields of characteristic
//! greater than 3, their transformation and descent formulas as executable
//! coefficient maps, and closed-form evaluations for a few families.

pub mod arith;
pub mod closed_forms;
pub mod error;
pub mod field;
pub mod master;
pub mod poly;
pub mod sums;
pub mod transforms;

pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};
pub use master::{master_sides, CoeffMatrix3, MasterSides};
pub use poly::Poly;
pub use sums::{char_sum, CharSum, DEFAULT_BUDGET};
