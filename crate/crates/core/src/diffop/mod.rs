//! Differential operators in `(r, φ)` and their action on gauged eigenfunctions.

pub mod op;
pub mod quasi;

pub use op::{op_commutator, op_compose, op_equal, Op2D};
pub use quasi::{op_apply, QuasiPoly};
