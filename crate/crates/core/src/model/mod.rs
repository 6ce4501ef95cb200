//! The concrete system: parameters, Hamiltonian, integrals, eigenfunctions.

pub mod appendix;
pub mod hamiltonian;
pub mod integral;
pub mod params;
pub mod polys;
pub mod states;
pub mod wavefn;

pub use hamiltonian::{angular_potential, build_hamiltonian, build_l1, t_function};
pub use integral::{build_l2, CConstants, IntegralBundle};
pub use params::SystemParams;
