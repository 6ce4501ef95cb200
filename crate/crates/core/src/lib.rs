//! Exact verification engine for the rationally extended Smorodinsky–Winternitz
//! system whose angular wavefunctions are exceptional Jacobi polynomials.
//!
//! The crate rebuilds the Hamiltonian and its second- and fourth-order
//! integrals as normal-ordered differential operators with exact rational
//! coefficients, and certifies:
//!
//! * `[H, L1] = [H, L2] = 0` and the determining equations behind `L2`
//!   ([`model`]);
//! * the eigen-identities of the exceptional Jacobi and Laguerre families
//!   ([`model::polys`]);
//! * the second-degree equation satisfied by the potential and its link to
//!   Painlevé VI ([`painleve`]);
//! * the cubic symmetry algebra and its Casimir ([`polyalg`]);
//! * deformed-oscillator structure functions and spectra ([`oscillator`]);
//! * an independent finite-difference spectrum ([`numeric`]).
//!
//! Runnable walkthroughs live in `examples/`.

pub mod cli;
pub mod diffop;
pub mod error;
pub mod exact;
pub mod model;
pub mod numeric;
pub mod oscillator;
pub mod painleve;
pub mod polyalg;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{int, rat, Rational};
pub use model::SystemParams;
