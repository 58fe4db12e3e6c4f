//! Bound states and information-theoretic measures for diatomic molecules
//! in a generalized Kratzer potential `v(r) = x/r + y/r^2 + z`.
//!
//! The crate is a pipeline:
//!
//! * [`molparams`] — spectroscopic constants, unit conversions, potential
//!   parameterization (Mie and Kratzer-Fues forms);
//! * [`specfun`] — the special functions everything else is built from
//!   (log-gamma, associated Laguerre/Legendre, spherical Bessel), plus a
//!   log-domain scalar type for quantities whose natural scale overflows
//!   `f64`;
//! * [`quadrature`] — adaptive Gauss-Kronrod integration on finite and
//!   semi-infinite intervals with user-supplied break points;
//! * [`kratzer`] — the exact radial eigenstates, their energies, and
//!   pointwise wavefunction evaluation;
//! * [`moments`] — closed-form radial expectation values and their
//!   quadrature cross-checks;
//! * [`pspace`] — momentum-space wavefunctions via the spherical Bessel
//!   transform and tabulated momentum densities;
//! * [`infomeasures`] — Fisher information, Shannon entropies, the
//!   Fisher-Shannon complexity, and the uncertainty-bound checks.
//!
//! All quantities are in Hartree atomic units unless a function says
//! otherwise.

pub mod infomeasures;
pub mod kratzer;
pub mod molparams;
pub mod moments;
pub mod pspace;
pub mod quadrature;
pub mod specfun;
