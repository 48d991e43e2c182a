//! Correlation functions of timelike Liouville theory on the sphere at the
//! free-fermion coupling b = 1/sqrt(2), where the Coulomb-gas integrals
//! acquire a Vandermonde structure and close in Barnes G and Gauss 2F1.
//!
//! The crate has four layers:
//! * [`specfun`] - analytic log-Gamma, Gamma powers, digamma, Barnes G and
//!   its analytic logarithm, and 2F1 on the unit disk;
//! * [`coulomb`] - closed-form expansion coefficients for the zero-, one-,
//!   antipodal two-, and resonant three-point cases, with brute-force
//!   sphere/plane integration oracles;
//! * [`correlator`] - the fixed-zero-mode correlators: interpolating
//!   functions, power series, and Mellin-Barnes line integrals;
//! * [`zeromode`] - Gaussian-regularized zero-mode integration, the
//!   renormalized limits, the Hankel-contour prescription, and the
//!   distributional pairings.
//!
//! Everything numeric is cross-checked twice: closed forms against
//! quadrature or Monte Carlo oracles, series against contour integrals.

pub mod cplx;
pub mod error;
pub mod mpf;
pub mod correlator;
pub mod coulomb;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod verify;
pub mod zeromode;

pub use cplx::{c, r, Complex64, C};
pub use error::{Error, Result};
