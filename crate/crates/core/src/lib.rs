//! Exact Koornwinder polynomials of type (C-check, C-check) via the polynomial
//! (Noumi) representation of the double affine Hecke algebra.
//!
//! The crate builds non-symmetric, symmetric and anti-symmetric Koornwinder
//! polynomials by exact big-rational linear algebra, and evaluates the attached
//! closed-form identities (spectra, duality, evaluation, quadratic norms,
//! constant term) either exactly or by spectrally accurate torus quadrature.
//!
//! Module map:
//! - [`exactring`]: sparse Laurent polynomials over a generic scalar, Weyl and
//!   affine substitutions, divided differences.
//! - [`rootsys`]: the affine root system, (extended) Weyl group combinatorics,
//!   orbits, orders and downsets, multiplicity data.
//! - [`heckeops`]: parameter sets and the Hecke operators `T_i`, `Y^lam`,
//!   intertwiners, (anti)symmetrizers, and the relation checker.
//! - [`koornwinder`]: triangular eigenfunction solvers producing the polynomial
//!   families, plus exact structural checks (duality, spectral action, ...).
//! - [`closedforms`]: exact evaluation/norm product formulas, q-Pochhammer
//!   symbols, the Gustafson constant-term product.
//! - [`torusquad`]: floating-point torus quadrature, residue weights, the
//!   discrete transform round trip.

pub mod closedforms;
pub mod error;
pub mod exactring;
pub mod heckeops;
pub mod koornwinder;
pub mod linalg;
pub mod rootsys;
pub mod scalar;
pub mod torusquad;

/// Exact scalar used throughout the algebraic kernels.
pub type Rat = num_rational::BigRational;

/// Complex double used by the quadrature module.
pub type C64 = num_complex::Complex64;

/// Laurent polynomial with exact rational coefficients.
pub type Poly = exactring::LaurentPoly<Rat>;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
