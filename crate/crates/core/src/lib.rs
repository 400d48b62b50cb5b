//! Quaternion algebras over real, dual, complex and complex-dual coefficients.
//!
//! The crate is organised bottom-up:
//!
//! - [`coeff`]: the four coefficient rings.
//! - [`quat`]: ring-generic quaternions, conjugations, norms, polar forms.
//! - [`rotations`]: SO(3), SU(2), Euler angles, Pauli bilinears.
//! - [`rigid`]: rigid motions, screws, dual quaternions and dual matrices.
//! - [`lorentz`]: complex quaternions as SL(2,ℂ), Lorentz matrices, ideals.
//! - [`lines`]: Plücker lines, dual angles, bivectors.
//! - [`kinematics`]: rates, frame derivatives and the propagator.

pub mod coeff;
pub mod error;
pub mod kinematics;
pub mod lines;
pub mod lorentz;
pub mod matrix;
pub mod quat;
pub mod rigid;
pub mod rotations;

pub use coeff::{ComplexDualScalar, ComplexScalar, DualScalar, Scalar};
pub use error::{Error, Result};
pub use matrix::{Mat3, Mat4, Matrix};
pub use quat::{PolarForm, Quaternion, Vector3};
