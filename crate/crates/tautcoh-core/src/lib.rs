//! Cohomology of symmetric powers of tautological bundles on Hilbert schemes
//! of points on surfaces, computed at two levels of resolution:
//!
//! * graded dimension vectors ([`graded::GradedDim`]), where the known
//!   direct-sum decompositions of `H*(X^[n], S^k L^[n])` become identities
//!   of ℤ-graded super vector spaces, and
//! * explicit bases with exact rational linear algebra ([`linalg`]), where
//!   the residual term of the twisted decomposition is the kernel of a
//!   concrete multiplication map.
//!
//! [`formulas`] evaluates the decompositions, [`surface`] supplies input
//! data (presets by Hodge numbers, and ℙ² with honest monomial bases), and
//! [`checker`] cross-validates every closed formula against an independent
//! route: enumeration, specialization, or Euler characteristics.
//!
//! The crate is `no_std` + `alloc`; everything is exact (no floats).

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod checker;
pub mod error;
pub mod formulas;
pub mod graded;
pub mod linalg;
pub mod surface;

pub use error::Error;
pub use graded::{BasisSpace, GradedDim, SymMonomial};
pub use linalg::{LinearMapData, Rational, RationalMatrix};
pub use surface::{MultTable, Preset, Slot, SurfaceData};
