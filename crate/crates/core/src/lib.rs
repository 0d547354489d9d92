//! Exact symbolic intersection theory for simply connected elliptic surfaces
//! with at most two odd-multiplicity multiple fibers, and the evaluation of
//! the degree-0, -2 and -4 Donaldson polynomials of their odd-fiber-degree
//! moduli spaces.
//!
//! Everything is computed over the field of multivariate rational functions
//! with rational coefficients; there is no floating point anywhere and every
//! identity is checked by exact cross-multiplication.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `donaldson-cli` crate carries the command line and file formats.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod curvesheaf;
pub mod donaldson;
pub mod elemmod;
pub mod error;
pub mod exact;
pub mod grr;
pub mod hilb2;
pub mod prodcalc;
pub mod surface;

pub use error::EngineError;
pub use exact::{Poly, Rat, RatFunc, Var};
pub use surface::{EllipticSurface, Gen2, PairingCtx, SurfaceClass};
