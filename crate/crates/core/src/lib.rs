//! Rigidity analysis of convex braced polygons in the plane.
//!
//! A *braced polygon graph* is a Hamiltonian graph with a distinguished
//! Hamilton cycle (the boundary polygon) plus interior chords (braces).
//! This crate decides and certifies rigidity properties of their planar
//! realisations: infinitesimal rigidity, equilibrium stresses and their
//! sign patterns, super stability, convex rigidity, and witnesses of
//! non-global rigidity.  It also enumerates and classifies all braced
//! polygonal circuits on small vertex counts.
//!
//! The numeric core is generic over the scalar type through [`Real`];
//! `f64` aliases are exported at the crate root and are what the census
//! and CLI layers use.

pub mod census;
pub mod combin;
pub mod construct;
pub mod error;
pub mod linalg;
pub mod model;
pub mod render;

pub use error::Error;

/// Scalar type for all numeric computation: `f32` or `f64`.
pub trait Real: nalgebra::RealField + num_traits::FromPrimitive + Copy {}
impl Real for f32 {}
impl Real for f64 {}

pub type Result<T> = std::result::Result<T, Error>;

pub type Configuration64 = model::Configuration<f64>;
pub type Framework64 = model::Framework<f64>;
pub type StressVector64 = model::StressVector<f64>;
pub type TurnAngleProfile64 = model::TurnAngleProfile<f64>;

/// Default scale-invariant tolerance for geometric sign decisions.
pub const TOL_GEOM: f64 = 1e-9;
/// Default relative tolerance for numerical rank decisions.
pub const TOL_RANK: f64 = 1e-9;
/// Default relative tolerance for eigenvalue sign classification.
pub const TOL_PSD: f64 = 1e-8;

/// Tolerance bundle threaded through analyses; fields mirror the CLI flags.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances<T: Real> {
    pub geom: T,
    pub rank: T,
    pub psd: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances {
            geom: T::from_f64(TOL_GEOM).unwrap(),
            rank: T::from_f64(TOL_RANK).unwrap(),
            psd: T::from_f64(TOL_PSD).unwrap(),
        }
    }
}
