//! Exact tensor calculus on homogeneous almost-contact metric manifolds.
//!
//! A manifold is given by constant frame data: structure constants
//! `[e_i, e_j] = Σ_k c_ij^k e_k`, a constant metric, `φ` and `ξ`. From that
//! the crate derives the Levi-Civita connection, the curvature hierarchy,
//! vector-field calculus over the ring `ℚ[y_1..y_N, exp(±y_N)]`, and the
//! Ricci-Bourguignon soliton equations. All arithmetic is exact.
#![no_std]

extern crate alloc;

pub mod connection;
pub mod curvature;
pub mod error;
pub mod family;
pub mod fields;
pub mod manifold;
pub mod rational;
pub mod ring;
pub mod soliton;
pub mod tensor;
pub mod theorems;

pub use connection::{levi_civita, ConnectionCoeffs};
pub use curvature::CurvatureBundle;
pub use error::{Error, Result};
pub use fields::VectorField;
pub use manifold::ManifoldSpec;
pub use rational::Rational;
pub use ring::{Monomial, RingElement};
pub use tensor::FrameTensor;
