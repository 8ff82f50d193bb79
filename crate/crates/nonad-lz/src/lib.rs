//! Non-adiabatic transition probabilities for a decaying two-level system.
//!
//! A two-level system with tunnelling coupling Δ, bias sweep W(t) and damping
//! γ of the initially upper level is driven through its avoided crossing. The
//! survival probability P with respect to the diabatic basis is computed three
//! independent ways:
//!
//! * [`propagate`] — exact numerical integration of the non-hermitian
//!   time-dependent Schrödinger equation,
//! * [`ddp`] — the generalized Dykhne-Davis-Pechukas asymptotics built from
//!   complex crossing points with geometrical and dynamical factors,
//! * [`oscillator`] — a closed-form damped-oscillator approximation of the
//!   transition region.
//!
//! The `nonad-lz` binary reproduces the classic figure-class results as
//! machine-readable tables and cross-validates the three routes.

pub mod ddp;
pub mod error;
pub mod model;
pub mod numerics;
pub mod oscillator;
pub mod propagate;
pub mod scenario;
pub mod table;
pub mod validate;

pub use error::{Error, Result};
pub use model::{Branch, PhysicalParams, SweepProfile, TlsModel};
