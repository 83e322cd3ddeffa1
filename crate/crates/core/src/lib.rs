//! Burst-actuated rhythmic control of a damped pendulum.
//!
//! The control architecture studied here keeps a pendulum swinging at a
//! prescribed amplitude using only two kinds of sensory events and a single
//! scalar memory:
//!
//! * every zero crossing of the angle fires a unit torque **burst** along the
//!   direction of motion, whose duration is the current burst width β;
//! * every peak of the swing nudges β up or down through a leaky integrator,
//!   depending on whether the peak magnitude under- or overshoots the target
//!   amplitude.
//!
//! The crate provides the pieces needed to predict, simulate, and tune that
//! loop:
//!
//! * [`plant`] — pendulum vector field and the linearization's frequency
//!   response;
//! * [`describing_fn`] — describing function of the burst actuator,
//!   harmonic-balance solution of the induced limit cycle, and the inverse
//!   design map from a target amplitude to a burst width;
//! * [`simulator`] — event-driven closed-loop simulation with exact
//!   adaptation-filter updates and dense-output event localization;
//! * [`slow_model`] — the scalar recursion obeyed by the burst width sampled
//!   at actuation events, its fixed point, ultimate bound, and bifurcation;
//! * [`robust_opt`] — min–max tuning of the adaptation gain against an
//!   uncertain design burst width.
//!
//! The crate is `no_std` (with `alloc`); everything that touches files,
//! threads, or a terminal lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod describing_fn;
pub mod plant;
pub mod robust_opt;
pub mod simulator;
pub mod slow_model;

pub use error::{Error, Result};
