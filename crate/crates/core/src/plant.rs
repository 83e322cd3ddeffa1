//! The controlled pendulum and its linearization.
//!
//! The plant is a damped pendulum driven by a torque input `u`:
//!
//! ```text
//! y'' = -2 xi omega_n y' - omega_n^2 sin(y) + lambda u
//! ```
//!
//! Around the hanging equilibrium `sin(y) ~ y`, which gives the second-order
//! low-pass transfer function used by all frequency-domain analysis:
//!
//! ```text
//! P(s) = lambda / (s^2 + 2 xi omega_n s + omega_n^2)
//! ```

use crate::error::{Error, Result};

/// Physical parameters of the pendulum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantParams {
    /// Input torque gain λ (> 0).
    pub lambda_gain: f64,
    /// Damping ratio ξ in [0, 1]. Frequency-domain routines additionally
    /// require ξ > 0 (see [`freq_response`]).
    pub xi: f64,
    /// Undamped natural frequency ω_n in rad/s (> 0).
    pub omega_n: f64,
}

impl PlantParams {
    /// Validates and builds plant parameters.
    pub fn new(lambda_gain: f64, xi: f64, omega_n: f64) -> Result<Self> {
        if !(lambda_gain.is_finite() && xi.is_finite() && omega_n.is_finite()) {
            return Err(Error::NonFinite {
                what: "plant parameters",
            });
        }
        if lambda_gain <= 0.0 {
            return Err(Error::InvalidParam {
                what: "lambda_gain must be > 0",
            });
        }
        if !(0.0..=1.0).contains(&xi) {
            return Err(Error::InvalidParam {
                what: "xi must lie in [0, 1]",
            });
        }
        if omega_n <= 0.0 {
            return Err(Error::InvalidParam {
                what: "omega_n must be > 0",
            });
        }
        Ok(Self {
            lambda_gain,
            xi,
            omega_n,
        })
    }

    /// Period of the undamped small-angle oscillation, `2 pi / omega_n`.
    pub fn natural_period(&self) -> f64 {
        2.0 * core::f64::consts::PI / self.omega_n
    }
}

/// Instantaneous plant state: angle `y` (rad) and angular rate `ydot` (rad/s).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlantState {
    pub y: f64,
    pub ydot: f64,
}

impl PlantState {
    pub fn new(y: f64, ydot: f64) -> Self {
        Self { y, ydot }
    }
}

/// Time derivative of a [`PlantState`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantDerivative {
    pub dy: f64,
    pub dydot: f64,
}

/// Full nonlinear pendulum vector field under the torque input `u`.
pub fn vector_field(state: PlantState, u: f64, p: &PlantParams) -> Result<PlantDerivative> {
    if !(state.y.is_finite() && state.ydot.is_finite() && u.is_finite()) {
        return Err(Error::NonFinite {
            what: "vector_field state or input",
        });
    }
    Ok(vector_field_raw(state, u, p))
}

/// Same as [`vector_field`] but without the finiteness check; used on the
/// integrator's hot path, where divergence is caught once per accepted step.
#[inline]
pub(crate) fn vector_field_raw(state: PlantState, u: f64, p: &PlantParams) -> PlantDerivative {
    PlantDerivative {
        dy: state.ydot,
        dydot: -2.0 * p.xi * p.omega_n * state.ydot - p.omega_n * p.omega_n * libm::sin(state.y)
            + p.lambda_gain * u,
    }
}

/// Value of `P(j omega)` with its magnitude and continuous phase.
///
/// Construct via [`freq_response`]; the accessors guarantee a consistent
/// phase branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreqResponse {
    re: f64,
    im: f64,
    magnitude: f64,
    phase: f64,
}

impl FreqResponse {
    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// Phase of `P(j omega)` on the branch `[-pi, 0]`, continuous in `omega`.
    pub fn phase(&self) -> f64 {
        self.phase
    }
}

/// Frequency response of the linearized plant at `omega >= 0` rad/s.
///
/// The phase is computed as the negated argument of the denominator,
/// `-atan2(2 xi omega_n omega, omega_n^2 - omega^2)`, which picks the branch
/// on which `-phase` increases strictly from 0 towards `pi` as `omega` grows
/// (for ξ > 0). That strict monotonicity is what makes the harmonic-balance
/// phase equation uniquely solvable.
///
/// With ξ = 0 the response has a pole at `omega = omega_n`; requesting that
/// point is an error.
pub fn freq_response(omega: f64, p: &PlantParams) -> Result<FreqResponse> {
    if !omega.is_finite() {
        return Err(Error::NonFinite {
            what: "freq_response omega",
        });
    }
    if omega < 0.0 {
        return Err(Error::InvalidParam {
            what: "omega must be >= 0",
        });
    }
    let re_den = p.omega_n * p.omega_n - omega * omega;
    let im_den = 2.0 * p.xi * p.omega_n * omega;
    if re_den == 0.0 && im_den == 0.0 {
        return Err(Error::PoleOnAxis { omega });
    }
    let den_norm2 = re_den * re_den + im_den * im_den;
    Ok(FreqResponse {
        re: p.lambda_gain * re_den / den_norm2,
        im: -p.lambda_gain * im_den / den_norm2,
        magnitude: p.lambda_gain / libm::sqrt(den_norm2),
        phase: -libm::atan2(im_den, re_den),
    })
}
