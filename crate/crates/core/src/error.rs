use alloc::boxed::Box;
use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    /// An input that must be finite was NaN or infinite.
    #[error("non-finite input: {what}")]
    NonFinite { what: &'static str },

    /// A parameter violated its documented range.
    #[error("invalid parameter: {what}")]
    InvalidParam { what: &'static str },

    /// Frequency response requested at the undamped resonance, where the
    /// transfer function has a pole on the imaginary axis.
    #[error("frequency response has a pole at omega = {omega} (zero damping at resonance)")]
    PoleOnAxis { omega: f64 },

    /// The burst does not fit in a half-period of the oscillation, so the
    /// one-pulse-per-half-cycle model does not apply.
    #[error("burst width {beta} s does not fit a half-period at omega = {omega} rad/s")]
    BurstTooWide { beta: f64, omega: f64 },

    /// A root bracket failed to close or an internal consistency check
    /// tripped; indicates a bug or a pathological input.
    #[error("bracketing failure in {what}")]
    BracketingFailure { what: &'static str },

    /// The requested amplitude cannot be produced by any burst width in the
    /// search bracket.
    #[error(
        "amplitude {a_star} is outside the reachable range [{amp_lo}, {amp_hi}] \
         for burst widths in [{beta_lo}, {beta_hi}]"
    )]
    UnachievableAmplitude {
        a_star: f64,
        beta_lo: f64,
        beta_hi: f64,
        amp_lo: f64,
        amp_hi: f64,
    },

    /// The predicted amplitude failed its monotonicity check on the scanned
    /// width range; the inverse design map is ill-posed there.
    #[error("predicted amplitude is not increasing near beta = {beta}")]
    NonMonotoneAmplitude { beta: f64 },

    /// An error from a pointwise computation, annotated with the grid value
    /// that produced it.
    #[error("at beta = {beta}: {source}")]
    AtBeta { beta: f64, source: Box<Error> },

    /// The adaptation filter was asked to step backwards in time.
    #[error("time reversal: cannot advance filter from t = {from} to t = {to}")]
    TimeReversal { from: f64, to: f64 },

    /// The integrator produced a non-finite state.
    #[error("state diverged; last valid time t = {t}")]
    Diverged { t: f64 },

    /// A measurement window did not contain enough data.
    #[error("measurement window too short: need {needed} s, have {available} s")]
    WindowTooShort { needed: f64, available: f64 },

    /// A branch-specific cost was evaluated outside its regime.
    #[error("{what} evaluated outside its regime (g0 = {g0}, g2 = {g2})")]
    WrongBranch { what: &'static str, g0: f64, g2: f64 },
}

impl Error {
    /// Wraps an error with the grid value that produced it.
    pub(crate) fn at_beta(self, beta: f64) -> Error {
        Error::AtBeta {
            beta,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
