use thiserror::Error;

/// Errors produced by model construction and the numerical kernels.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Off-diagonal coupling vanishes; component ratios are undefined.
    #[error("degenerate model: off-diagonal coupling h12 = 0")]
    DegenerateModel,

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// The two branch-point families coalesce onto the real axis at
    /// gamma_tilde = 1 and the closed forms lose meaning.
    #[error("critical damping: gamma_tilde = 1 separates the two regimes")]
    CriticalDamping,

    #[error("wrong regime: {0}")]
    WrongRegime(String),

    #[error("integral diverges: {0}")]
    Divergence(String),

    #[error(
        "step controller did not converge: {steps} steps used, reached u = {u_reached}, \
         last step size {last_step:e}"
    )]
    NonConvergence {
        steps: usize,
        u_reached: f64,
        last_step: f64,
    },

    #[error("integration path passes through a branch point near u = {0}")]
    PathThroughBranchPoint(num_complex::Complex64),

    /// DDP sum over contributing crossing points is empty.
    #[error("no contributing crossing points above the integration contour")]
    EmptySum,
}

pub type Result<T> = std::result::Result<T, Error>;
