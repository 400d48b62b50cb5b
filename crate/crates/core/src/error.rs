use thiserror::Error;

/// Failure modes shared by every module of the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value is not invertible (modulus {modulus:e} at or below tolerance)")]
    NotInvertible { modulus: f64 },
    #[error("the {0} conjugation does not exist for this coefficient ring")]
    UnsupportedConjugation(&'static str),
    #[error("axis is undefined because the vector part is null")]
    DegenerateAxis,
    #[error("expected a unit element, norm residual {residual:e}")]
    NotUnit { residual: f64 },
    #[error("matrix is not a proper rotation (residual {residual:e})")]
    NotARotation { residual: f64 },
    #[error("gimbal lock: |cos(pitch)| = {cos_pitch:e}")]
    GimbalLock { cos_pitch: f64 },
    #[error("axis does not satisfy <u,u> = 1 (residual {residual:e})")]
    AxisNotUnit { residual: f64 },
    #[error("element is not idempotent (residual {residual:e})")]
    NotIdempotent { residual: f64 },
    #[error("constraint violated: {0}")]
    ConstraintViolated(&'static str),
    #[error("factorization check failed: {0}")]
    FactorizationViolated(&'static str),
    #[error("line direction is not a unit vector (norm {norm:e})")]
    DirNotUnit { norm: f64 },
    #[error("dual vector is not a dual unit vector (residual {residual:e})")]
    NotDualUnit { residual: f64 },
    #[error("lines are parallel")]
    ParallelLines,
    #[error("element does not lie in the requested ideal (residual {residual:e})")]
    NotInIdeal { residual: f64 },
    #[error("rate series is empty")]
    EmptyRateSeries,
    #[error("sample times are not strictly increasing at index {index}")]
    NonmonotoneTime { index: usize },
    #[error("step size must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("rate series does not cover t = {t}")]
    OutOfRange { t: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
