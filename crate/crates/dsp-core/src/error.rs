use std::fmt;

/// Errors raised by the DSP primitives.
#[derive(Debug, Clone, PartialEq)]
pub enum DspError {
    /// Mix frequency outside the representable (Nyquist) range.
    FrequencyOutOfRange { f_hz: f64, nyquist_hz: f64 },
    /// Requested resampling factor is not supported.
    UnsupportedFactor(usize),
    /// Input has too few samples for the requested operation.
    InputTooShort { len: usize, min: usize },
    /// A parameter violated its documented precondition.
    InvalidParam(&'static str),
}

impl fmt::Display for DspError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DspError::FrequencyOutOfRange { f_hz, nyquist_hz } => {
                write!(f, "frequency {f_hz} Hz outside Nyquist range (+-{nyquist_hz} Hz)")
            }
            DspError::UnsupportedFactor(k) => write!(f, "unsupported rate-change factor {k}"),
            DspError::InputTooShort { len, min } => {
                write!(f, "input too short: {len} samples, need at least {min}")
            }
            DspError::InvalidParam(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl std::error::Error for DspError {}

pub type Result<T> = std::result::Result<T, DspError>;
