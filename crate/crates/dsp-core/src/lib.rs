//! Sample-level signal-processing primitives for the backscatter link simulator:
//! waveform containers, complex/cosine mixers, FIR design and filtering, power-of-two
//! rate conversion, STFT spectrograms, and IQ/CSV file I/O.
//!
//! Everything here is a pure function over value-semantic buffers; there is no
//! shared mutable state and all types are `Send`.

mod error;
mod filter;
mod mix;
mod resample;
mod spectrogram;
mod waveform;

pub mod io;

pub use error::{DspError, Result};
pub use filter::{design_gaussian_filter, design_halfband, design_lowpass, FirFilter};
pub use mix::{mix_complex, mix_real_cosine, CosineMixer, PhaseMode};
pub use resample::interpolate;
pub use spectrogram::{Spectrogram, Window, DB_FLOOR};
pub use waveform::{ComplexWaveform, RealWaveform, Waveform};

pub use num_complex::Complex64;
