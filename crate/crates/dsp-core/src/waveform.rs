use num_complex::Complex64;

use crate::error::Result;
use crate::filter::FirFilter;
use crate::spectrogram::{Spectrogram, Window};

/// Complex baseband sample vector with rate and nominal center-frequency annotation.
///
/// `center_freq_hz` records which RF/IF frequency a baseband frequency of zero
/// represents; mixing operations keep it up to date.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexWaveform {
    pub samples: Vec<Complex64>,
    pub sample_rate_hz: f64,
    pub center_freq_hz: f64,
}

/// Real-valued passband (IF) sample vector with sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct RealWaveform {
    pub samples: Vec<f64>,
    pub sample_rate_hz: f64,
}

impl ComplexWaveform {
    pub fn new(samples: Vec<Complex64>, sample_rate_hz: f64, center_freq_hz: f64) -> Self {
        assert!(!samples.is_empty(), "waveform must contain samples");
        assert!(sample_rate_hz > 0.0, "sample rate must be positive");
        Self { samples, sample_rate_hz, center_freq_hz }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.len() as f64 / self.sample_rate_hz
    }

    /// Mean squared magnitude over the buffer.
    pub fn power(&self) -> f64 {
        self.samples.iter().map(|s| s.norm_sqr()).sum::<f64>() / self.len() as f64
    }

    /// Drop the quadrature component, keeping the in-phase passband signal.
    pub fn real_part(&self) -> RealWaveform {
        RealWaveform::new(self.samples.iter().map(|s| s.re).collect(), self.sample_rate_hz)
    }
}

impl RealWaveform {
    pub fn new(samples: Vec<f64>, sample_rate_hz: f64) -> Self {
        assert!(!samples.is_empty(), "waveform must contain samples");
        assert!(sample_rate_hz > 0.0, "sample rate must be positive");
        Self { samples, sample_rate_hz }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.len() as f64 / self.sample_rate_hz
    }

    pub fn power(&self) -> f64 {
        self.samples.iter().map(|s| s * s).sum::<f64>() / self.len() as f64
    }

    /// Reinterpret as a complex waveform with zero quadrature, centered at 0 Hz.
    pub fn to_complex(&self) -> ComplexWaveform {
        ComplexWaveform::new(
            self.samples.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            self.sample_rate_hz,
            0.0,
        )
    }
}

pub(crate) mod sample {
    use num_complex::Complex64;

    /// Arithmetic needed by the generic filtering kernels.
    pub trait Sample:
        Copy + std::ops::Add<Output = Self> + std::ops::Mul<f64, Output = Self>
    {
        const ZERO: Self;
    }

    impl Sample for f64 {
        const ZERO: f64 = 0.0;
    }

    impl Sample for Complex64 {
        const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    }
}

mod private {
    pub trait Sealed {}
    impl Sealed for super::ComplexWaveform {}
    impl Sealed for super::RealWaveform {}
}

/// Operations shared by real and complex waveforms.
pub trait Waveform: private::Sealed + Sized + Clone {
    /// Linear convolution with `filter`, same-length output. With
    /// `compensate_delay` the output is advanced by the filter group delay so
    /// filtered and unfiltered streams stay sample-aligned.
    fn fir_filter(&self, filter: &FirFilter, compensate_delay: bool) -> Self;

    /// Three halfband-lowpass + keep-every-2nd stages; total rate / 8.
    fn decimate_cascade(&self) -> Result<Self>;

    /// Windowed STFT magnitude in dB. Real input spans [0, fs/2], complex
    /// input [-fs/2, fs/2), both at fs/fft_size bin spacing.
    fn stft_spectrogram(&self, fft_size: usize, hop: usize, window: Window) -> Result<Spectrogram>;
}

impl Waveform for ComplexWaveform {
    fn fir_filter(&self, filter: &FirFilter, compensate_delay: bool) -> Self {
        ComplexWaveform {
            samples: crate::filter::convolve_same(&self.samples, filter, compensate_delay),
            sample_rate_hz: self.sample_rate_hz,
            center_freq_hz: self.center_freq_hz,
        }
    }

    fn decimate_cascade(&self) -> Result<Self> {
        let samples = crate::resample::decimate_cascade_samples(&self.samples)?;
        Ok(ComplexWaveform {
            samples,
            sample_rate_hz: self.sample_rate_hz / 8.0,
            center_freq_hz: self.center_freq_hz,
        })
    }

    fn stft_spectrogram(&self, fft_size: usize, hop: usize, window: Window) -> Result<Spectrogram> {
        crate::spectrogram::stft_complex(self, fft_size, hop, window)
    }
}

impl Waveform for RealWaveform {
    fn fir_filter(&self, filter: &FirFilter, compensate_delay: bool) -> Self {
        RealWaveform {
            samples: crate::filter::convolve_same(&self.samples, filter, compensate_delay),
            sample_rate_hz: self.sample_rate_hz,
        }
    }

    fn decimate_cascade(&self) -> Result<Self> {
        let samples = crate::resample::decimate_cascade_samples(&self.samples)?;
        Ok(RealWaveform { samples, sample_rate_hz: self.sample_rate_hz / 8.0 })
    }

    fn stft_spectrogram(&self, fft_size: usize, hop: usize, window: Window) -> Result<Spectrogram> {
        crate::spectrogram::stft_real(self, fft_size, hop, window)
    }
}
