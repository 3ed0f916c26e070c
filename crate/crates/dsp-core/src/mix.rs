use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{DspError, Result};
use crate::waveform::{ComplexWaveform, RealWaveform};

const TWO_PI: f64 = 2.0 * PI;

/// How a cosine mixer tracks phase across segment boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseMode {
    /// cos(2*pi*f*t) with t measured from the waveform start; switching
    /// frequency mid-stream generally jumps phase.
    AbsoluteTime,
    /// Running phase accumulator; segment-wise calls chain without phase jumps.
    Continuous,
}

/// Multiply by a complex exponential at `f_hz`; the center-frequency
/// annotation moves by the same amount.
pub fn mix_complex(w: &ComplexWaveform, f_hz: f64) -> Result<ComplexWaveform> {
    let nyquist = w.sample_rate_hz / 2.0;
    if f_hz.abs() >= nyquist {
        return Err(DspError::FrequencyOutOfRange { f_hz, nyquist_hz: nyquist });
    }
    let step = TWO_PI * f_hz / w.sample_rate_hz;
    let samples = w
        .samples
        .iter()
        .enumerate()
        .map(|(n, s)| s * Complex64::from_polar(1.0, step * n as f64))
        .collect();
    Ok(ComplexWaveform {
        samples,
        sample_rate_hz: w.sample_rate_hz,
        center_freq_hz: w.center_freq_hz + f_hz,
    })
}

/// Stateful real cosine mixer so per-segment calls can chain.
///
/// In `AbsoluteTime` mode a global sample counter carries across calls; in
/// `Continuous` mode a running phase accumulator does, so consecutive segments
/// at different frequencies join without phase steps.
#[derive(Debug, Clone)]
pub struct CosineMixer {
    mode: PhaseMode,
    sample_index: u64,
    phase: f64,
}

impl CosineMixer {
    pub fn new(mode: PhaseMode) -> Self {
        Self { mode, sample_index: 0, phase: 0.0 }
    }

    /// Multiply `samples` by cos at `f_hz`, advancing the internal state.
    pub fn mix(&mut self, samples: &[f64], f_hz: f64, sample_rate_hz: f64) -> Vec<f64> {
        let step = TWO_PI * f_hz / sample_rate_hz;
        match self.mode {
            PhaseMode::AbsoluteTime => {
                let out = samples
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| x * (step * (self.sample_index + i as u64) as f64).cos())
                    .collect();
                self.sample_index += samples.len() as u64;
                out
            }
            PhaseMode::Continuous => {
                let mut out = Vec::with_capacity(samples.len());
                for &x in samples {
                    out.push(x * self.phase.cos());
                    self.phase += step;
                    if self.phase >= TWO_PI {
                        self.phase -= TWO_PI;
                    } else if self.phase < 0.0 {
                        self.phase += TWO_PI;
                    }
                }
                out
            }
        }
        // note: AbsoluteTime keeps cos(2*pi*f*n/fs) exact at large n, where an
        // accumulator would have drifted.
    }

    /// Current accumulated phase (Continuous mode), radians in [0, 2*pi).
    pub fn phase(&self) -> f64 {
        self.phase
    }
}

/// Sample-wise product with cos(2*pi*f_hz*t).
///
/// The caller is responsible for keeping `f_hz` plus the signal band edge
/// under Nyquist so the sum product does not alias.
pub fn mix_real_cosine(w: &RealWaveform, f_hz: f64, mode: PhaseMode) -> Result<RealWaveform> {
    let nyquist = w.sample_rate_hz / 2.0;
    if f_hz < 0.0 || f_hz >= nyquist {
        return Err(DspError::FrequencyOutOfRange { f_hz, nyquist_hz: nyquist });
    }
    let mut mixer = CosineMixer::new(mode);
    Ok(RealWaveform {
        samples: mixer.mix(&w.samples, f_hz, w.sample_rate_hz),
        sample_rate_hz: w.sample_rate_hz,
    })
}
