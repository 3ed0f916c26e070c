use std::f64::consts::PI;

use crate::error::{DspError, Result};
use crate::waveform::sample::Sample;

/// Real-coefficient FIR filter with its group delay.
///
/// The lowpass/Gaussian designs below are odd-length and symmetric, so the
/// group delay is exactly `(len - 1) / 2` samples.
#[derive(Debug, Clone, PartialEq)]
pub struct FirFilter {
    taps: Vec<f64>,
    group_delay_samples: usize,
}

impl FirFilter {
    pub fn new(taps: Vec<f64>) -> Result<Self> {
        if taps.is_empty() {
            return Err(DspError::InvalidParam("filter must have at least one tap"));
        }
        let group_delay_samples = (taps.len() - 1) / 2;
        Ok(Self { taps, group_delay_samples })
    }

    pub fn taps(&self) -> &[f64] {
        &self.taps
    }

    pub fn len(&self) -> usize {
        self.taps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taps.is_empty()
    }

    pub fn group_delay_samples(&self) -> usize {
        self.group_delay_samples
    }

    /// DC gain (sum of taps).
    pub fn dc_gain(&self) -> f64 {
        self.taps.iter().sum()
    }

    /// Magnitude response at frequency `f_hz` for a given sample rate.
    pub fn magnitude_at(&self, f_hz: f64, sample_rate_hz: f64) -> f64 {
        let w = 2.0 * PI * f_hz / sample_rate_hz;
        let (mut re, mut im) = (0.0, 0.0);
        for (n, &h) in self.taps.iter().enumerate() {
            re += h * (w * n as f64).cos();
            im -= h * (w * n as f64).sin();
        }
        (re * re + im * im).sqrt()
    }
}

fn blackman(n: usize, len: usize) -> f64 {
    let x = n as f64 / (len - 1) as f64;
    0.42 - 0.5 * (2.0 * PI * x).cos() + 0.08 * (4.0 * PI * x).cos()
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        (PI * x).sin() / (PI * x)
    }
}

/// Blackman-windowed sinc lowpass, odd length, unit DC gain, >= 60 dB stopband.
pub fn design_lowpass(num_taps: usize, cutoff_hz: f64, sample_rate_hz: f64) -> Result<FirFilter> {
    if num_taps < 3 || num_taps % 2 == 0 {
        return Err(DspError::InvalidParam("lowpass length must be odd and >= 3"));
    }
    if !(0.0..sample_rate_hz / 2.0).contains(&cutoff_hz) || cutoff_hz <= 0.0 {
        return Err(DspError::InvalidParam("cutoff must lie in (0, fs/2)"));
    }
    let m = (num_taps - 1) as f64 / 2.0;
    let fc = cutoff_hz / sample_rate_hz;
    let mut taps: Vec<f64> = (0..num_taps)
        .map(|n| 2.0 * fc * sinc(2.0 * fc * (n as f64 - m)) * blackman(n, num_taps))
        .collect();
    let sum: f64 = taps.iter().sum();
    taps.iter_mut().for_each(|t| *t /= sum);
    FirFilter::new(taps)
}

/// Halfband lowpass (cutoff fs/4) for factor-2 decimation stages. Every other
/// tap away from the center is zero by construction.
pub fn design_halfband(num_taps: usize) -> Result<FirFilter> {
    if num_taps < 7 || num_taps % 4 != 3 {
        return Err(DspError::InvalidParam("halfband length must be 4k+3 and >= 7"));
    }
    let m = (num_taps - 1) as f64 / 2.0;
    let mut taps: Vec<f64> = (0..num_taps)
        .map(|n| 0.5 * sinc(0.5 * (n as f64 - m)) * blackman(n, num_taps))
        .collect();
    let sum: f64 = taps.iter().sum();
    taps.iter_mut().for_each(|t| *t /= sum);
    FirFilter::new(taps)
}

/// Truncated sampled Gaussian lowpass with bandwidth-time product `bt`,
/// normalized to unit DC gain; length `span_symbols * sps + 1`.
pub fn design_gaussian_filter(bt: f64, sps: usize, span_symbols: usize) -> Result<FirFilter> {
    if bt <= 0.0 {
        return Err(DspError::InvalidParam("bt must be positive"));
    }
    if sps < 2 {
        return Err(DspError::InvalidParam("sps must be >= 2"));
    }
    if span_symbols < 1 {
        return Err(DspError::InvalidParam("span must be >= 1 symbol"));
    }
    let ntaps = span_symbols * sps + 1;
    let mid = (ntaps - 1) as f64 / 2.0;
    // alpha such that the Gaussian's -3 dB frequency lands at bt * symbol rate
    let alpha = (2.0_f64.ln() / 2.0).sqrt() / bt;
    let mut taps: Vec<f64> = (0..ntaps)
        .map(|n| {
            let t = (n as f64 - mid) / sps as f64; // in symbol periods
            (-(PI * t / alpha).powi(2)).exp()
        })
        .collect();
    let sum: f64 = taps.iter().sum();
    taps.iter_mut().for_each(|t| *t /= sum);
    FirFilter::new(taps)
}

/// Zero-padded linear convolution, same-length output. `compensate` advances
/// the output by the group delay so it stays aligned with the input.
pub(crate) fn convolve_same<S: Sample>(x: &[S], filter: &FirFilter, compensate: bool) -> Vec<S> {
    let taps = &filter.taps;
    let offset = if compensate { filter.group_delay_samples } else { 0 };
    let mut out = Vec::with_capacity(x.len());
    for n in 0..x.len() {
        let center = n + offset;
        let mut acc = S::ZERO;
        let j_lo = center.saturating_sub(x.len() - 1);
        let j_hi = taps.len().min(center + 1);
        for j in j_lo..j_hi {
            acc = acc + x[center - j] * taps[j];
        }
        out.push(acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::waveform::{RealWaveform, Waveform};

    #[test]
    fn lowpass_unit_dc_gain() {
        let f = design_lowpass(129, 1.0e6, 8.0e6).unwrap();
        assert!((f.dc_gain() - 1.0).abs() < 1e-6);
        assert_eq!(f.group_delay_samples(), 64);
    }

    #[test]
    fn lowpass_stopband_at_least_60_db() {
        let f = design_lowpass(129, 1.0e6, 8.0e6).unwrap();
        // transition for a 129-tap Blackman design is ~340 kHz wide
        let mut worst: f64 = 0.0;
        let mut fr = 1.4e6;
        while fr <= 4.0e6 {
            worst = worst.max(f.magnitude_at(fr, 8.0e6));
            fr += 5e3;
        }
        assert!(20.0 * worst.log10() < -60.0, "stopband only {} dB", 20.0 * worst.log10());
    }

    #[test]
    fn gaussian_sums_to_one_and_symmetric() {
        let f = design_gaussian_filter(0.5, 8, 3).unwrap();
        assert_eq!(f.len(), 25);
        assert!((f.dc_gain() - 1.0).abs() < 1e-9);
        let t = f.taps();
        for k in 0..t.len() {
            assert!((t[k] - t[t.len() - 1 - k]).abs() < 1e-12);
        }
    }

    #[test]
    fn gaussian_minus_3_db_point_near_bt_times_symbol_rate() {
        // bt = 0.5 at 1 Msym/s, sps 8 -> -3 dB should sit near 500 kHz
        let f = design_gaussian_filter(0.5, 8, 3).unwrap();
        let fs = 8.0e6;
        let mut best_f = 0.0;
        let mut best_err = f64::INFINITY;
        let mut fr = 1e3;
        while fr < 2.0e6 {
            let mag_db = 20.0 * f.magnitude_at(fr, fs).log10();
            let err = (mag_db + 3.0103).abs();
            if err < best_err {
                best_err = err;
                best_f = fr;
            }
            fr += 1e3;
        }
        assert!((best_f - 0.5e6).abs() < 0.05 * 0.5e6, "-3 dB at {best_f} Hz");
    }

    #[test]
    fn single_tap_is_identity() {
        let f = FirFilter::new(vec![1.0]).unwrap();
        let w = RealWaveform::new(vec![1.0, -2.0, 3.5, 0.25], 1.0);
        assert_eq!(w.fir_filter(&f, false).samples, w.samples);
        assert_eq!(w.fir_filter(&f, true).samples, w.samples);
    }

    #[test]
    fn moving_average_passes_dc() {
        let f = FirFilter::new(vec![0.5, 0.5]).unwrap();
        let w = RealWaveform::new(vec![1.0; 4], 1.0);
        let y = w.fir_filter(&f, false);
        for &v in &y.samples[1..] {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn impulse_response_equals_taps() {
        let f = design_lowpass(31, 0.2, 1.0).unwrap();
        let mut x = vec![0.0; 31];
        x[0] = 1.0;
        let y = RealWaveform::new(x, 1.0).fir_filter(&f, false);
        for (a, b) in y.samples.iter().zip(f.taps()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn empty_taps_rejected() {
        assert!(FirFilter::new(vec![]).is_err());
    }

    #[test]
    fn in_band_power_not_amplified() {
        // Parseval-style check: unit-DC lowpass cannot add power to an in-band signal.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let noise: Vec<f64> = (0..4096).map(|_| rng.gen::<f64>() - 0.5).collect();
        let narrow = design_lowpass(257, 0.5e6, 8.0e6).unwrap();
        let x = RealWaveform::new(noise, 8.0e6).fir_filter(&narrow, true);
        let y = x.fir_filter(&design_lowpass(129, 1.0e6, 8.0e6).unwrap(), true);
        let ratio = y.power() / x.power();
        assert!(ratio <= 1.0 + 1e-6, "power ratio {ratio}");
    }
}
