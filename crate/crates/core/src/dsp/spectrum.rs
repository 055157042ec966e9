//! One-sided DFT magnitude spectra.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::series::TimeSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// `|X_k|` for `k = 0..=N/2`, unnormalized.
    pub magnitudes: Vec<f64>,
    /// Hz per bin, `1 / (N dt)`.
    pub df: f64,
    /// Length of the transformed signal.
    pub n: usize,
}

impl Spectrum {
    pub fn frequency(&self, bin: usize) -> f64 {
        bin as f64 * self.df
    }

    pub fn peak_bin(&self) -> usize {
        self.magnitudes
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, &v)| if v > bv { (i, v) } else { (bi, bv) })
            .0
    }

    /// `Σ s² dt` recovered from the one-sided bins.
    ///
    /// Interior bins stand for a conjugate pair and count twice; DC and,
    /// for even `N`, the Nyquist bin count once.
    pub fn energy(&self, dt: f64) -> f64 {
        let last = self.magnitudes.len() - 1;
        let two_sided: f64 = self
            .magnitudes
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let once = k == 0 || (self.n.is_multiple_of(2) && k == last);
                if once { m * m } else { 2.0 * m * m }
            })
            .sum();
        two_sided * dt / self.n as f64
    }
}

/// Magnitude of the unwindowed DFT of raw samples.
pub fn magnitude(x: &[f64], dt: f64) -> Spectrum {
    let n = x.len();
    let mut buf: Vec<Complex<f64>> = x.iter().map(|&v| Complex::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    Spectrum {
        magnitudes: buf[..n / 2 + 1].iter().map(|c| c.norm()).collect(),
        df: 1.0 / (n as f64 * dt),
        n,
    }
}

pub fn dft_magnitude(s: &TimeSeries) -> Spectrum {
    magnitude(s.samples(), s.dt())
}
