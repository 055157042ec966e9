//! Preprocessing: offset removal, Daubechies wavelets and DFT spectra.

mod daubechies_table;
pub mod spectrum;
pub mod wavelet;

pub use spectrum::{dft_magnitude, Spectrum};
pub use wavelet::{
    daubechies_filters, dwt_decompose, dwt_reconstruct, wavelet_denoise, Band, BoundaryMode,
    DwtCoefficients, WaveletSpec,
};

use crate::series::TimeSeries;

/// Subtracts the sample mean.
pub fn remove_offset(s: &TimeSeries) -> TimeSeries {
    let mean = s.samples().iter().sum::<f64>() / s.len() as f64;
    let centered = s.samples().iter().map(|v| v - mean).collect();
    s.with_samples(centered)
        .expect("centering preserves length and finiteness")
}
