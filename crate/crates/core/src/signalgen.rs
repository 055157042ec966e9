//! Excitation toneburst, parametric received-signal surrogate and noise
//! augmentation.
//!
//! Received signals are built from the closed-form burst evaluated at
//! shifted and stretched times, so no interpolation of a sampled burst is
//! involved. All random draws of one trial come from a single stream keyed
//! by `(master seed, trial)` and are shared by every class: a trial is one
//! acquisition session whose coupling and timing variability affects the
//! baseline and damaged paths alike.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::{derive, rng_from, Stream};
use crate::series::{DamageClass, Provenance, SeriesMeta, TimeSeries};

pub const BASELINE_PATH: &str = "P3-3*";
pub const DAMAGE_PATH: &str = "P2-2*";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExcitationConfig {
    /// Carrier frequency, Hz.
    pub f: f64,
    pub n_cycles: u32,
    /// Peak drive amplitude (half the peak-to-peak voltage).
    pub amplitude: f64,
    /// Sampling rate, Hz.
    pub fs: f64,
    pub record_seconds: f64,
}

impl Default for ExcitationConfig {
    fn default() -> Self {
        Self {
            f: 1e5,
            n_cycles: 5,
            amplitude: 10.0,
            fs: 1e8,
            record_seconds: 2e-4,
        }
    }
}

impl ExcitationConfig {
    /// Desk-scale sampling used for synthetic datasets (2000 samples).
    pub fn synthetic() -> Self {
        Self {
            fs: 1e7,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.f.is_finite() && self.f > 0.0) {
            return Err(Error::invalid("excitation.f", format!("must be > 0, got {}", self.f)));
        }
        if self.n_cycles == 0 {
            return Err(Error::invalid("excitation.n_cycles", "must be >= 1"));
        }
        if !self.amplitude.is_finite() {
            return Err(Error::invalid("excitation.amplitude", "must be finite"));
        }
        if !(self.fs.is_finite() && self.fs >= 20.0 * self.f) {
            return Err(Error::invalid(
                "excitation.fs",
                format!("must be >= 20*f = {}, got {}", 20.0 * self.f, self.fs),
            ));
        }
        if !(self.record_seconds.is_finite() && self.record_seconds >= self.burst_seconds()) {
            return Err(Error::invalid(
                "excitation.record_seconds",
                format!(
                    "must be >= n_cycles/f = {:e}, got {:e}",
                    self.burst_seconds(),
                    self.record_seconds
                ),
            ));
        }
        Ok(())
    }

    pub fn dt(&self) -> f64 {
        1.0 / self.fs
    }

    pub fn n_samples(&self) -> usize {
        (self.record_seconds * self.fs).round() as usize
    }

    pub fn burst_seconds(&self) -> f64 {
        self.n_cycles as f64 / self.f
    }

    /// Closed-form burst value at time `t`; zero outside `[0, n_cycles/f)`.
    pub fn value(&self, t: f64) -> f64 {
        if !(0.0..self.burst_seconds()).contains(&t) {
            return 0.0;
        }
        let n = self.n_cycles as f64;
        0.5 * self.amplitude * (1.0 - (2.0 * PI * self.f * t / n).cos()) * (2.0 * PI * self.f * t).sin()
    }
}

/// Hanning-windowed toneburst sampled at `i / fs`.
pub fn hann_toneburst(cfg: &ExcitationConfig) -> Result<TimeSeries> {
    cfg.validate()?;
    let samples = (0..cfg.n_samples())
        .map(|i| cfg.value(i as f64 / cfg.fs))
        .collect();
    TimeSeries::new(
        samples,
        cfg.dt(),
        SeriesMeta::new(DamageClass::Baseline, "excitation", 0),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    #[default]
    Normal,
    Inverted,
}

impl Polarity {
    pub fn sign(self) -> f64 {
        match self {
            Polarity::Normal => 1.0,
            Polarity::Inverted => -1.0,
        }
    }
}

/// Per-trial relative standard deviations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Jitter {
    pub gain: f64,
    pub delay: f64,
}

impl Default for Jitter {
    fn default() -> Self {
        Self {
            gain: 0.03,
            delay: 0.01,
        }
    }
}

impl Jitter {
    pub const NONE: Jitter = Jitter {
        gain: 0.0,
        delay: 0.0,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropagationScenario {
    pub class: DamageClass,
    pub gain: f64,
    /// Arrival delay, s.
    pub delay: f64,
    /// Time-axis stretch of the direct arrival.
    pub broadening: f64,
    pub echo_gain: f64,
    /// Echo delay after the direct arrival, s.
    pub echo_delay: f64,
    #[serde(default)]
    pub jitter: Jitter,
    #[serde(default)]
    pub polarity: Polarity,
    /// Width of a uniform per-trial extra delay at the damage site, s.
    #[serde(default)]
    pub site_delay_spread: f64,
}

impl PropagationScenario {
    /// Calibrated surrogate for `class` on the synthetic record.
    ///
    /// CC/LFA raise and HDC/TRF lower the received amplitude. Each
    /// same-direction pair differs only in polarity, which only odd-moment
    /// statistics can see.
    pub fn calibrated(class: DamageClass) -> Self {
        let base = Self {
            class,
            gain: 1.0,
            delay: 70e-6,
            broadening: 1.0,
            echo_gain: 0.0,
            echo_delay: 0.0,
            jitter: Jitter::default(),
            polarity: Polarity::Normal,
            site_delay_spread: 0.0,
        };
        let damaged = |gain, polarity| Self {
            gain,
            broadening: 1.05,
            echo_gain: 0.1,
            echo_delay: 20e-6,
            polarity,
            site_delay_spread: 10e-6,
            ..base
        };
        match class {
            DamageClass::Baseline => base,
            DamageClass::CC => damaged(1.30, Polarity::Normal),
            DamageClass::LFA => damaged(1.30, Polarity::Inverted),
            DamageClass::HDC => damaged(0.70, Polarity::Inverted),
            DamageClass::TRF => damaged(0.70, Polarity::Normal),
        }
    }

    pub fn calibrated_set() -> Vec<Self> {
        DamageClass::ALL.iter().map(|&c| Self::calibrated(c)).collect()
    }

    /// Scales the deviation from a pristine path by `severity` in `[0, 1]`.
    pub fn at_severity(&self, severity: f64) -> Self {
        Self {
            gain: 1.0 + (self.gain - 1.0) * severity,
            broadening: 1.0 + (self.broadening - 1.0) * severity,
            echo_gain: self.echo_gain * severity,
            ..*self
        }
    }

    pub fn without_jitter(&self) -> Self {
        Self {
            jitter: Jitter::NONE,
            site_delay_spread: 0.0,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.gain,
            self.delay,
            self.broadening,
            self.echo_gain,
            self.echo_delay,
            self.jitter.gain,
            self.jitter.delay,
            self.site_delay_spread,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(Error::invalid("scenario", format!("{}: non-finite parameter", self.class)));
        }
        if self.gain <= 0.0 {
            return Err(Error::invalid("scenario.gain", format!("{}: must be > 0", self.class)));
        }
        if self.delay < 0.0 || self.echo_delay < 0.0 || self.site_delay_spread < 0.0 {
            return Err(Error::invalid(
                "scenario.delay",
                format!("{}: delays must be >= 0", self.class),
            ));
        }
        if self.broadening < 1.0 {
            return Err(Error::invalid(
                "scenario.broadening",
                format!("{}: must be >= 1", self.class),
            ));
        }
        if !(0.0..1.0).contains(&self.echo_gain) {
            return Err(Error::invalid(
                "scenario.echo_gain",
                format!("{}: must be in [0, 1)", self.class),
            ));
        }
        if self.jitter.gain < 0.0 || self.jitter.delay < 0.0 {
            return Err(Error::invalid("scenario.jitter", format!("{}: must be >= 0", self.class)));
        }
        Ok(())
    }
}

/// The random numbers of one acquisition trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialDraw {
    pub z_gain: f64,
    pub z_delay: f64,
    /// Uniform in `[0, 1)`.
    pub u_site: f64,
}

impl TrialDraw {
    pub const NOMINAL: TrialDraw = TrialDraw {
        z_gain: 0.0,
        z_delay: 0.0,
        u_site: 0.0,
    };

    pub fn from_seed(seed: u64) -> Self {
        let mut rng = rng_from(seed);
        Self {
            z_gain: rng.sample(StandardNormal),
            z_delay: rng.sample(StandardNormal),
            u_site: rng.random(),
        }
    }
}

/// Received signal for `scenario`, with the trial draw taken from `rng_seed`.
pub fn synth_response(
    excitation: &ExcitationConfig,
    scenario: &PropagationScenario,
    rng_seed: u64,
) -> Result<TimeSeries> {
    synth_with_draw(excitation, scenario, &TrialDraw::from_seed(rng_seed))
}

pub fn synth_with_draw(
    excitation: &ExcitationConfig,
    scenario: &PropagationScenario,
    draw: &TrialDraw,
) -> Result<TimeSeries> {
    excitation.validate()?;
    scenario.validate()?;
    let gain = scenario.gain * (1.0 + scenario.jitter.gain * draw.z_gain);
    if gain <= 0.0 {
        return Err(Error::invalid("scenario.jitter", "jittered gain is not positive"));
    }
    let delay = scenario.delay * (1.0 + scenario.jitter.delay * draw.z_delay)
        + scenario.site_delay_spread * draw.u_site;
    let burst = excitation.burst_seconds();
    let mut end = delay + scenario.broadening * burst;
    if scenario.echo_gain > 0.0 {
        end = end.max(delay + scenario.echo_delay + burst);
    }
    let n = excitation.n_samples();
    let record = n as f64 / excitation.fs;
    if delay < 0.0 || end > record {
        return Err(Error::Truncation {
            end_s: end,
            record_s: record,
        });
    }
    let sign = scenario.polarity.sign();
    let samples = (0..n)
        .map(|i| {
            let t = i as f64 / excitation.fs;
            let direct = excitation.value((t - delay) / scenario.broadening);
            let echo = if scenario.echo_gain > 0.0 {
                scenario.echo_gain * excitation.value(t - delay - scenario.echo_delay)
            } else {
                0.0
            };
            sign * gain * (direct + echo)
        })
        .collect();
    let path = if scenario.class == DamageClass::Baseline {
        BASELINE_PATH
    } else {
        DAMAGE_PATH
    };
    TimeSeries::new(samples, excitation.dt(), SeriesMeta::new(scenario.class, path, 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NoiseConfig {
    pub beta_n: f64,
    pub copies: u32,
    pub seed: u64,
}

impl Default for NoiseConfig {
    fn default() -> Self {
        Self {
            beta_n: 0.01,
            copies: 10,
            seed: 42,
        }
    }
}

impl NoiseConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.beta_n.is_finite() && self.beta_n >= 0.0) {
            return Err(Error::invalid("noise.beta_n", "must be >= 0"));
        }
        if self.copies == 0 {
            return Err(Error::invalid("noise.copies", "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseStatus {
    Ok,
    /// The parent is identically zero, so the noise scale is zero too.
    ZeroPeak,
}

/// Adds `beta_n * max|s| * w`, `w` standard normal, to every sample.
pub fn add_noise(s: &TimeSeries, beta_n: f64, rng_seed: u64) -> Result<(TimeSeries, NoiseStatus)> {
    if !(beta_n.is_finite() && beta_n >= 0.0) {
        return Err(Error::invalid("noise.beta_n", "must be >= 0"));
    }
    let mut out = s.clone();
    out.meta.provenance = Provenance::Augmented;
    if beta_n == 0.0 {
        return Ok((out, NoiseStatus::Ok));
    }
    let peak = s.peak();
    let status = if peak == 0.0 {
        log::warn!("add_noise: all-zero parent {}, noise scale is zero", s.meta.key());
        NoiseStatus::ZeroPeak
    } else {
        NoiseStatus::Ok
    };
    let scale = beta_n * peak;
    let mut rng = rng_from(rng_seed);
    let noisy = s
        .samples()
        .iter()
        .map(|&v| {
            let w: f64 = rng.sample(StandardNormal);
            v + scale * w
        })
        .collect();
    Ok((out.with_samples(noisy)?, status))
}

fn check_scenarios(scenarios: &[PropagationScenario]) -> Result<()> {
    let mut seen = [false; DamageClass::COUNT];
    for s in scenarios {
        s.validate()?;
        if std::mem::replace(&mut seen[s.class.index()], true) {
            return Err(Error::DuplicateKey {
                class: s.class,
                trial: 0,
            });
        }
    }
    if let Some(i) = seen.iter().position(|&x| !x) {
        return Err(Error::MissingClass(DamageClass::ALL[i]));
    }
    Ok(())
}

/// Builds the augmented dataset: one parent per (class, trial), each
/// expanded into `noise.copies` noisy copies.
///
/// `preprocess` is applied to every parent before augmentation; pass
/// `|s| Ok(s.clone())` to augment raw parents. Output is ordered by class,
/// trial, copy.
pub fn build_dataset<F>(
    excitation: &ExcitationConfig,
    scenarios: &[PropagationScenario],
    trials_per_class: u32,
    noise: &NoiseConfig,
    preprocess: F,
) -> Result<Vec<TimeSeries>>
where
    F: Fn(&TimeSeries) -> Result<TimeSeries> + Sync,
{
    if trials_per_class == 0 {
        return Err(Error::invalid("trials_per_class", "must be >= 1"));
    }
    let trials: Vec<(u32, f64)> = (0..trials_per_class).map(|t| (t, 1.0)).collect();
    generate(excitation, scenarios, &trials, noise, &preprocess)
}

/// Severity levels mirroring damage sizes 20..90 mm, as fractions of the
/// largest.
pub fn default_severity_levels() -> Vec<f64> {
    (0..9).map(|k| (20.0 + 70.0 * k as f64 / 8.0) / 90.0).collect()
}

/// One trial per severity level; trial index = level index.
pub fn build_severity_sweep<F>(
    excitation: &ExcitationConfig,
    scenarios: &[PropagationScenario],
    levels: &[f64],
    noise: &NoiseConfig,
    preprocess: F,
) -> Result<Vec<TimeSeries>>
where
    F: Fn(&TimeSeries) -> Result<TimeSeries> + Sync,
{
    if levels.is_empty() {
        return Err(Error::invalid("sweep.levels", "must not be empty"));
    }
    if let Some(bad) = levels.iter().find(|s| !(0.0..=1.0).contains(*s)) {
        return Err(Error::invalid("sweep.levels", format!("{bad} outside [0, 1]")));
    }
    let trials: Vec<(u32, f64)> = levels
        .iter()
        .enumerate()
        .map(|(k, &s)| (k as u32, s))
        .collect();
    generate(excitation, scenarios, &trials, noise, &preprocess)
}

fn generate(
    excitation: &ExcitationConfig,
    scenarios: &[PropagationScenario],
    trials: &[(u32, f64)],
    noise: &NoiseConfig,
    preprocess: &(dyn Fn(&TimeSeries) -> Result<TimeSeries> + Sync),
) -> Result<Vec<TimeSeries>> {
    excitation.validate()?;
    noise.validate()?;
    check_scenarios(scenarios)?;
    let mut ordered: Vec<&PropagationScenario> = scenarios.iter().collect();
    ordered.sort_by_key(|s| s.class);
    let jobs: Vec<(&PropagationScenario, u32, f64)> = ordered
        .iter()
        .flat_map(|s| trials.iter().map(move |&(t, sev)| (*s, t, sev)))
        .collect();
    let groups: Vec<Vec<TimeSeries>> = jobs
        .par_iter()
        .map(|&(scenario, trial, severity)| {
            let draw = TrialDraw::from_seed(derive(noise.seed, Stream::Trial, &[trial as u64]));
            let mut parent =
                synth_with_draw(excitation, &scenario.at_severity(severity), &draw)?;
            parent.meta.trial = trial;
            let parent = preprocess(&parent)?;
            (0..noise.copies)
                .map(|copy| {
                    let seed = derive(
                        noise.seed,
                        Stream::Noise,
                        &[scenario.class.index() as u64, trial as u64, copy as u64],
                    );
                    let (mut s, _) = add_noise(&parent, noise.beta_n, seed)?;
                    s.meta.copy = copy;
                    Ok(s)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(groups.into_iter().flatten().collect())
}
