//! On-disk formats: series CSV, feature-matrix CSV and recording ingest.

use std::fmt::Write as _;
use std::path::Path;

use gwclass_core::features::{Bank, FeatureMatrix};
use gwclass_core::signalgen::{BASELINE_PATH, DAMAGE_PATH};
use gwclass_core::{DamageClass, Provenance, SeriesMeta, TimeSeries};
use serde::Serialize;

use crate::config::IngestSchema;
use crate::error::{CliError, Result};

/// Relative dt deviation tolerated by ingest.
pub const DT_TOLERANCE: f64 = 1e-6;

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Synthetic => "synthetic",
        Provenance::Ingested => "ingested",
        Provenance::Augmented => "augmented",
    }
}

fn parse_provenance(s: &str) -> Option<Provenance> {
    match s {
        "synthetic" => Some(Provenance::Synthetic),
        "ingested" => Some(Provenance::Ingested),
        "augmented" => Some(Provenance::Augmented),
        _ => None,
    }
}

pub fn series_file_name(meta: &SeriesMeta) -> String {
    format!("{}.csv", meta.key())
}

/// `# dt=` header, metadata comments, then an `amplitude` column.
pub fn series_to_csv(s: &TimeSeries) -> String {
    let m = &s.meta;
    let mut out = String::with_capacity(24 * s.len() + 128);
    let _ = writeln!(out, "# dt={:e}", s.dt());
    let _ = writeln!(out, "# label={}", m.label);
    let _ = writeln!(out, "# path={}", m.path_id);
    let _ = writeln!(out, "# trial={}", m.trial);
    let _ = writeln!(out, "# copy={}", m.copy);
    let _ = writeln!(out, "# provenance={}", provenance_name(m.provenance));
    out.push_str("amplitude\n");
    for v in s.samples() {
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn series_from_csv(text: &str, origin: &str) -> Result<TimeSeries> {
    let bad = |line: usize, msg: String| CliError::Data(format!("{origin}:{line}: {msg}"));
    let mut dt = None;
    let mut meta = SeriesMeta::new(DamageClass::Baseline, "", 0);
    let mut label = None;
    let mut samples = Vec::new();
    let mut header_seen = false;
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        if let Some(c) = line.strip_prefix('#') {
            let (k, v) = c
                .trim()
                .split_once('=')
                .ok_or_else(|| bad(n, format!("malformed header `{line}`")))?;
            match k.trim() {
                "dt" => dt = Some(v.parse::<f64>().map_err(|_| bad(n, format!("bad dt `{v}`")))?),
                "label" => label = Some(v.parse::<DamageClass>().map_err(|e| bad(n, e.to_string()))?),
                "path" => meta.path_id = v.to_string(),
                "trial" => meta.trial = v.parse().map_err(|_| bad(n, format!("bad trial `{v}`")))?,
                "copy" => meta.copy = v.parse().map_err(|_| bad(n, format!("bad copy `{v}`")))?,
                "provenance" => {
                    meta.provenance = parse_provenance(v).ok_or_else(|| bad(n, format!("bad provenance `{v}`")))?
                }
                _ => {}
            }
        } else if !header_seen {
            if line.trim() != "amplitude" {
                return Err(bad(n, format!("expected `amplitude` header, found `{line}`")));
            }
            header_seen = true;
        } else {
            let v: f64 = line.trim().parse().map_err(|_| bad(n, format!("bad amplitude `{line}`")))?;
            if !v.is_finite() {
                return Err(bad(n, "non-finite amplitude".into()));
            }
            samples.push(v);
        }
    }
    let dt = dt.ok_or_else(|| CliError::Data(format!("{origin}: missing `# dt=` header")))?;
    meta.label = label.ok_or_else(|| CliError::Data(format!("{origin}: missing `# label=` header")))?;
    Ok(TimeSeries::new(samples, dt, meta)?)
}

/// Header of feature ids plus `label`, one row per series.
pub fn matrix_to_csv(fm: &FeatureMatrix) -> String {
    let mut out = String::new();
    for name in &fm.feature_names {
        out.push_str(name);
        out.push(',');
    }
    out.push_str("label\n");
    for (row, label) in fm.rows.iter().zip(&fm.labels) {
        for v in row {
            let _ = write!(out, "{v},");
        }
        let _ = writeln!(out, "{label}");
    }
    out
}

pub fn matrix_from_csv(text: &str, origin: &str, bank: Bank, baseline_path: Option<String>) -> Result<FeatureMatrix> {
    let mut rdr = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = rdr
        .headers()
        .map_err(|e| CliError::Data(format!("{origin}: {e}")))?
        .clone();
    let d = header.len().saturating_sub(1);
    if header.get(d) != Some("label") {
        return Err(CliError::Data(format!("{origin}: last column must be `label`")));
    }
    let names: Vec<String> = header.iter().take(d).map(str::to_string).collect();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| CliError::Data(format!("{origin}: {e}")))?;
        let line = rec.position().map_or(0, |p| p.line());
        let row = (0..d)
            .map(|j| {
                rec[j]
                    .parse::<f64>()
                    .map_err(|_| CliError::Data(format!("{origin}:{line}: bad value `{}`", &rec[j])))
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
        labels.push(
            rec[d]
                .parse::<DamageClass>()
                .map_err(|e| CliError::Data(format!("{origin}:{line}: {e}")))?,
        );
    }
    Ok(FeatureMatrix::new(names, rows, labels, bank, baseline_path)?)
}

/// Outcome of ingesting one recording.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IngestRecord {
    pub source: String,
    pub key: String,
    pub label: DamageClass,
    pub rows: usize,
    pub dt: f64,
    /// Largest relative deviation of a sample interval from the mean.
    pub max_dt_deviation: f64,
}

/// Parses one recording. The label must be present on every row and
/// constant across the file; `trial` numbers the recording.
pub fn ingest_recording(text: &str, origin: &str, schema: &IngestSchema, trial: u32) -> Result<(TimeSeries, IngestRecord)> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(schema.delimiter as u8)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = rdr
        .headers()
        .map_err(|e| CliError::Data(format!("{origin}: {e}")))?
        .clone();
    let col = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CliError::Data(format!("{origin}: missing column `{name}`")))
    };
    let (ct, ca, cl) = (col(&schema.time_column)?, col(&schema.amplitude_column)?, col(&schema.label_column)?);
    let mut times = Vec::new();
    let mut amps = Vec::new();
    let mut lines = Vec::new();
    let mut label: Option<DamageClass> = None;
    for rec in rdr.records() {
        let rec = rec.map_err(|e| CliError::Data(format!("{origin}: malformed row: {e}")))?;
        let line = rec.position().map_or(0, |p| p.line());
        let bad = |msg: String| CliError::Data(format!("{origin}:{line}: {msg}"));
        let num = |j: usize, what: &str| -> Result<f64> {
            let s = &rec[j];
            let v: f64 = s.parse().map_err(|_| bad(format!("{what} `{s}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad(format!("non-finite {what} `{s}`")))
            }
        };
        lines.push(line);
        times.push(num(ct, "time")?);
        amps.push(num(ca, "amplitude")?);
        let l = &rec[cl];
        if l.is_empty() {
            return Err(bad("missing label".into()));
        }
        let l: DamageClass = l.parse().map_err(|e: gwclass_core::Error| bad(e.to_string()))?;
        match label {
            None => label = Some(l),
            Some(first) if first != l => return Err(bad(format!("label {l} differs from {first} earlier in the file"))),
            _ => {}
        }
    }
    let label = label.ok_or_else(|| CliError::Data(format!("{origin}: no data rows")))?;
    if times.len() < 2 {
        return Err(CliError::Data(format!("{origin}: need at least 2 samples, found {}", times.len())));
    }
    let n = times.len();
    let dt = (times[n - 1] - times[0]) / (n - 1) as f64;
    if dt.is_nan() || dt <= 0.0 {
        return Err(CliError::Data(format!("{origin}: time column is not increasing")));
    }
    let mut worst = 0.0f64;
    for k in 1..n {
        let dev = ((times[k] - times[k - 1]) - dt).abs() / dt;
        if dev > DT_TOLERANCE {
            return Err(CliError::Data(format!(
                "{origin}:{}: non-uniform sampling (interval deviates {dev:.3e} relative from mean dt {dt:e})",
                lines[k]
            )));
        }
        worst = worst.max(dev);
    }
    let path = if label == DamageClass::Baseline { BASELINE_PATH } else { DAMAGE_PATH };
    let mut meta = SeriesMeta::new(label, path, trial);
    meta.provenance = Provenance::Ingested;
    let s = TimeSeries::new(amps, dt, meta)?;
    let rec = IngestRecord {
        source: origin.to_string(),
        key: s.meta.key(),
        label,
        rows: n,
        dt,
        max_dt_deviation: worst,
    };
    Ok((s, rec))
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(CliError::io(path))
}
