//! Static SVG figures: signal traces, confusion matrices, importance bars.

use std::fmt::Write as _;

use gwclass_core::interpret::FeatureImportance;
use gwclass_core::{DamageClass, TimeSeries};

use crate::report::Confusion;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn open(w: u32, h: u32) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" \
         font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

/// Overlaid traces, time axis in microseconds.
pub fn signals(title: &str, series: &[&TimeSeries]) -> String {
    let (w, h) = (760.0, 420.0);
    let (l, r, t, b) = (60.0, 140.0, 36.0, 44.0);
    let (pw, ph) = (w - l - r, h - t - b);
    let tmax = series.iter().map(|s| s.duration()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let amax = series.iter().map(|s| s.peak()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let x = |ts: f64| l + pw * ts / tmax;
    let y = |a: f64| t + ph * (0.5 - 0.5 * a / amax);
    let mut s = open(w as u32, h as u32);
    let _ = writeln!(s, "<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">{}</text>", l + pw / 2.0, escape(title));
    let _ = writeln!(s, "<rect x=\"{l}\" y=\"{t}\" width=\"{pw}\" height=\"{ph}\" fill=\"none\" stroke=\"#444\"/>");
    let _ = writeln!(s, "<line x1=\"{l}\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"#ccc\"/>", y(0.0), l + pw);
    for k in 0..=4 {
        let ts = tmax * k as f64 / 4.0;
        let _ = writeln!(
            s,
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{:.0}</text>",
            x(ts),
            t + ph + 16.0,
            ts * 1e6
        );
    }
    let _ = writeln!(s, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">time (us)</text>", l + pw / 2.0, h - 8.0);
    let _ = writeln!(s, "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{amax:.3}</text>", l - 4.0, t + 4.0);
    let _ = writeln!(s, "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{:.3}</text>", l - 4.0, t + ph, -amax);
    for (i, ser) in series.iter().enumerate() {
        let c = PALETTE[i % PALETTE.len()];
        let step = (ser.len() / 1500).max(1);
        let pts: Vec<String> = ser
            .samples()
            .iter()
            .enumerate()
            .step_by(step)
            .map(|(k, &v)| format!("{:.1},{:.1}", x(k as f64 * ser.dt()), y(v)))
            .collect();
        let _ = writeln!(s, "<polyline fill=\"none\" stroke=\"{c}\" stroke-width=\"1\" points=\"{}\"/>", pts.join(" "));
        let ly = t + 14.0 + 18.0 * i as f64;
        let _ = writeln!(s, "<line x1=\"{0}\" y1=\"{ly}\" x2=\"{1}\" y2=\"{ly}\" stroke=\"{c}\" stroke-width=\"2\"/>", w - r + 12.0, w - r + 32.0);
        let _ = writeln!(s, "<text x=\"{}\" y=\"{}\">{}</text>", w - r + 38.0, ly + 4.0, escape(&ser.meta.label.to_string()));
    }
    s.push_str("</svg>\n");
    s
}

/// Row-normalized shading with raw counts in each cell.
pub fn confusion(title: &str, m: &Confusion) -> String {
    let n = DamageClass::COUNT;
    let cell = 64.0;
    let (l, t) = (90.0, 60.0);
    let w = l + cell * n as f64 + 20.0;
    let h = t + cell * n as f64 + 50.0;
    let mut s = open(w as u32, h as u32);
    let _ = writeln!(s, "<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">{}</text>", w / 2.0, escape(title));
    let _ = writeln!(s, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">predicted</text>", l + cell * n as f64 / 2.0, t - 26.0);
    let _ = writeln!(s, "<text x=\"14\" y=\"{}\" transform=\"rotate(-90 14 {0})\" text-anchor=\"middle\">true</text>", t + cell * n as f64 / 2.0);
    for (i, row) in m.iter().enumerate() {
        let total: u32 = row.iter().sum();
        for (j, &c) in row.iter().enumerate() {
            let frac = if total == 0 { 0.0 } else { c as f64 / total as f64 };
            let shade = (255.0 * (1.0 - 0.85 * frac)).round() as u8;
            let (cx, cy) = (l + cell * j as f64, t + cell * i as f64);
            let _ = writeln!(
                s,
                "<rect x=\"{cx}\" y=\"{cy}\" width=\"{cell}\" height=\"{cell}\" fill=\"rgb({shade},{shade},255)\" stroke=\"#888\"/>"
            );
            let ink = if frac > 0.6 { "white" } else { "black" };
            let _ = writeln!(
                s,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"{ink}\">{c}</text>",
                cx + cell / 2.0,
                cy + cell / 2.0 + 4.0
            );
        }
    }
    for (k, class) in DamageClass::ALL.iter().enumerate() {
        let _ = writeln!(s, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{class}</text>", l + cell * (k as f64 + 0.5), t - 8.0);
        let _ = writeln!(s, "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{class}</text>", l - 6.0, t + cell * (k as f64 + 0.5) + 4.0);
    }
    s.push_str("</svg>\n");
    s
}

/// Horizontal bars of mean importance with a +-std whisker.
pub fn importance(title: &str, features: &[FeatureImportance]) -> String {
    let bar = 24.0;
    let (l, r, t) = (90.0, 40.0, 40.0);
    let pw = 420.0;
    let w = l + pw + r;
    let h = t + bar * features.len() as f64 + 40.0;
    let hi = features.iter().map(|f| f.mean + f.std).fold(0.0, f64::max).max(1e-9);
    let lo = features.iter().map(|f| f.mean - f.std).fold(0.0, f64::min);
    let x = |v: f64| l + pw * (v - lo) / (hi - lo);
    let mut s = open(w as u32, h as u32);
    let _ = writeln!(s, "<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">{}</text>", w / 2.0, escape(title));
    let _ = writeln!(s, "<line x1=\"{0}\" y1=\"{t}\" x2=\"{0}\" y2=\"{1}\" stroke=\"#444\"/>", x(0.0), t + bar * features.len() as f64);
    for (i, f) in features.iter().enumerate() {
        let y = t + bar * i as f64;
        let (a, b) = (x(0.0).min(x(f.mean)), x(0.0).max(x(f.mean)));
        let _ = writeln!(s, "<rect x=\"{a:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"{}\"/>", y + 4.0, b - a, bar - 8.0, PALETTE[0]);
        let _ = writeln!(
            s,
            "<line x1=\"{:.1}\" y1=\"{2:.1}\" x2=\"{:.1}\" y2=\"{2:.1}\" stroke=\"black\"/>",
            x(f.mean - f.std),
            x(f.mean + f.std),
            y + bar / 2.0
        );
        let _ = writeln!(s, "<text x=\"{}\" y=\"{:.1}\" text-anchor=\"end\">{}</text>", l - 6.0, y + bar / 2.0 + 4.0, escape(&f.feature));
    }
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">mean accuracy drop</text>",
        l + pw / 2.0,
        h - 10.0
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn confusion_has_one_cell_per_entry() {
        let mut m = [[0u32; 5]; 5];
        m[1][1] = 7;
        let svg = confusion("RF", &m);
        assert_eq!(svg.matches("<rect x=").count(), 25);
        assert!(svg.contains(">7</text>"));
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn labels_are_escaped() {
        let f = [FeatureImportance { feature: "a<b".into(), mean: 0.1, std: 0.01 }];
        assert!(importance("x & y", &f).contains("a&lt;b"));
    }
}
