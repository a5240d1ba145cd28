//! Report structures and rendering for every subcommand.
//!
//! Each command produces one report struct, rendered either as plain text or
//! as JSON (`--json`). JSON output is deterministic byte-for-byte: field
//! order is fixed by the struct declarations, floating-point values use
//! Rust's shortest round-trip formatting, and timing never appears (wall
//! clock lives in the plain rendering only). Counts that are mathematically
//! unbounded integers (`count`, `euler`, `predicted_off`) are serialized as
//! decimal strings so consumers never face 64-bit truncation; structural
//! sizes (point totals, multiplicities) are plain JSON numbers. The JSON
//! schemas live in `schemas/*.v1.json` at the repository root.

use logres::solver::{SingularityInventory, SingularPoint};
use logres::tolerance::ToleranceConfig;
use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;
use std::fmt::Write as _;
use std::time::Duration;

/// Output of `logres delta`.
#[derive(Debug, Serialize)]
pub struct DeltaReport {
    pub schema: &'static str,
    pub k: u32,
    pub d: u32,
    pub n: u32,
    /// Signed singularity count outside the divisor, as a decimal string.
    pub count: String,
    pub verdict: String,
    pub case: String,
    /// The three equivalent formula forms, present under `--all-forms`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forms: Option<DeltaForms>,
}

#[derive(Debug, Serialize)]
pub struct DeltaForms {
    pub sum: String,
    pub closed: String,
    pub alternating: String,
}

/// Output of `logres euler`.
#[derive(Debug, Serialize)]
pub struct EulerReport {
    pub schema: &'static str,
    pub n: u32,
    pub degrees: Vec<u32>,
    /// Euler characteristic of the divisor complement, as a decimal string.
    pub euler: String,
}

/// Output of `logres verify`.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub suite: String,
    pub max_n: u32,
    pub max_k: u32,
    pub cases: usize,
    pub counterexamples: Vec<String>,
    pub pass: bool,
}

/// Output of `logres sing`.
#[derive(Debug, Serialize)]
pub struct SingReport {
    pub schema: &'static str,
    pub degree: u32,
    pub total: usize,
    pub on_divisor: usize,
    pub off_divisor: usize,
    /// Chern-class prediction for the off-divisor count, decimal string.
    pub predicted_off: String,
    pub points: Vec<PointReport>,
    /// False when any point is degenerate; counts are then uncertified.
    pub certified: bool,
}

#[derive(Debug, Serialize)]
pub struct PointReport {
    /// Normalized homogeneous coordinates, each as `[re, im]`.
    pub coords: [[f64; 2]; 3],
    pub chart: usize,
    pub multiplicity: usize,
    pub nondegenerate: bool,
    pub on_divisor: bool,
    /// Local indices; `null` at degenerate points.
    pub milnor: Option<i64>,
    pub gsv: Option<i64>,
    pub log_index: Option<i64>,
}

impl SingReport {
    pub fn new(degree: u32, inv: &SingularityInventory, predicted: &BigInt) -> Self {
        SingReport {
            schema: "sing-report.v1",
            degree,
            total: inv.total_with_multiplicity,
            on_divisor: inv.on_divisor,
            off_divisor: inv.off_divisor,
            predicted_off: predicted.to_string(),
            points: inv.points.iter().map(PointReport::new).collect(),
            certified: inv.certified(),
        }
    }
}

impl PointReport {
    fn new(p: &SingularPoint) -> Self {
        PointReport {
            coords: p.coords.map(|c| [c.re, c.im]),
            chart: p.chart,
            multiplicity: p.multiplicity,
            nondegenerate: p.nondegenerate,
            on_divisor: p.on_divisor,
            milnor: p.index.map(|ix| ix.milnor),
            gsv: p.index.map(|ix| ix.gsv),
            log_index: p.index.map(|ix| ix.log_index),
        }
    }
}

/// Serializes any report as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Formats a real number for plain-text display: rounded at the 1e-10 scale
/// (matching the solver's coordinate tolerance) so converged coordinates
/// print as the clean values they certify to, with `-0` normalized away.
pub fn fmt_real(x: f64) -> String {
    let rounded = (x * 1e10).round() / 1e10;
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    format!("{rounded}")
}

/// Formats a complex coordinate as `a`, `bi`, or `a + bi` / `a - bi`.
pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_real(z.re);
    let im = fmt_real(z.im);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".to_string(),
        ("0", "-1") => "-i".to_string(),
        ("0", _) => format!("{im}i"),
        (_, _) => {
            if let Some(mag) = im.strip_prefix('-') {
                if mag == "1" {
                    format!("{re} - i")
                } else {
                    format!("{re} - {mag}i")
                }
            } else if im == "1" {
                format!("{re} + i")
            } else {
                format!("{re} + {im}i")
            }
        }
    }
}

fn fmt_point_coords(coords: &[[f64; 2]; 3]) -> String {
    let parts: Vec<String> = coords
        .iter()
        .map(|&[re, im]| fmt_complex(Complex64::new(re, im)))
        .collect();
    format!("({})", parts.join(" : "))
}

fn fmt_elapsed(elapsed: Duration) -> String {
    format!("elapsed: {:.1}ms", elapsed.as_secs_f64() * 1e3)
}

pub fn render_delta_plain(r: &DeltaReport, elapsed: Duration) -> String {
    let mut out = format!("{}, {}/{}\n", r.count, r.verdict, r.case);
    if let Some(forms) = &r.forms {
        let _ = writeln!(out, "sum form:         {}", forms.sum);
        let _ = writeln!(out, "closed form:      {}", forms.closed);
        let _ = writeln!(out, "alternating form: {}", forms.alternating);
    }
    let _ = writeln!(out, "{}", fmt_elapsed(elapsed));
    out
}

pub fn render_euler_plain(r: &EulerReport, elapsed: Duration) -> String {
    let degrees: Vec<String> = r.degrees.iter().map(u32::to_string).collect();
    format!(
        "{}\ncomplement of degrees ({}) in dimension {}\n{}\n",
        r.euler,
        degrees.join(", "),
        r.n,
        fmt_elapsed(elapsed)
    )
}

pub fn render_verify_plain(r: &VerifyReport, elapsed: Duration) -> String {
    let mut out = format!(
        "suite {}: {} cases swept (max_n={}, max_k={})\n",
        r.suite, r.cases, r.max_n, r.max_k
    );
    for c in &r.counterexamples {
        let _ = writeln!(out, "counterexample: {c}");
    }
    let _ = writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" });
    let _ = writeln!(out, "{}", fmt_elapsed(elapsed));
    out
}

pub fn render_sing_plain(
    r: &SingReport,
    tol: &ToleranceConfig,
    elapsed: Duration,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field degree: {}", r.degree);
    let _ = writeln!(out, "singularities (with multiplicity): {}", r.total);
    let _ = writeln!(out, "on divisor:  {}", r.on_divisor);
    let _ = writeln!(out, "off divisor: {}", r.off_divisor);
    let _ = writeln!(out, "predicted off divisor: {}", r.predicted_off);
    let _ = writeln!(out, "points:");
    for p in &r.points {
        let indices = match (p.milnor, p.gsv, p.log_index) {
            (Some(m), Some(g), Some(l)) => {
                format!("milnor {m}  gsv {g}  log_index {l}")
            }
            _ => "indices n/a".to_string(),
        };
        let _ = writeln!(
            out,
            "  {}  chart {}  mult {}  {}  {}  {}",
            fmt_point_coords(&p.coords),
            p.chart,
            p.multiplicity,
            if p.nondegenerate { "nondegenerate" } else { "DEGENERATE" },
            if p.on_divisor { "on divisor " } else { "off divisor" },
            indices
        );
    }
    if r.certified {
        let matched = r.predicted_off == r.off_divisor.to_string();
        let _ = writeln!(
            out,
            "verdict: {}",
            if matched {
                "empirical off-divisor count matches the prediction"
            } else {
                "MISMATCH between empirical and predicted off-divisor counts"
            }
        );
    } else {
        let _ = writeln!(
            out,
            "verdict: UNCERTIFIED (degenerate points present; multiplicities \
             are resultant readings, not certified local data)"
        );
    }
    let _ = writeln!(
        out,
        "tolerances: profile {} (merge {:e}, residual {:e}, divisor {:e}, \
         jacobian {:e})",
        tol.profile.name(),
        tol.merge,
        tol.residual,
        tol.divisor_residual,
        tol.jacobian_threshold
    );
    let _ = writeln!(out, "{}", fmt_elapsed(elapsed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting_rounds_noise_and_normalizes_zero() {
        assert_eq!(fmt_real(0.0), "0");
        assert_eq!(fmt_real(-0.0), "0");
        assert_eq!(fmt_real(1.0), "1");
        assert_eq!(fmt_real(-1.0000000000000002), "-1");
        assert_eq!(fmt_real(2.5e-15), "0");
        assert_eq!(fmt_real(0.5), "0.5");
    }

    #[test]
    fn complex_formatting_covers_all_shapes() {
        assert_eq!(fmt_complex(Complex64::new(1.0, 0.0)), "1");
        assert_eq!(fmt_complex(Complex64::new(0.0, 1.0)), "i");
        assert_eq!(fmt_complex(Complex64::new(0.0, -1.0)), "-i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 2.5)), "2.5i");
        assert_eq!(fmt_complex(Complex64::new(-1.0, 1.0)), "-1 + i");
        assert_eq!(fmt_complex(Complex64::new(0.5, -0.25)), "0.5 - 0.25i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 0.0)), "0");
    }

    #[test]
    fn delta_report_first_line_is_the_contract() {
        let r = DeltaReport {
            schema: "delta-report.v1",
            k: 3,
            d: 2,
            n: 3,
            count: "0".into(),
            verdict: "AllOnDivisor".into(),
            case: "1b".into(),
            forms: None,
        };
        let plain = render_delta_plain(&r, Duration::from_millis(1));
        assert!(plain.starts_with("0, AllOnDivisor/1b\n"));
    }

    #[test]
    fn json_is_deterministic_and_timing_free() {
        let r = EulerReport {
            schema: "euler-report.v1",
            n: 2,
            degrees: vec![3],
            euler: "3".into(),
        };
        let a = to_json(&r);
        let b = to_json(&r);
        assert_eq!(a, b);
        assert!(!a.contains("elapsed"));
        assert!(a.ends_with('\n'));
    }
}
