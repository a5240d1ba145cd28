//! `logres` — singularities of holomorphic foliations on projective space.
//!
//! Four subcommands:
//!
//! * `delta`: the exact count of singularities outside an invariant divisor,
//!   from the three integer parameters `(k, d, n)`, with its classification.
//! * `verify`: sweep one of the identity families over a parameter grid and
//!   report counterexamples (there are none; the sweeps are the evidence).
//! * `euler`: Euler characteristic of the complement of a normal-crossing
//!   divisor of given component degrees.
//! * `sing`: read a homogeneous plane vector field from a file, enumerate
//!   its singularities numerically, classify them against invariant divisor
//!   components, and compare the off-divisor count with the Chern-class
//!   prediction.
//!
//! Exit codes: 0 success, 1 verification failure (a count mismatch or a
//! numeric failure), 2 usage or parse error, 3 invalid foliation input
//! (degenerate singular locus, non-invariant divisor, malformed field),
//! 4 uncertified result (degenerate singularities; a partial report is
//! still printed). The `LOGRES_TOLERANCE_PROFILE` environment variable
//! selects the numeric profile (`default` or `strict`).

mod parser;
mod report;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use logres::counts::{classify, delta_alternating, delta_closed, delta_sum, CountParams};
use logres::foliation::{check_divisor_polynomial, HomogeneousVectorField};
use logres::logchern::{
    euler_complement, log_chern_ncd_multiindex, log_chern_smooth_closed,
    log_chern_smooth_recursive, log_total_ncd, verify_component_removal,
    verify_smooth_residue_identity, Divisor,
};
use logres::poly::MultiPoly;
use logres::solver::{enumerate_singularities, predicted_outside_count, SolverError};
use logres::tolerance::ToleranceConfig;
use num_bigint::BigInt;
use parser::{parse_field_file, parse_polynomial, PLANE_VARS};
use report::{DeltaForms, DeltaReport, EulerReport, SingReport, VerifyReport};
use std::path::PathBuf;
use std::time::Instant;

#[derive(ClapParser)]
#[command(
    name = "logres",
    version,
    about = "Singularity counts of holomorphic foliations on projective space: \
             exact Chern-class arithmetic and certified numeric enumeration \
             on the plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count singularities outside an invariant divisor from (k, d, n)
    Delta {
        /// Divisor degree (sum of component degrees), k >= 1
        #[arg(short)]
        k: u32,
        /// Foliation degree, d >= 0
        #[arg(short)]
        d: u32,
        /// Ambient projective dimension, n >= 2
        #[arg(short)]
        n: u32,
        /// Also print the three equivalent formula forms
        #[arg(long)]
        all_forms: bool,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Sweep an identity family over a grid and report counterexamples
    Verify {
        /// Which identity family to sweep
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest ambient dimension in the sweep
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        /// Largest degree parameter in the sweep
        #[arg(long, default_value_t = 5)]
        max_k: u32,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic of a normal-crossing divisor complement
    Euler {
        /// Ambient projective dimension, n >= 2
        #[arg(short)]
        n: u32,
        /// Component degrees of the divisor (at least one)
        #[arg(required = true)]
        degrees: Vec<u32>,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the singularities of a plane vector field from a file
    Sing {
        /// Field file: three polynomial lines in z0, z1, z2 (# comments)
        file: PathBuf,
        /// Invariant divisor component (repeatable), e.g. --divisor z0
        #[arg(long = "divisor")]
        divisor: Vec<String>,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    /// Residue identity for a smooth hypersurface divisor
    Smooth,
    /// Component-removal identity for normal-crossing divisors
    Ncd,
    /// Agreement of the three count formulas and the classification
    Delta,
    /// Agreement of the four logarithmic Chern class computations
    Logchern,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Smooth => "smooth",
            Suite::Ncd => "ncd",
            Suite::Delta => "delta",
            Suite::Logchern => "logchern",
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let tol = match tolerance_from_env() {
        Ok(tol) => tol,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match cli.command {
        Command::Delta { k, d, n, all_forms, json } => cmd_delta(k, d, n, all_forms, json),
        Command::Verify { suite, max_n, max_k, json } => {
            cmd_verify(suite, max_n, max_k, json)
        }
        Command::Euler { n, degrees, json } => cmd_euler(n, degrees, json),
        Command::Sing { file, divisor, json } => cmd_sing(&file, &divisor, json, &tol),
    }
}

fn tolerance_from_env() -> Result<ToleranceConfig, String> {
    match std::env::var("LOGRES_TOLERANCE_PROFILE") {
        Ok(name) => ToleranceConfig::by_name(&name).ok_or(format!(
            "unknown tolerance profile `{name}` (expected `default` or `strict`)"
        )),
        Err(std::env::VarError::NotPresent) => Ok(ToleranceConfig::default_profile()),
        Err(e) => Err(format!("LOGRES_TOLERANCE_PROFILE: {e}")),
    }
}

fn cmd_delta(k: u32, d: u32, n: u32, all_forms: bool, json: bool) -> i32 {
    let start = Instant::now();
    let params = match CountParams::new(k, d, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let sum = delta_sum(&params);
    let closed = delta_closed(&params);
    let alternating = delta_alternating(&params);
    let classification = classify(&params);
    let report = DeltaReport {
        schema: "delta-report.v1",
        k,
        d,
        n,
        count: classification.count.to_string(),
        verdict: classification.verdict.to_string(),
        case: classification.case_label.code().to_string(),
        forms: all_forms.then(|| DeltaForms {
            sum: sum.to_string(),
            closed: closed.to_string(),
            alternating: alternating.to_string(),
        }),
    };
    if json {
        print!("{}", report::to_json(&report));
    } else {
        print!("{}", report::render_delta_plain(&report, start.elapsed()));
    }
    // The three forms are one theorem; disagreement would mean a broken build.
    if sum != closed || closed != alternating || classification.count != sum {
        eprintln!("error: the three count forms disagree");
        return 1;
    }
    0
}

fn cmd_euler(n: u32, degrees: Vec<u32>, json: bool) -> i32 {
    let start = Instant::now();
    let div = match Divisor::new(n as usize, degrees.clone()) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let euler = euler_complement(&div);
    let report = EulerReport {
        schema: "euler-report.v1",
        n,
        degrees,
        euler: euler.to_string(),
    };
    if json {
        print!("{}", report::to_json(&report));
    } else {
        print!("{}", report::render_euler_plain(&report, start.elapsed()));
    }
    0
}

fn cmd_verify(suite: Suite, max_n: u32, max_k: u32, json: bool) -> i32 {
    let start = Instant::now();
    if max_n < 2 || max_k < 1 {
        eprintln!("error: verify needs max_n >= 2 and max_k >= 1");
        return 2;
    }
    let (cases, counterexamples) = match suite {
        Suite::Smooth => sweep_smooth(max_n, max_k),
        Suite::Ncd => sweep_ncd(max_n, max_k),
        Suite::Delta => sweep_delta(max_n, max_k),
        Suite::Logchern => sweep_logchern(max_n, max_k),
    };
    let report = VerifyReport {
        schema: "verify-report.v1",
        suite: suite.name().to_string(),
        max_n,
        max_k,
        cases,
        pass: counterexamples.is_empty(),
        counterexamples,
    };
    if json {
        print!("{}", report::to_json(&report));
    } else {
        print!("{}", report::render_verify_plain(&report, start.elapsed()));
    }
    if report.pass {
        0
    } else {
        1
    }
}

/// Residue identity for smooth hypersurfaces over the full twist window.
fn sweep_smooth(max_n: u32, max_k: u32) -> (usize, Vec<String>) {
    let mut cases = 0;
    let mut bad = Vec::new();
    let a_window = max_k as i64;
    for n in 2..=max_n as usize {
        for k in 1..=max_k {
            for a in -a_window..=a_window {
                cases += 1;
                match verify_smooth_residue_identity(n, k, a) {
                    Ok((lhs, rhs)) if lhs == rhs => {}
                    Ok((lhs, rhs)) => {
                        bad.push(format!("n={n} k={k} a={a}: {lhs} != {rhs}"))
                    }
                    Err(e) => bad.push(format!("n={n} k={k} a={a}: {e}")),
                }
            }
        }
    }
    (cases, bad)
}

/// All degree tuples with entries in `1..=max` and the given length.
fn degree_tuples(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|t| {
                (1..=max).map(move |k| {
                    let mut next = t.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    out
}

/// Component-removal identity, plus invariance of both sides under
/// permutation of the retained components.
fn sweep_ncd(max_n: u32, max_k: u32) -> (usize, Vec<String>) {
    let mut cases = 0;
    let mut bad = Vec::new();
    let max_deg = max_k.min(3);
    for n in 2..=max_n as usize {
        for count in 2..=3usize {
            for degrees in degree_tuples(count, max_deg) {
                for a in -2..=2i64 {
                    cases += 1;
                    let div = match Divisor::new(n, degrees.clone()) {
                        Ok(d) => d,
                        Err(e) => {
                            bad.push(format!("n={n} degrees={degrees:?}: {e}"));
                            continue;
                        }
                    };
                    let label = format!("n={n} degrees={degrees:?} a={a}");
                    match verify_component_removal(&div, a) {
                        Ok((lhs, rhs)) if lhs == rhs => {
                            // Permute the retained components (reverse them)
                            // and demand the identical pair of values.
                            let mut permuted = degrees.clone();
                            permuted[..count - 1].reverse();
                            let div_p = Divisor::new(n, permuted)
                                .expect("same degrees, still valid");
                            match verify_component_removal(&div_p, a) {
                                Ok((l2, r2)) if l2 == lhs && r2 == rhs => {}
                                Ok((l2, r2)) => bad.push(format!(
                                    "{label}: permuting retained components moved \
                                     the values ({lhs},{rhs}) -> ({l2},{r2})"
                                )),
                                Err(e) => bad.push(format!("{label}: {e}")),
                            }
                        }
                        Ok((lhs, rhs)) => bad.push(format!("{label}: {lhs} != {rhs}")),
                        Err(e) => bad.push(format!("{label}: {e}")),
                    }
                }
            }
        }
    }
    (cases, bad)
}

/// Agreement of the three count formulas and consistency of the verdict.
fn sweep_delta(max_n: u32, max_k: u32) -> (usize, Vec<String>) {
    use logres::counts::Verdict;
    use num_traits::Zero;
    let mut cases = 0;
    let mut bad = Vec::new();
    for k in 1..=max_k {
        for d in 0..=max_k {
            for n in 2..=max_n {
                cases += 1;
                let params = match CountParams::new(k, d, n) {
                    Ok(p) => p,
                    Err(e) => {
                        bad.push(format!("k={k} d={d} n={n}: {e}"));
                        continue;
                    }
                };
                let sum = delta_sum(&params);
                let closed = delta_closed(&params);
                let alternating = delta_alternating(&params);
                if sum != closed || closed != alternating {
                    bad.push(format!(
                        "k={k} d={d} n={n}: forms disagree ({sum}, {closed}, \
                         {alternating})"
                    ));
                    continue;
                }
                let cls = classify(&params);
                let all_on = cls.verdict == Verdict::AllOnDivisor;
                if all_on != sum.is_zero() || cls.count != sum {
                    bad.push(format!(
                        "k={k} d={d} n={n}: classification {:?} inconsistent \
                         with count {sum}",
                        cls.verdict
                    ));
                }
            }
        }
    }
    (cases, bad)
}

/// Agreement of the four logarithmic Chern computations: closed and
/// recursive coefficients for smooth divisors, and the series-product and
/// multi-index expansions for normal-crossing divisors (a smooth divisor is
/// the single-component case, tying all four together).
fn sweep_logchern(max_n: u32, max_k: u32) -> (usize, Vec<String>) {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 2..=max_n as usize {
        for k in 1..=max_k {
            cases += 1;
            let closed = log_chern_smooth_closed(n, k);
            let recursive = log_chern_smooth_recursive(n, k);
            let div = match Divisor::new(n, vec![k]) {
                Ok(d) => d,
                Err(e) => {
                    bad.push(format!("n={n} k={k}: {e}"));
                    continue;
                }
            };
            let product = log_total_ncd(&div);
            let multiindex = log_chern_ncd_multiindex(&div);
            for l in 0..=n {
                let c = closed[l].coeff(l);
                let r = recursive[l].coeff(l);
                let p = product.chern(l);
                let m = multiindex.chern(l);
                if c != r || c != p || c != m {
                    bad.push(format!(
                        "n={n} k={k} degree {l}: closed {c}, recursive {r}, \
                         product {p}, multiindex {m}"
                    ));
                }
            }
        }
    }
    // Multi-component agreement of the two independent NCD expansions.
    let max_deg = max_k.min(3);
    for n in 2..=max_n.min(4) as usize {
        for count in 2..=3usize {
            for degrees in degree_tuples(count, max_deg) {
                cases += 1;
                let div = Divisor::new(n, degrees.clone()).expect("positive degrees");
                let product = log_total_ncd(&div);
                let multiindex = log_chern_ncd_multiindex(&div);
                for l in 0..=n {
                    if product.chern(l) != multiindex.chern(l) {
                        bad.push(format!(
                            "n={n} degrees={degrees:?} degree {l}: product {} != \
                             multiindex {}",
                            product.chern(l),
                            multiindex.chern(l)
                        ));
                    }
                }
            }
        }
    }
    (cases, bad)
}

fn cmd_sing(file: &PathBuf, divisor: &[String], json: bool, tol: &ToleranceConfig) -> i32 {
    let start = Instant::now();
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return 2;
        }
    };
    let components = match parse_field_file(&text, &PLANE_VARS) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {}: {msg}", file.display());
            return 2;
        }
    };
    let mut divisor_polys: Vec<MultiPoly> = Vec::with_capacity(divisor.len());
    for (i, src) in divisor.iter().enumerate() {
        match parse_polynomial(src, &PLANE_VARS) {
            Ok(p) => divisor_polys.push(p),
            Err(e) => {
                eprintln!("error: divisor component {i}: {e}");
                return 2;
            }
        }
    }
    let field = match HomogeneousVectorField::new(components) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: invalid vector field: {e}");
            return 3;
        }
    };
    let mut degrees = Vec::with_capacity(divisor_polys.len());
    for (i, p) in divisor_polys.iter().enumerate() {
        match check_divisor_polynomial(p, 3) {
            Ok(deg) => degrees.push(deg),
            Err(e) => {
                eprintln!("error: divisor component {i}: {e}");
                return 3;
            }
        }
    }
    let inventory = match enumerate_singularities(&field, &divisor_polys, tol) {
        Ok(inv) => inv,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                SolverError::RootNonConvergence { .. } => 1,
                SolverError::Inconclusive => 4,
                _ => 3,
            };
        }
    };
    let predicted = match predicted_outside_count(field.degree(), &degrees) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };
    let report = SingReport::new(field.degree(), &inventory, &predicted);
    if json {
        print!("{}", report::to_json(&report));
    } else {
        print!("{}", report::render_sing_plain(&report, tol, start.elapsed()));
    }
    if !inventory.certified() {
        eprintln!(
            "warning: degenerate singularities present; the report is partial \
             and the counts are not certified"
        );
        return 4;
    }
    if BigInt::from(inventory.off_divisor) != predicted {
        eprintln!(
            "error: empirical off-divisor count {} does not match the \
             prediction {predicted}",
            inventory.off_divisor
        );
        return 1;
    }
    0
}
