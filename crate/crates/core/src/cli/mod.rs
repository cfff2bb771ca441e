//! Command implementations behind the `covpart` binary.
//!
//! Each command returns an [`Outcome`] holding its exit code and the exact
//! text for stdout and stderr, so the binary only prints and exits.

pub mod format;
mod render;

use std::fmt::Write as _;
use std::hint::black_box;
use std::path::Path;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::covering::Covering;
use crate::covgen::{random_covering, ENUMERATION_CAP};
use crate::error::Error;
use crate::neighborhoods::{oracle_is_neighborhood_partition, NeighborhoodMap};
use crate::partition_check::{
    check_excluded_number, check_reduct_sufficient, check_uniform_sufficient, full_report,
    PartitionVerdict, SufficientVerdict,
};
use crate::verify;

use self::format::{parse_covering, print_covering, ParsedCovering};

pub const EXIT_PARTITION: i32 = 0;
pub const EXIT_NOT_PARTITION: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
/// The exact check and the oracle disagreed; always a bug.
pub const EXIT_INTERNAL: i32 = 4;

/// Default universe size up to which `check --method auto` also runs the
/// oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 512;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(e: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CheckMethod {
    #[default]
    Auto,
    Excluded,
    Oracle,
    Reduct,
    Uniform,
}

impl std::str::FromStr for CheckMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(CheckMethod::Auto),
            "excluded" => Ok(CheckMethod::Excluded),
            "oracle" => Ok(CheckMethod::Oracle),
            "reduct" => Ok(CheckMethod::Reduct),
            "uniform" => Ok(CheckMethod::Uniform),
            other => Err(format!(
                "unknown method `{other}` (expected auto, excluded, oracle, reduct or uniform)"
            )),
        }
    }
}

fn load(path: &Path) -> Result<(ParsedCovering, String), Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    let parsed = parse_covering(&text)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    let warnings = parsed
        .duplicate_lines
        .iter()
        .map(|line| {
            format!(
                "warning: {}: line {line}: duplicate block ignored\n",
                path.display()
            )
        })
        .collect();
    Ok((parsed, warnings))
}

fn exact_outcome(c: &Covering, v: &PartitionVerdict, label: &str) -> Outcome {
    let u = c.universe();
    let mut out = String::new();
    if v.is_partition {
        writeln!(out, "verdict: partition").unwrap();
        writeln!(out, "method: {label}").unwrap();
        return Outcome {
            code: EXIT_PARTITION,
            stdout: out,
            stderr: String::new(),
        };
    }
    writeln!(out, "verdict: not a partition").unwrap();
    writeln!(out, "method: {label}").unwrap();
    if let Some((x, y)) = v.witness {
        let (lx, ly) = (u.label(x), u.label(y));
        let map = NeighborhoodMap::new(c);
        writeln!(out, "witness: {lx} {ly}").unwrap();
        writeln!(out, "  N({lx}) = {{{}}}", u.labels_of(map.get(x)).join(" ")).unwrap();
        writeln!(out, "  N({ly}) = {{{}}}", u.labels_of(map.get(y)).join(" ")).unwrap();
    }
    Outcome {
        code: EXIT_NOT_PARTITION,
        stdout: out,
        stderr: String::new(),
    }
}

fn sufficient_outcome(v: SufficientVerdict, label: &str) -> Outcome {
    Outcome {
        code: match v {
            SufficientVerdict::Partition => EXIT_PARTITION,
            SufficientVerdict::Inconclusive => EXIT_INCONCLUSIVE,
        },
        stdout: format!("verdict: {}\nmethod: {label}\n", v.name()),
        stderr: String::new(),
    }
}

/// Decides one covering given as text.
pub fn check_text(text: &str, method: CheckMethod, oracle_bound: usize) -> Outcome {
    match parse_covering(text) {
        Ok(p) => check_covering(&p.covering, method, oracle_bound),
        Err(e) => Outcome::input_error(e),
    }
}

pub fn check_covering(c: &Covering, method: CheckMethod, oracle_bound: usize) -> Outcome {
    match method {
        CheckMethod::Excluded => exact_outcome(c, &check_excluded_number(c), "excluded-number"),
        CheckMethod::Oracle => exact_outcome(c, &oracle_is_neighborhood_partition(c), "oracle"),
        CheckMethod::Reduct => sufficient_outcome(check_reduct_sufficient(c), "reduct-sufficient"),
        CheckMethod::Uniform => {
            sufficient_outcome(check_uniform_sufficient(c), "uniform-sufficient")
        }
        CheckMethod::Auto => {
            let v = check_excluded_number(c);
            if c.n() > oracle_bound {
                return exact_outcome(c, &v, "excluded-number");
            }
            let oracle = oracle_is_neighborhood_partition(c);
            if oracle.is_partition != v.is_partition {
                return Outcome {
                    code: EXIT_INTERNAL,
                    stdout: String::new(),
                    stderr: format!(
                        "error: {}\n",
                        Error::InternalDisagreement(format!(
                            "excluded-number={} oracle={}",
                            v.is_partition, oracle.is_partition
                        ))
                    ),
                };
            }
            exact_outcome(c, &v, "excluded-number, confirmed by oracle")
        }
    }
}

pub fn check_file(path: &Path, method: CheckMethod, oracle_bound: usize) -> Outcome {
    match load(path) {
        Ok((parsed, warnings)) => {
            let mut o = check_covering(&parsed.covering, method, oracle_bound);
            o.stderr = warnings + &o.stderr;
            o
        }
        Err(o) => o,
    }
}

/// Full report for one covering as text or JSON.
pub fn report_covering(c: &Covering, json: bool) -> Outcome {
    match full_report(c) {
        Ok(r) => Outcome {
            code: if r.is_partition {
                EXIT_PARTITION
            } else {
                EXIT_NOT_PARTITION
            },
            stdout: if json {
                let mut s = serde_json::to_string_pretty(&r).expect("report serializes");
                s.push('\n');
                s
            } else {
                render::report_text(&r)
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INTERNAL,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn report_file(path: &Path, json: bool) -> Outcome {
    match load(path) {
        Ok((parsed, warnings)) => {
            let mut o = report_covering(&parsed.covering, json);
            o.stderr = warnings + &o.stderr;
            o
        }
        Err(o) => o,
    }
}

pub fn verify(max_n: usize, samples: usize, seed: u64) -> Outcome {
    if max_n > ENUMERATION_CAP {
        return Outcome::input_error(Error::UniverseTooLarge {
            n: max_n,
            cap: ENUMERATION_CAP,
        });
    }
    let summary = match verify::run(max_n, samples, seed) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = String::new();
    for &(n, k) in &summary.exhaustive {
        writeln!(out, "exhaustive n={n}: {k} coverings").unwrap();
    }
    if samples == 0 {
        writeln!(out, "random: skipped").unwrap();
    } else {
        writeln!(out, "random: {} coverings (seed {seed})", summary.random).unwrap();
    }
    writeln!(out, "checked: {}", summary.total()).unwrap();
    writeln!(out, "failures: {}", summary.failures.len()).unwrap();
    let mut err = String::new();
    for f in &summary.failures {
        writeln!(err, "FAIL {}", f.origin).unwrap();
        for m in &f.messages {
            writeln!(err, "  {m}").unwrap();
        }
        for line in print_covering(&f.covering).lines() {
            writeln!(err, "  | {line}").unwrap();
        }
    }
    Outcome {
        code: if summary.passed() { 0 } else { 1 },
        stdout: out,
        stderr: err,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub block_counts: Vec<usize>,
    pub densities: Vec<f64>,
    pub seed: u64,
    pub repetitions: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub blocks: usize,
    pub method: &'static str,
    pub median_ns: u128,
    pub verdict: &'static str,
    pub agreement: bool,
}

pub const BENCH_METHODS: [&str; 3] = ["excluded", "oracle", "reduct-first"];

fn run_method(method: &str, c: &Covering) -> bool {
    match method {
        "excluded" => check_excluded_number(c).is_partition,
        "oracle" => oracle_is_neighborhood_partition(c).is_partition,
        "reduct-first" => {
            check_reduct_sufficient(c).is_partition() || check_excluded_number(c).is_partition
        }
        _ => unreachable!("unknown bench method"),
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

pub fn bench_rows(cfg: &BenchConfig) -> Result<Vec<BenchRow>, Error> {
    let reps = cfg.repetitions.max(1);
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        for &m in &cfg.block_counts {
            for &density in &cfg.densities {
                let c = random_covering(n, m, density, cfg.seed)?;
                let truth = oracle_is_neighborhood_partition(&c).is_partition;
                for method in BENCH_METHODS {
                    let mut verdict = truth;
                    let times = (0..reps)
                        .map(|_| {
                            let start = Instant::now();
                            verdict = black_box(run_method(method, black_box(&c)));
                            start.elapsed()
                        })
                        .collect();
                    rows.push(BenchRow {
                        n,
                        m,
                        density,
                        blocks: c.len(),
                        method,
                        median_ns: median(times).as_nanos(),
                        verdict: if verdict {
                            "partition"
                        } else {
                            "not-partition"
                        },
                        agreement: verdict == truth,
                    });
                }
            }
        }
    }
    Ok(rows)
}

pub fn bench(cfg: &BenchConfig) -> Outcome {
    let rows = match bench_rows(cfg) {
        Ok(rows) => rows,
        Err(e) => return Outcome::input_error(e),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row).expect("csv row");
    }
    let stdout = String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8 csv");
    let disagreements = rows.iter().filter(|r| !r.agreement).count();
    Outcome {
        code: if disagreements == 0 { 0 } else { 1 },
        stdout,
        stderr: if disagreements == 0 {
            String::new()
        } else {
            format!("error: {disagreements} rows disagree with the oracle\n")
        },
    }
}

/// Canonical text of a random covering.
pub fn gen_text(n: usize, m: usize, density: f64, seed: u64) -> Result<String, Error> {
    Ok(print_covering(&random_covering(n, m, density, seed)?))
}

pub fn gen(n: usize, m: usize, density: f64, seed: u64, out: Option<&Path>) -> Outcome {
    let text = match gen_text(n, m, density, seed) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(e),
    };
    match out {
        None => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Outcome::default(),
            Err(e) => Outcome::input_error(format!("{}: {e}", path.display())),
        },
    }
}
