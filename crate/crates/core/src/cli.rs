//! Command-line front end: argument parsing, report assembly and the
//! exit-code contract.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | agreement, or nothing to compare against |
//! | 1 | internal failure |
//! | 2 | disagreement with a proved predictor, or a symbolic mismatch |
//! | 3 | disagreement with a conjectural predictor |
//! | 4 | invalid input or enumeration cap exceeded |
//! | 5 | conjecture scan found a counterexample (artifact written) |

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::curve::{CountReport, CurveParams, TraceCurve};
use crate::error::{Error, Result};
use crate::field::EnumerationCap;
use crate::number_theory::{
    characterize_divisors, conjecture1_scan, conjecture2_scan, f_gcd_conjecture_scan, gcd_always_one, predict,
    prime_power, PredictionStatus, ScanOutcome,
};
use crate::symbolic::{self, artifact, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Internal = 1,
    ExactMismatch = 2,
    ConjecturalMismatch = 3,
    InvalidInput = 4,
    Counterexample = 5,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn for_error(e: &Error) -> Exit {
        match e {
            Error::NotPrime(_)
            | Error::NotPrimePower(_)
            | Error::BadDegree(_)
            | Error::CapExceeded { .. }
            | Error::NotDivisor { .. }
            | Error::InvalidParams(_)
            | Error::Unsupported(_) => Exit::InvalidInput,
            _ => Exit::Internal,
        }
    }

    /// Exit for a count that disagreed (or not) with its predictor.
    fn for_count(r: &CountReport) -> Exit {
        match r.agrees {
            Some(false) if r.status().is_proved() => Exit::ExactMismatch,
            Some(false) => Exit::ConjecturalMismatch,
            _ => Exit::Ok,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "tracecurve", version, about = "Point counts, predictors and symbolic checks for twisted trace curves")]
pub struct Cli {
    /// Print the JSON report instead of the human-readable table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Ignore the enumeration cap.
    #[arg(long, global = true)]
    pub force: bool,
    /// Record wall-clock time in the manifest (makes the output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brute-force point count over F_{q^n}, q = p^r.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Also enumerate all (x, y) pairs as an independent check.
        #[arg(long)]
        oracle_xy: bool,
    },
    /// Closed-form prediction only; works for any prime power q.
    Predict {
        #[arg(long)]
        q: BigUint,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// One count per prime power q in a range, as CSV.
    Scan {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Prime divisors of F_{d+1} + F_{d-1} + 1 + (-1)^d and the residues of q they force.
    Divisors {
        #[arg(long, conflicts_with = "d_max", required_unless_present = "d_max")]
        d: Option<u32>,
        #[arg(long)]
        d_max: Option<u32>,
    },
    /// Exhaustive conjecture scans.
    Conjecture {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        q: Option<u64>,
        /// Extension degree for the membership-only scan.
        #[arg(long)]
        m: Option<u32>,
        /// Extension degree for the scan with the norm condition.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 99)]
        d_max: u32,
        /// Where counterexample artifacts are written.
        #[arg(long, default_value = ".")]
        artifact_dir: PathBuf,
    },
    /// Exact elimination for d = 2, n = 6.
    Symbolic {
        #[command(subcommand)]
        action: SymbolicAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Fibgcd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Prs,
    Interpolate,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Prs => Strategy::SubresultantPrs,
            StrategyArg::Interpolate => Strategy::EvaluateInterpolate,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum SymbolicAction {
    /// Rebuild F1, F2, G1, G2 and check every published fact.
    Verify {
        /// Also run finite-field spot checks for these odd q.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        q: Vec<u64>,
        #[arg(long, value_enum, default_value = "prs")]
        strategy: StrategyArg,
        /// Skip recomputing G1 with the other strategy.
        #[arg(long)]
        no_cross_check: bool,
    },
    /// Write F1/F2/G1/G2 as JSON.
    Dump {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "prs")]
        strategy: StrategyArg,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub tool_version: String,
    pub enumeration_cap: u64,
    pub forced: bool,
    /// Every source of randomness and how it is seeded.
    pub seeds: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    /// sha256 of the compact JSON of `{params, results}`.
    pub result_digest: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub params: Value,
    pub results: Value,
}

/// What a subcommand hands back before the manifest is attached.
pub struct Outcome {
    pub exit: Exit,
    pub params: Value,
    pub results: Value,
    /// Human-readable rendering; CSV for `scan`.
    pub text: String,
}

pub fn digest(params: &Value, results: &Value) -> String {
    let body = json!({ "params": params, "results": results });
    format!("{:x}", Sha256::digest(body.to_string().as_bytes()))
}

/// Parses `args`, runs the command, prints to stdout/stderr, returns the exit code.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::InvalidInput.code() } else { 0 };
        }
    };
    let cap = EnumerationCap::from_env(cli.force);
    let start = Instant::now();
    match execute(&cli, &cap) {
        Ok(out) => {
            let mut command_line = args;
            if let Some(first) = command_line.first_mut() {
                // the binary path differs between machines
                *first = "tracecurve".into();
            }
            let manifest = RunManifest {
                command_line,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                enumeration_cap: cap.limit,
                forced: cap.force,
                seeds: vec!["factoring: ChaCha8 seeded from each integer factored".into()],
                elapsed_ms: cli.timing.then(|| start.elapsed().as_millis()),
                result_digest: digest(&out.params, &out.results),
            };
            if cli.json {
                let report = Report {
                    manifest,
                    params: out.params,
                    results: out.results,
                };
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", out.text);
                if let Some(ms) = manifest.elapsed_ms {
                    eprintln!("elapsed: {ms} ms");
                }
                eprintln!("digest: {}", manifest.result_digest);
            }
            out.exit.code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            Exit::for_error(&e).code()
        }
    }
}

pub fn execute(cli: &Cli, cap: &EnumerationCap) -> Result<Outcome> {
    match &cli.command {
        Command::Count { p, r, n, d, oracle_xy } => cmd_count(*p, *r, *n, *d, *oracle_xy, cap),
        Command::Predict { q, n, d } => cmd_predict(q, *n, *d),
        Command::Scan {
            n,
            d,
            q_min,
            q_max,
            jobs,
        } => cmd_scan(*n, *d, *q_min, *q_max, *jobs, cap),
        Command::Divisors { d, d_max } => match (d, d_max) {
            (Some(d), _) => cmd_divisors(*d..=*d),
            (None, Some(m)) => cmd_divisors(2..=*m),
            (None, None) => Err(Error::InvalidParams("need --d or --d-max".into())),
        },
        Command::Conjecture {
            which,
            q,
            m,
            n,
            d_max,
            artifact_dir,
        } => cmd_conjecture(*which, *q, *m, *n, *d_max, artifact_dir, cap),
        Command::Symbolic { action } => match action {
            SymbolicAction::Verify {
                q,
                strategy,
                no_cross_check,
            } => cmd_symbolic_verify(q, (*strategy).into(), !no_cross_check, cap),
            SymbolicAction::Dump { out, strategy } => cmd_symbolic_dump(out, (*strategy).into()),
        },
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_else(|| "-".into())
}

fn params_json(p: &CurveParams) -> Value {
    json!({ "p": p.p(), "r": p.r(), "q": p.q(), "n": p.n(), "d": p.d() })
}

pub fn cmd_count(p: u64, r: u32, n: u32, d: u32, oracle_xy: bool, cap: &EnumerationCap) -> Result<Outcome> {
    let params = CurveParams::new(p, r, n, d)?;
    let curve = TraceCurve::new(params, cap)?;
    let report = curve.point_count()?;
    let mut exit = Exit::for_count(&report);
    let mut text = String::new();
    let _ = writeln!(text, "q = {} (p = {p}, r = {r}), n = {n}, d = {d}", params.q());
    let _ = writeln!(text, "special x     {}", report.special_x);
    let _ = writeln!(text, "brute count   {}", report.brute_count);
    let _ = writeln!(text, "baseline      {}", report.baseline);
    let _ = writeln!(text, "bonus         {}", report.bonus);
    let _ = writeln!(text, "observed G    {}", opt(&report.observed_g));
    let _ = writeln!(text, "predicted     {}", opt(&report.predicted));
    let _ = writeln!(text, "predictor     {}", report.predictor_name);
    let _ = writeln!(text, "agrees        {}", opt(&report.agrees));
    let mut results = serde_json::to_value(&report)?;
    if oracle_xy {
        let affine = curve.affine_oracle_count(cap.force)?;
        let equal = BigUint::from(affine) + 1u32 == report.brute_count;
        if !equal {
            exit = worst(exit, Exit::ExactMismatch);
        }
        let _ = writeln!(
            text,
            "oracle-xy     {affine} affine + 1 {} brute count",
            if equal { "=" } else { "≠" }
        );
        results["oracle_xy"] = json!({ "affine": affine.to_string(), "equal": equal });
    }
    Ok(Outcome {
        exit,
        params: params_json(&params),
        results,
        text,
    })
}

pub fn cmd_predict(q: &BigUint, n: u32, d: u32) -> Result<Outcome> {
    let (p, r) = prime_power(q).ok_or_else(|| Error::NotPrimePower(q.clone()))?;
    let pred = predict(q, n, d)?;
    let count = pred.predicted_count(q, n, d);
    let mut text = String::new();
    let _ = writeln!(text, "q = {q} = {p}^{r}, n = {n}, d = {d}");
    let _ = writeln!(text, "G             {}", pred.value_g);
    let _ = writeln!(text, "status        {}", pred.status);
    let _ = writeln!(text, "source        {}", pred.source);
    if let Some(h) = &pred.h {
        let _ = writeln!(text, "H             {h}");
    }
    if let Some(lb) = &pred.lower_bound_g {
        let _ = writeln!(text, "G at least    {lb}");
    }
    let _ = writeln!(text, "count         {}", opt(&count));
    let mut results = serde_json::to_value(&pred)?;
    results["predicted_count"] = json!(count.map(|c| c.to_string()));
    Ok(Outcome {
        exit: Exit::Ok,
        params: json!({ "p": p.to_string(), "r": r, "q": q.to_string(), "n": n, "d": d }),
        results,
        text,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub q: u64,
    pub special_x: String,
    pub brute: String,
    pub baseline: String,
    pub bonus: String,
    #[serde(rename = "predicted_G")]
    pub predicted_g: String,
    pub status: String,
    pub agree: String,
}

impl ScanRow {
    fn from_report(r: &CountReport) -> Self {
        ScanRow {
            q: r.q,
            special_x: r.special_x.to_string(),
            brute: r.brute_count.to_string(),
            baseline: r.baseline.to_string(),
            bonus: r.bonus.to_string(),
            predicted_g: r
                .prediction
                .as_ref()
                .filter(|p| p.status != PredictionStatus::None)
                .map(|p| p.value_g.to_string())
                .unwrap_or_default(),
            status: r.status().label().into(),
            agree: r.agrees.map(|a| a.to_string()).unwrap_or_default(),
        }
    }

    fn from_error(q: u64, e: &Error) -> Self {
        ScanRow {
            q,
            special_x: String::new(),
            brute: String::new(),
            baseline: String::new(),
            bonus: String::new(),
            predicted_g: String::new(),
            status: format!("error: {e}"),
            agree: String::new(),
        }
    }
}

pub fn cmd_scan(n: u32, d: u32, q_min: u64, q_max: u64, jobs: Option<usize>, cap: &EnumerationCap) -> Result<Outcome> {
    if q_min > q_max {
        return Err(Error::InvalidParams(format!("q-min {q_min} > q-max {q_max}")));
    }
    // validate the shape once so a bad (n, d) is an input error, not a column of row errors
    CurveParams::new(2, 1, n, d)?;
    let qs: Vec<u64> = (q_min.max(2)..=q_max)
        .filter(|&q| prime_power(&BigUint::from(q)).is_some())
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let results: Vec<(u64, Result<CountReport>)> = pool.install(|| {
        qs.par_iter()
            .map(|&q| {
                let r = CurveParams::from_q(q, n, d)
                    .and_then(|p| TraceCurve::new(p, cap))
                    .and_then(|c| c.point_count());
                (q, r)
            })
            .collect()
    });
    let mut exit = Exit::Ok;
    let mut rows = Vec::with_capacity(results.len());
    let mut disagreements = Vec::new();
    let mut errors = 0usize;
    for (q, r) in &results {
        match r {
            Ok(rep) => {
                let e = Exit::for_count(rep);
                if e != Exit::Ok {
                    disagreements.push(*q);
                    exit = worst(exit, e);
                }
                rows.push(ScanRow::from_report(rep));
            }
            Err(e) => {
                errors += 1;
                exit = worst(exit, Exit::for_error(e));
                rows.push(ScanRow::from_error(*q, e));
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row)?;
    }
    let mut text = String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("csv is utf-8");
    if !disagreements.is_empty() || errors > 0 {
        eprintln!("disagreements at q = {disagreements:?}; {errors} case(s) failed");
    }
    if rows.is_empty() {
        text.push_str("q,special_x,brute,baseline,bonus,predicted_G,status,agree\n");
    }
    Ok(Outcome {
        exit,
        params: json!({ "n": n, "d": d, "q_min": q_min, "q_max": q_max }),
        results: json!({ "rows": rows, "disagreements": disagreements, "errors": errors }),
        text,
    })
}

/// Higher-priority exit wins: proved mismatch, then conjectural, then input.
fn worst(a: Exit, b: Exit) -> Exit {
    let rank = |e: Exit| match e {
        Exit::Ok => 0,
        Exit::InvalidInput => 1,
        Exit::ConjecturalMismatch => 2,
        Exit::Counterexample => 3,
        Exit::Internal => 4,
        Exit::ExactMismatch => 5,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorRow {
    pub d: u32,
    pub f_d: String,
    pub m_d: String,
    pub factorization: String,
    pub complete: bool,
    /// `(t, residue)`.
    pub admissible: Vec<(String, String)>,
    pub excluded: Vec<String>,
    pub gcd_always_one: Option<bool>,
}

pub fn cmd_divisors(ds: std::ops::RangeInclusive<u32>) -> Result<Outcome> {
    let rows: Vec<DivisorRow> = ds
        .clone()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&d| -> Result<DivisorRow> {
            let c = characterize_divisors(d)?;
            Ok(DivisorRow {
                d,
                f_d: c.f_d.to_string(),
                m_d: c.m_d.to_string(),
                factorization: c.factorization.to_string(),
                complete: c.is_complete(),
                admissible: c
                    .admissible
                    .iter()
                    .map(|(t, r)| (t.to_string(), r.to_string()))
                    .collect(),
                excluded: c.excluded.iter().map(|t| t.to_string()).collect(),
                gcd_always_one: gcd_always_one(d).ok(),
            })
        })
        .collect::<Result<_>>()?;
    let mut text = String::new();
    let _ = writeln!(text, "{:>4}  {:<24} {:<32} {:<28} gcd≡1", "d", "M_d", "factors", "(t, q mod t)");
    for r in &rows {
        let adm: Vec<String> = r.admissible.iter().map(|(t, v)| format!("({t},{v})")).collect();
        let flag = if r.complete { "" } else { " [incomplete]" };
        let _ = writeln!(
            text,
            "{:>4}  {:<24} {:<32} {:<28} {}",
            r.d,
            r.m_d,
            format!("{}{flag}", r.factorization),
            adm.join(" "),
            opt(&r.gcd_always_one)
        );
    }
    Ok(Outcome {
        exit: Exit::Ok,
        params: json!({ "d_min": ds.start(), "d_max": ds.end() }),
        results: json!({ "rows": rows }),
        text,
    })
}

fn write_artifact(dir: &Path, name: &str, body: &impl Serialize) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string_pretty(body)?)?;
    Ok(path)
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParams(format!("missing {flag}")))
}

pub fn cmd_conjecture(
    which: Which,
    q: Option<u64>,
    m: Option<u32>,
    n: Option<u32>,
    d_max: u32,
    artifact_dir: &Path,
    cap: &EnumerationCap,
) -> Result<Outcome> {
    let mut text = String::new();
    if which == Which::Fibgcd {
        let scan = f_gcd_conjecture_scan(d_max);
        let hits: Vec<(u32, String)> = scan
            .counterexamples
            .iter()
            .map(|(d, g)| (*d, g.to_string()))
            .collect();
        let results = json!({
            "d_max": d_max,
            "counterexamples": hits,
            "identity_failures": scan.identity_failures,
        });
        let exit = if scan.is_clean() {
            let _ = writeln!(text, "gcd(F_d, F_(d-1)+1) in {{1, 2}} for odd d ≤ {d_max}: no counterexample");
            Exit::Ok
        } else {
            let path = write_artifact(artifact_dir, &format!("fibgcd-d{d_max}.json"), &results)?;
            let _ = writeln!(text, "COUNTEREXAMPLE: {hits:?}; artifact {}", path.display());
            Exit::Counterexample
        };
        return Ok(Outcome {
            exit,
            params: json!({ "which": "fibgcd", "d_max": d_max }),
            results,
            text,
        });
    }
    let q = require(q, "--q")?;
    let (outcome, degree): (ScanOutcome, u32) = match which {
        Which::One => {
            let m = require(m, "--m")?;
            (conjecture1_scan(q, m, cap)?, m)
        }
        _ => {
            let n = require(n, "--n")?;
            (conjecture2_scan(q, n, cap)?, n)
        }
    };
    let label = outcome.form.label();
    let _ = writeln!(
        text,
        "conjecture {label}, q = {q}, degree {degree}: {} candidates, {} satisfy the membership equation",
        outcome.candidates, outcome.satisfying
    );
    let exit = if outcome.is_clean() {
        let _ = writeln!(text, "no counterexample");
        Exit::Ok
    } else {
        let path = write_artifact(artifact_dir, &format!("conjecture{label}-q{q}-m{degree}.json"), &outcome)?;
        let _ = writeln!(
            text,
            "COUNTEREXAMPLE: {} α with α^(q+2) ≠ 1; artifact {}",
            outcome.counterexamples.len(),
            path.display()
        );
        for c in outcome.counterexamples.iter().take(10) {
            let _ = writeln!(text, "  α = {:?}  order {}  in F_q: {}", c.alpha, c.alpha_order, c.alpha_in_base_field);
        }
        Exit::Counterexample
    };
    Ok(Outcome {
        exit,
        params: json!({ "which": label, "q": q, "degree": degree }),
        results: serde_json::to_value(&outcome)?,
        text,
    })
}

pub fn cmd_symbolic_verify(qs: &[u64], strategy: Strategy, cross_check: bool, cap: &EnumerationCap) -> Result<Outcome> {
    let rec = symbolic::reconstruct(strategy)?;
    let report = symbolic::verify(&rec, cross_check)?;
    let cases = symbolic::root_of_unity_cases()?;
    let mut ok = report.ok();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "F1            {} terms, matches print {} (sign {:+})",
        rec.numerators.f1.len(),
        report.f1.matches(),
        report.f1.sign
    );
    let _ = writeln!(text, "F1 denominator matches print {}", report.f1_denominator.matches());
    let _ = writeln!(text, "F2            {} terms", report.f2_terms);
    for (name, deg, check) in [("G1", report.g1_degree, &report.g1), ("G2", report.g2_degree, &report.g2)] {
        let _ = writeln!(
            text,
            "{name}            degree {}, content {}, factorization {} (sign {:+})",
            opt(&deg),
            check.content,
            if check.ok() { "OK" } else { "MISMATCH" },
            check.sign
        );
        for diff in &check.diffs {
            let _ = writeln!(text, "  y^{}: computed {} expected {}", diff.power, diff.computed, diff.expected);
        }
    }
    for (i, k, holds) in &report.cyclotomic_identifications {
        let _ = writeln!(text, "p{i} = Phi_{k}    {holds}");
    }
    let _ = writeln!(
        text,
        "strategies    {} primary, G1 cross-check {}",
        strategy.label(),
        opt(&report.g1_cross_check)
    );
    for c in &cases {
        let detail = if c.automatic {
            "automatic".to_string()
        } else if num_traits::Signed::abs(&c.resultant) == num_bigint::BigInt::from(1) {
            "in no characteristic".to_string()
        } else {
            format!("only in characteristics dividing {}", opt(&c.factorization))
        };
        let _ = writeln!(text, "k = {:>2}, t = {:>2}  {detail}", c.k, c.t);
    }
    let mut spot = Vec::new();
    for &q in qs {
        let s = symbolic::finite_field_spotcheck(&rec, q, cap)?;
        ok &= s.ok();
        let _ = writeln!(
            text,
            "q = {q}: {} qualifying x, {} distinct α, all checks {}, α^7 = 1 for {}, predicted G {}{}",
            s.qualifying_x,
            s.alphas.len(),
            s.ok(),
            s.seventh_roots,
            s.predicted_g,
            if s.p4_coincidences().is_empty() {
                String::new()
            } else {
                format!(", p4 roots among α: {:?}", s.p4_coincidences())
            }
        );
        spot.push(s);
    }
    let _ = writeln!(text, "{}", if ok { "verification OK" } else { "verification FAILED" });
    Ok(Outcome {
        exit: if ok { Exit::Ok } else { Exit::ExactMismatch },
        params: json!({ "strategy": strategy, "cross_check": cross_check, "q": qs }),
        results: json!({ "report": report, "root_cases": cases, "spotchecks": spot, "ok": ok }),
        text,
    })
}

pub fn cmd_symbolic_dump(out: &Path, strategy: Strategy) -> Result<Outcome> {
    let rec = symbolic::reconstruct(strategy)?;
    let paths = artifact::dump(&rec, out)?;
    let mut text = String::new();
    for p in &paths {
        let _ = writeln!(text, "wrote {}", p.display());
    }
    // the files themselves are the result; digest their bytes
    let mut files = serde_json::Map::new();
    for p in &paths {
        let bytes = fs::read(p)?;
        let name = p.file_name().and_then(|s| s.to_str()).unwrap_or_default().to_string();
        files.insert(name, json!(format!("{:x}", Sha256::digest(&bytes))));
    }
    Ok(Outcome {
        exit: Exit::Ok,
        params: json!({ "strategy": strategy }),
        results: json!({ "sha256": files }),
        text,
    })
}
