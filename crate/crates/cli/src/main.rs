use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use mirrorforge::{cohft, frob, genus1, ifun, loc, rmat, Error, LSeries, QSeries, Report, Theory};

mod suites;

use suites::{Suite, ALL_SUITES};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mirrorforge",
    version,
    about = "Exact genus-one mirror formulas for the quintic FJRW and twisted theories"
)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Series order (highest power of t kept).
    #[arg(long, global = true, env = "MIRRORFORGE_ORDER", default_value_t = 30)]
    pub order: usize,

    /// Coefficient bound for the Picard–Fuchs check.
    #[arg(long, global = true, default_value_t = 40)]
    pub kmax: usize,

    /// Degree bound: d1 + d2 for the club/spade identity, 5d for residues.
    #[arg(long, global = true)]
    pub dmax: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = TheoryArg::Both)]
    pub theory: TheoryArg,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for suites run side by side.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Comma-separated suite names, added to any given positionally.
    #[arg(long, global = true, value_delimiter = ',')]
    pub suites: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    #[value(alias = "lambda")]
    Twisted,
    #[value(alias = "w")]
    Fjrw,
    Both,
}

impl TheoryArg {
    pub fn theories(self) -> Vec<Theory> {
        match self {
            TheoryArg::Twisted => vec![Theory::Twisted],
            TheoryArg::Fjrw => vec![Theory::Fjrw],
            TheoryArg::Both => vec![Theory::Twisted, Theory::Fjrw],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a series or matrix.
    Compute {
        #[arg(value_enum)]
        target: Target,
    },
    /// Run verification suites.
    Verify {
        /// Suite names, or `all`.
        names: Vec<String>,
    },
    /// Emit a JSON artifact.
    Dump {
        #[arg(value_enum)]
        what: DumpTarget,
        /// Genus, for `graphs`.
        #[arg(long, default_value_t = 1)]
        g: u32,
        /// Number of legs, for `graphs`.
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    I0,
    I1,
    Tau,
    #[value(name = "L", alias = "l")]
    L,
    F,
    G,
    Yukawa,
    Delta,
    R1,
    F1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpTarget {
    Frame,
    Rmatrix,
    Graphs,
}

enum Failure {
    Usage(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e)
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(|| run(&cli));
    let code = match result {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Ok(Err(Failure::Internal(e))) => {
            eprintln!("internal error: {e}");
            EXIT_INTERNAL
        }
        Err(_) => EXIT_INTERNAL,
    };
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    match &cli.command {
        Command::Compute { target } => compute(*target, cfg),
        Command::Verify { names } => verify(names, cfg),
        Command::Dump { what, g, n } => dump(*what, *g, *n, cfg),
    }
}

fn emit(cfg: &RunConfig, body: &str) -> Outcome {
    match &cfg.out {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?
        }
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(body.as_bytes());
        }
    }
    Ok(0)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

/// A named output: rational series, or entries over Q(ξ)[λ^{±1/2}].
enum Artifact {
    Rational(Vec<(String, QSeries)>),
    Cyclotomic(Vec<(String, LSeries)>),
}

fn render(target: &str, cfg: &RunConfig, art: &Artifact) -> String {
    match cfg.format {
        Format::Json => {
            let entries: Vec<Value> = match art {
                Artifact::Rational(v) => v
                    .iter()
                    .map(|(k, s)| json!({"name": k, "series": s.to_json()}))
                    .collect(),
                Artifact::Cyclotomic(v) => v
                    .iter()
                    .map(|(k, s)| json!({"name": k, "series": s.to_json()}))
                    .collect(),
            };
            pretty(&json!({"target": target, "order": cfg.order, "entries": entries}))
        }
        Format::Csv => {
            let mut s = String::from("name,exponent,coefficient\n");
            let mut push = |name: &str, k: usize, c: String| s.push_str(&format!("{name},{k},\"{c}\"\n"));
            match art {
                Artifact::Rational(v) => {
                    for (name, ser) in v {
                        for (k, c) in ser.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            push(name, k, c.to_string());
                        }
                    }
                }
                Artifact::Cyclotomic(v) => {
                    for (name, ser) in v {
                        for (k, c) in ser.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            push(name, k, c.to_string());
                        }
                    }
                }
            }
            s
        }
        Format::Text => {
            let lines: Vec<String> = match art {
                Artifact::Rational(v) => v.iter().map(|(k, s)| format!("{k} = {s}")).collect(),
                Artifact::Cyclotomic(v) => v.iter().map(|(k, s)| format!("{k} = {s}")).collect(),
            };
            lines.join("\n") + "\n"
        }
    }
}

fn compute(target: Target, cfg: &RunConfig) -> Outcome {
    let n = cfg.order;
    let single = |name: &str, s: QSeries| Artifact::Rational(vec![(name.to_string(), s)]);
    let (name, art) = match target {
        Target::I0 => ("i0", single("I_0", ifun::i0(n))),
        Target::I1 => ("i1", single("I_1", ifun::i1(n))),
        Target::Tau => ("tau", single("tau", ifun::mirror_map(n))),
        Target::L => ("L", single("L", ifun::l_series(n))),
        Target::F => ("f", single("f", frob::SliceData::build(n)?.f())),
        Target::G => ("g", single("g", frob::SliceData::build(n)?.g())),
        Target::Yukawa => {
            let (series, rep) = ifun::yukawa(n);
            match series {
                Some(s) => ("yukawa", single("I_22/I_11", s)),
                None => {
                    return Err(Failure::Internal(Error::CancellationFailure(format!("yukawa: {rep}"))));
                }
            }
        }
        Target::Delta => {
            let frame = frob::build_frame(n)?;
            let v = frame
                .delta
                .iter()
                .enumerate()
                .map(|(a, d)| (format!("Delta_{a}"), d.clone()))
                .collect();
            ("delta", Artifact::Cyclotomic(v))
        }
        Target::R1 => {
            let frame = frob::build_frame(n + 1)?;
            let r = rmat::build_r1(&frame, &rmat::default_constants())?;
            let mut v = Vec::new();
            for a in 0..5 {
                for b in 0..5 {
                    v.push((format!("R1_{a}{b}"), r.get(a, b).clone()));
                }
            }
            ("r1", Artifact::Cyclotomic(v))
        }
        Target::F1 => {
            let mut v = Vec::new();
            for th in cfg.theory.theories() {
                v.push((format!("F1_{th}"), genus1::f1_closed(th, n)?));
            }
            ("f1", Artifact::Rational(v))
        }
    };
    emit(cfg, &render(name, cfg, &art))
}

fn resolve_suites(names: &[String], cfg: &RunConfig) -> std::result::Result<Vec<Suite>, Failure> {
    let mut all: Vec<&str> = names.iter().map(String::as_str).collect();
    all.extend(cfg.suites.iter().map(String::as_str));
    if all.is_empty() {
        return Err(Failure::Usage("no suites given".into()));
    }
    let mut out = Vec::new();
    for name in all {
        if name == "all" {
            out.extend(ALL_SUITES.iter().copied());
            continue;
        }
        let s = name
            .parse::<Suite>()
            .map_err(|_| Failure::Usage(format!("unknown suite {name:?}")))?;
        out.push(s);
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(*s));
    Ok(out)
}

fn verify(names: &[String], cfg: &RunConfig) -> Outcome {
    let suites = resolve_suites(names, cfg)?;
    if cfg.order < 6 {
        return Err(Failure::Usage(format!("--order must be at least 6, got {}", cfg.order)));
    }
    let jobs = cfg.jobs.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    let reports: Vec<Report> = pool.install(|| suites.par_iter().map(|s| s.run(cfg)).collect());

    let body = match cfg.format {
        Format::Json => pretty(&Value::Array(reports.iter().map(Report::to_json).collect())),
        Format::Csv => {
            let mut s = String::from("suite,status,elapsed_ms,first_failure\n");
            for r in &reports {
                let ff = r
                    .first_failure
                    .as_ref()
                    .map(|f| f.check.replace('"', "'"))
                    .unwrap_or_default();
                let status = if r.passed() { "pass" } else { "fail" };
                s.push_str(&format!("{},{status},{},\"{ff}\"\n", r.suite, r.elapsed_ms));
            }
            s
        }
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    emit(cfg, &body)?;
    Ok(if reports.iter().all(Report::passed) {
        0
    } else {
        EXIT_FAIL
    })
}

fn dump(what: DumpTarget, g: u32, n: usize, cfg: &RunConfig) -> Outcome {
    let v = match what {
        DumpTarget::Frame => frob::build_frame(cfg.order.max(1))?.to_json(),
        DumpTarget::Rmatrix => {
            let frame = frob::build_frame(cfg.order + 1)?;
            rmat::build_r1(&frame, &rmat::default_constants())?.to_json()
        }
        DumpTarget::Graphs => {
            let graphs = cohft::enumerate_stable_graphs(g, n).map_err(|e| match e {
                Error::UnimplementedRange { .. } => Failure::Usage(e.to_string()),
                other => Failure::Internal(other),
            })?;
            let list: Vec<Value> = graphs
                .iter()
                .map(|gr| json!({"graph": gr, "automorphisms": gr.automorphisms()}))
                .collect();
            json!({"g": g, "n": n, "count": list.len(), "graphs": list})
        }
    };
    emit(cfg, &pretty(&v))
}

/// Residues and tails share the theory switch; other suites ignore it.
pub(crate) fn per_theory(name: &str, cfg: &RunConfig, f: impl Fn(Theory) -> Report) -> Report {
    let mut rep = Report::new(name);
    for th in cfg.theory.theories() {
        rep.absorb(f(th));
    }
    rep.finish()
}

pub(crate) fn residues(cfg: &RunConfig, th: Theory) -> Report {
    loc::residue_check_c2(cfg.dmax.unwrap_or(15), th)
}
