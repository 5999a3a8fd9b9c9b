use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qua_core::classify::{
    check_theorem_one, find_invariant_vector, is_cp_highest_weight, partition_roots, solve_mu, ClassifyError,
};
use qua_core::modrep::{decompose_pullback, window_to_dot, window_to_json, ModError, ModuleKind, ModuleSpec, WeightModuleWindow};
use qua_core::par::with_jobs;
use qua_core::report::{Report, Status};
use qua_core::rootsys::Root;
use qua_core::uq::identities::{verify_all, TAGS};
use qua_core::weylq::check_pi_homomorphism;
use serde_json::{json, Value};

const MAX_IDENTITY_RANK: usize = 4;
const MAX_MODULE_RANK: usize = 6;

#[derive(Parser)]
#[command(name = "qua", version, about = "Exact checks for U_q(gl_{n+1}) and its quantized Weyl algebra")]
struct Cli {
    /// Worker threads (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the relation and identity suite in rank n.
    Identities {
        #[arg(long)]
        n: usize,
        /// Comma separated identity tags.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Check that pi respects the defining relations in rank n.
    PiCheck {
        #[arg(long)]
        n: usize,
    },
    /// Build, decompose or classify a module from a spec file.
    Module {
        #[command(subcommand)]
        action: ModuleCmd,
    },
    /// Export a module window as JSON or DOT.
    Export {
        #[command(flatten)]
        src: Source,
        /// Keep only points whose coordinates sum to at most this value.
        #[arg(long, allow_negative_numbers = true)]
        max_degree: Option<i32>,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    Build {
        #[command(flatten)]
        src: Source,
    },
    Decompose {
        #[command(flatten)]
        src: Source,
    },
    Classify {
        #[command(flatten)]
        src: Source,
    },
    MuSolve {
        #[command(flatten)]
        src: Source,
        /// Lattice point of the measured vector, comma separated (default: origin).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Option<Vec<i32>>,
    },
}

#[derive(Args)]
struct Source {
    #[arg(long)]
    spec: PathBuf,
    /// Overrides the radius in the spec.
    #[arg(long)]
    radius: Option<i32>,
    /// Overrides the declared parameters, e.g. `c1,c2`.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<String>>,
    /// Rank the spec must have.
    #[arg(long)]
    n: Option<usize>,
}

enum Failure {
    Usage(String),
    Check(String),
    Inconclusive(String),
}

type Outcome = Result<(String, u8), Failure>;

fn from_mod(e: ModError) -> Failure {
    match e {
        ModError::Spec(_) | ModError::Scalar(_) => Failure::Usage(e.to_string()),
        _ => Failure::Check(e.to_string()),
    }
}

fn from_classify(e: ClassifyError) -> Failure {
    match e {
        ClassifyError::Inconclusive(_) | ClassifyError::WindowExhausted => Failure::Inconclusive(e.to_string()),
        ClassifyError::Module(m) => from_mod(m),
        _ => Failure::Check(e.to_string()),
    }
}

fn load(src: &Source) -> Result<WeightModuleWindow, Failure> {
    let text = fs::read_to_string(&src.spec).map_err(|e| Failure::Usage(format!("{}: {e}", src.spec.display())))?;
    let mut raw: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", src.spec.display())))?;
    if let Some(obj) = raw.as_object_mut() {
        if let Some(r) = src.radius {
            obj.insert("radius".into(), json!(r));
        }
        if let Some(p) = &src.params {
            obj.insert("params".into(), json!(p));
        }
    }
    let spec = ModuleSpec::from_json(&raw.to_string()).map_err(from_mod)?;
    if spec.n > MAX_MODULE_RANK {
        return Err(Failure::Usage(format!("modules are limited to n <= {MAX_MODULE_RANK}")));
    }
    if let Some(n) = src.n {
        if n != spec.n {
            return Err(Failure::Usage(format!("--n {n} does not match the spec rank {}", spec.n)));
        }
    }
    WeightModuleWindow::build(&spec).map_err(from_mod)
}

fn report_output(rep: &Report, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(rep.to_json() + "\n"),
        Format::Text => Ok(rep
            .records
            .iter()
            .map(|r| format!("{:<13} {:?} {} {}\n", r.check, r.indices, status_word(r.status), r.residual))
            .collect()),
        Format::Dot => Err(Failure::Usage("dot output is only available for export".into())),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "inconclusive",
    }
}

fn verdict(rep: &Report, body: String) -> Outcome {
    let code = if rep.count(Status::Fail) > 0 {
        1
    } else if rep.has_inconclusive() {
        3
    } else {
        0
    };
    Ok((body, code))
}

fn rank_ok(n: usize, cap: usize) -> Result<(), Failure> {
    if n == 0 || n > cap {
        return Err(Failure::Usage(format!("n must be between 1 and {cap}")));
    }
    Ok(())
}

fn roots(rs: &[Root]) -> Vec<String> {
    rs.iter().map(|r| format!("e{}-e{}", r.i, r.j)).collect()
}

fn value_output(v: Value, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&v).expect("json") + "\n"),
        Format::Text => Ok(text_of(&v, 0)),
        Format::Dot => Err(Failure::Usage("dot output is only available for export".into())),
    }
}

fn text_of(v: &Value, depth: usize) -> String {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| match x {
                Value::Object(_) | Value::Array(_) if !is_flat(x) => format!("{pad}{k}:\n{}", text_of(x, depth + 1)),
                _ => format!("{pad}{k}: {}\n", flat(x)),
            })
            .collect(),
        Value::Array(xs) => xs.iter().map(|x| format!("{pad}-\n{}", text_of(x, depth + 1))).collect(),
        _ => format!("{pad}{}\n", flat(v)),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(flat).collect::<Vec<_>>().join(" "),
        x => x.to_string(),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.cmd {
        Cmd::Identities { n, only } => {
            rank_ok(*n, MAX_IDENTITY_RANK)?;
            if let Some(o) = only {
                if let Some(bad) = o.iter().find(|t| !TAGS.contains(&t.as_str())) {
                    return Err(Failure::Usage(format!("unknown identity tag '{bad}'")));
                }
            }
            let rep = verify_all(*n, only.as_deref()).map_err(|e| Failure::Usage(e.to_string()))?;
            verdict(&rep, report_output(&rep, cli.format)?)
        }
        Cmd::PiCheck { n } => {
            rank_ok(*n, MAX_IDENTITY_RANK)?;
            let rep = check_pi_homomorphism(*n);
            verdict(&rep, report_output(&rep, cli.format)?)
        }
        Cmd::Export { src, max_degree } => {
            let mut w = load(src)?;
            if let Some(m) = max_degree {
                let keep: Vec<usize> = (0..w.len()).filter(|&p| w.point(p).iter().sum::<i32>() <= *m).collect();
                w = w.restrict(&keep);
            }
            match cli.format {
                Format::Dot => Ok((window_to_dot(&w), 0)),
                Format::Json => Ok((window_to_json(&w) + "\n", 0)),
                Format::Text => Err(Failure::Usage("export writes json or dot".into())),
            }
        }
        Cmd::Module { action } => module(action, cli.format),
    }
}

fn module(action: &ModuleCmd, format: Format) -> Outcome {
    match action {
        ModuleCmd::Build { src } => {
            let w = load(src)?;
            match format {
                Format::Json => Ok((window_to_json(&w) + "\n", 0)),
                Format::Dot => Ok((window_to_dot(&w), 0)),
                Format::Text => {
                    let pts: Vec<Value> = (0..w.len())
                        .map(|p| {
                            let wt: Vec<String> = w.weight(p).iter().map(|s| s.to_literal()).collect();
                            json!({"point": w.point(p), "weight": wt})
                        })
                        .collect();
                    Ok((value_output(json!({"kind": w.kind().as_str(), "points": pts}), format)?, 0))
                }
            }
        }
        ModuleCmd::Decompose { src } => {
            let w = load(src)?;
            let pieces = decompose_pullback(&w).map_err(from_mod)?;
            let mut truncated = false;
            let out: Vec<Value> = pieces
                .iter()
                .map(|p| {
                    truncated |= p.truncated;
                    let hw = p.highest_weight.as_ref().map(|h| h.iter().map(|s| s.to_literal()).collect::<Vec<_>>());
                    let top = p.highest_point.map(|i| w.point(i).clone());
                    json!({"m": p.m, "dim": p.dim(), "truncated": p.truncated, "highest_weight": hw, "highest_point": top})
                })
                .collect();
            let body = value_output(json!({"pieces": out}), format)?;
            Ok((body, if truncated { 3 } else { 0 }))
        }
        ModuleCmd::Classify { src } => {
            let w = load(src)?;
            let part = partition_roots(&w).map_err(from_classify)?;
            let mut checks = part.closure_report(w.rank());
            checks.extend(check_theorem_one(&w));
            let invariant = match find_invariant_vector(&w, &part) {
                Ok(p) => json!({"point": w.point(p)}),
                Err(e @ (ClassifyError::Precondition(_) | ClassifyError::NotProportional(_))) => json!({"none": e.to_string()}),
                Err(e) => return Err(from_classify(e)),
            };
            let mut out = json!({
                "partition": {
                    "n_s": roots(&part.n_s), "n_a": roots(&part.n_a),
                    "t_s": roots(&part.t_s), "t_a": roots(&part.t_a),
                    "inconclusive": roots(&part.inconclusive),
                },
                "invariant_vector": invariant,
                "checks": {
                    "pass": checks.count(Status::Pass),
                    "fail": checks.count(Status::Fail),
                    "inconclusive": checks.count(Status::Inconclusive),
                },
            });
            if w.kind() == ModuleKind::HighestWeight {
                if let Some(top) = w.index_of(&vec![0; w.rank() + 1]) {
                    let lambda: Vec<_> = w.sl_weight(top).iter().map(|s| s.as_toral()).collect::<Option<_>>().unwrap_or_default();
                    let v = is_cp_highest_weight(&lambda);
                    out["highest_weight"] = json!({"matches": v.matches, "tags": v.tags});
                }
            }
            if let Some(f) = checks.first_failure() {
                out["first_failure"] = json!({"check": f.check, "indices": f.indices, "residual": f.residual});
            }
            let body = value_output(out, format)?;
            let code = if checks.count(Status::Fail) > 0 {
                1
            } else if !part.inconclusive.is_empty() || checks.has_inconclusive() {
                3
            } else {
                0
            };
            Ok((body, code))
        }
        ModuleCmd::MuSolve { src, point } => {
            let w = load(src)?;
            let g = point.clone().unwrap_or_else(|| vec![0; w.rank() + 1]);
            let p = w.index_of(&g).ok_or_else(|| Failure::Usage(format!("point {g:?} is not in the window")))?;
            let sols = solve_mu(&w, p).map_err(from_classify)?;
            let out: Vec<Value> = sols
                .iter()
                .map(|s| json!({"mu": s.mu.iter().map(|t| t.to_string()).collect::<Vec<_>>(), "tag": s.tag}))
                .collect();
            let body = value_output(json!({"point": g, "solutions": out}), format)?;
            Ok((body, if sols.is_empty() { 1 } else { 0 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = with_jobs(cli.jobs, || run(&cli));
    match res {
        Ok((body, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &body) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{body}");
            }
            ExitCode::from(code)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Inconclusive(m)) => {
            eprintln!("inconclusive: {m}");
            ExitCode::from(3)
        }
    }
}
