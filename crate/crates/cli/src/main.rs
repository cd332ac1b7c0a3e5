//! `kupka`: compute, certify and enumerate GK components.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kupka::classify::{
    condition_chains, enumerate_components, exceptional_family, satisfied_chains, verify_table,
    Certification, ComponentDescriptor, TableId,
};
use kupka::gkcheck::{certify_gk, replay, CertifyConfig, GkCertificate, DEFAULT_BUDGET};
use kupka::w0space::{dim_component, w0_basis};
use kupka::weights::{bar_involution, derive_params, normalize_weights, ParamSet};

use render::{Out, Report};

#[derive(Parser)]
#[command(name = "kupka", version, about = "Generalized Kupka components of 2-dimensional foliations")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Weights, comma separated, any order.
    #[arg(short, long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    weights: Vec<i64>,
    #[arg(short, long, allow_hyphen_values = true)]
    lambda: i64,
    #[arg(short = 'd', long = "degree")]
    d: i64,
}

#[derive(Args, Clone)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    attempts: u32,
    #[arg(long, default_value_t = 5)]
    bound: i64,
    /// Cap on Gröbner reduction steps.
    #[arg(long, env = "KUPKA_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl RunArgs {
    fn config(&self) -> CertifyConfig {
        CertifyConfig {
            attempts: self.attempts,
            bound: self.bound,
            seed: self.seed,
            budget: self.budget,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Derived parameters λ_i, τ_i, p̄ and the Milnor bound.
    Params(FamilyArgs),
    /// Basis of the space W_0.
    W0(FamilyArgs),
    /// Dimension of the component.
    Dim(FamilyArgs),
    /// Search for a GK certificate and check the condition chains.
    Check {
        #[command(flatten)]
        fam: FamilyArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// All components for n = 3 or 4 and d ≥ 2.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd', long = "degree")]
        d: i64,
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// The family present for every n and d.
    Exceptional {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd', long = "degree")]
        d: i64,
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// The condition chains for n weights.
    Chains {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Compare the enumeration with a reference table, or replay a
    /// certificate file.
    Verify {
        #[arg(long, required_unless_present = "certificate")]
        table: Option<String>,
        /// Degree for the parametric table `cor410`.
        #[arg(short = 'd', long = "degree", default_value_t = 2)]
        d: i64,
        #[arg(long)]
        certify: bool,
        /// JSON certificate or component file to replay.
        #[arg(long, conflicts_with = "table")]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
}

/// Exit statuses: 0 success, 1 mismatch or no certificate, 2 invalid input.
enum Fail {
    Negative(Report),
    Invalid(String),
}

impl From<kupka::Error> for Fail {
    fn from(e: kupka::Error) -> Self {
        Fail::Invalid(e.to_string())
    }
}

type Outcome = Result<Report, Fail>;

fn family(a: &FamilyArgs) -> Result<ParamSet, Fail> {
    let w = normalize_weights(&a.weights)?;
    Ok(derive_params(&w, a.lambda, a.d)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out::new(cli.format);
    match run(cli.cmd) {
        Ok(r) => {
            out.emit(&r);
            ExitCode::SUCCESS
        }
        Err(Fail::Negative(r)) => {
            out.emit(&r);
            ExitCode::from(1)
        }
        Err(Fail::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Params(a) => Ok(Report::params(&family(&a)?)),
        Cmd::W0(a) => {
            let ps = family(&a)?;
            Ok(Report::w0(&ps, &w0_basis(&ps)))
        }
        Cmd::Dim(a) => {
            let ps = family(&a)?;
            match dim_component(&ps) {
                Ok(k) => Ok(Report::dim(&ps, Some(k))),
                Err(kupka::Error::EmptyFamily) => Err(Fail::Negative(Report::dim(&ps, None))),
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Check { fam, run } => check(&family(&fam)?, &run.config()),
        Cmd::Enumerate { n, d, certify, run } => {
            let cfg = run.config();
            let v = enumerate_components(n, d, certify.then_some(&cfg))?;
            let all_ok = !certify || v.iter().all(ComponentDescriptor::is_certified);
            let r = Report::components(certify.then_some(&cfg), v);
            if all_ok {
                Ok(r)
            } else {
                Err(Fail::Negative(r))
            }
        }
        Cmd::Exceptional { n, d, certify, run } => {
            let cfg = run.config();
            let e = exceptional_family(n, d, certify.then_some(&cfg))?;
            let ok = !certify || e.is_certified();
            let r = Report::components(certify.then_some(&cfg), vec![e]);
            if ok {
                Ok(r)
            } else {
                Err(Fail::Negative(r))
            }
        }
        Cmd::Chains { n } => {
            if n < 3 {
                return Err(kupka::Error::InvalidN(n).into());
            }
            Ok(Report::chains(n, &condition_chains(n)))
        }
        Cmd::Verify {
            table,
            d,
            certify,
            certificate,
            run,
        } => {
            if let Some(path) = certificate {
                return replay_file(&path, run.budget);
            }
            let id: TableId = table.expect("clap enforces one of the two").parse()?;
            let cfg = run.config();
            let rep = verify_table(id, d, certify.then_some(&cfg))?;
            let ok = rep.passed();
            let r = Report::table(certify.then_some(&cfg), rep);
            if ok {
                Ok(r)
            } else {
                Err(Fail::Negative(r))
            }
        }
    }
}

fn check(ps: &ParamSet, cfg: &CertifyConfig) -> Outcome {
    let bar = bar_involution(ps);
    let mut chains: Vec<(String, String)> = satisfied_chains(ps)
        .iter()
        .map(|c| ("(p, λ)".to_string(), c.to_string()))
        .collect();
    chains.extend(
        satisfied_chains(&bar)
            .iter()
            .map(|c| ("(p̄, λ_1)".to_string(), c.to_string())),
    );
    let mut failures = Vec::new();
    let mut cert = None;
    for rep in [ps, &bar] {
        match certify_gk(rep, cfg) {
            Ok(c) => {
                cert = Some(c);
                break;
            }
            Err(e) => failures.push(format!("{rep}: {e}")),
        }
    }
    if chains.is_empty() {
        failures.push("no condition chain holds for (p, λ) or (p̄, λ_1)".into());
        for c in condition_chains(ps.n()) {
            failures.push(format!("  fails {c}"));
        }
    }
    let ok = cert.is_some() && !chains.is_empty();
    let r = Report::check(ps, cfg, chains, cert, failures);
    if ok {
        Ok(r)
    } else {
        Err(Fail::Negative(r))
    }
}

/// Accepts a certificate, a component, a list of components, or any of
/// these under the `result` key written by `--format json`.
fn replay_file(path: &PathBuf, budget: u64) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Fail::Invalid(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Fail::Invalid(e.to_string()))?;
    let value = value.get("result").cloned().unwrap_or(value);
    let items = match value {
        serde_json::Value::Array(v) => v,
        v => vec![v],
    };
    if items.is_empty() {
        return Err(Fail::Invalid("nothing to replay".into()));
    }
    let mut errors = Vec::new();
    for (k, item) in items.into_iter().enumerate() {
        let item = match item.get("certificate") {
            Some(c) if !c.is_null() && item.get("certification").is_none() => c.clone(),
            _ => item,
        };
        let result = if let Ok(c) = serde_json::from_value::<GkCertificate>(item.clone()) {
            replay(&c, budget)
        } else if let Ok(d) = serde_json::from_value::<ComponentDescriptor>(item) {
            if matches!(d.certification, Certification::Certified { .. }) {
                d.replay(budget)
            } else {
                Err(kupka::Error::InvalidCertificate("component carries no certificate".into()))
            }
        } else {
            return Err(Fail::Invalid(format!("item {k}: not a certificate or component")));
        };
        if let Err(e) = result {
            errors.push(format!("item {k}: {e}"));
        }
    }
    if errors.is_empty() {
        Ok(Report::replay(path, None))
    } else {
        Err(Fail::Negative(Report::replay(path, Some(errors.join("; ")))))
    }
}
