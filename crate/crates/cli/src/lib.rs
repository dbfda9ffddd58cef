//! Command-line front end: argument parsing, file loading and output.
//!
//! Every subcommand prints one JSON document to stdout, or a table with
//! `--pretty`. Exit codes: 0 success, 1 malformed input, 2 infeasible or
//! degenerate input.

mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use rmaap::adversarial::{self, is_alpha_tolerant, optimal_attack, Method};
use rmaap::bench::{self, DistributionSpec, TrialConfig};
use rmaap::document::{parse_assignment, parse_instance};
use rmaap::stochastic::{solve_greedy, solve_relaxed};
use rmaap::{Assignment, Error, FailureModel, ProblemInstance};

use output::{AdversarialDoc, AttackDoc, Render, StochasticDoc, ToleranceDoc};

#[derive(Debug, Parser)]
#[command(name = "rmaap", version, about = "Robust agent-to-task assignment under agent failures")]
pub struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StochasticMethod {
    Greedy,
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AdversarialMethod {
    Exact,
    Approx,
    GreedyBaseline,
    ExpectationBaseline,
}

impl From<AdversarialMethod> for Method {
    fn from(m: AdversarialMethod) -> Self {
        match m {
            AdversarialMethod::Exact => Method::Exact,
            AdversarialMethod::Approx => Method::Approx,
            AdversarialMethod::GreedyBaseline => Method::GreedyBaseline,
            AdversarialMethod::ExpectationBaseline => Method::ExpectationBaseline,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Uniform,
    Exp,
    Beta,
}

impl From<DistArg> for DistributionSpec {
    fn from(d: DistArg) -> Self {
        match d {
            DistArg::Uniform => DistributionSpec::Uniform01,
            DistArg::Exp => DistributionSpec::exponential(),
            DistArg::Beta => DistributionSpec::beta(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximize expected profit when agents fail independently with probability p.
    SolveStochastic {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "relaxed")]
        method: StochasticMethod,
    },
    /// Maximize worst-case profit against an attacker disabling up to alpha agents.
    SolveAdversarial {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "approx")]
        method: AdversarialMethod,
        /// Seed for the random leftover placement of greedy-baseline.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute the attacker's best response to an assignment.
    Attack {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
    /// Check whether an assignment keeps at least the threshold profit.
    Tolerant {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        threshold: f64,
    },
    /// Compare the adversarial solvers on random instances and write CSV.
    Bench {
        /// Task value distribution; all three when omitted.
        #[arg(long, value_enum)]
        dist: Option<DistArg>,
        #[arg(long, default_value_t = 1_000)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record CSV path; the summary goes next to it as `<stem>.summary.csv`.
        /// Without it records go to stdout and the summary to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        // --help and --version land here too
        Err(err) if !err.use_stderr() => {
            let _ = write!(stdout, "{err}");
            return 0;
        }
        Err(err) => {
            let _ = write!(stderr, "{err}");
            return 1;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err:#}");
            exit_code(&err)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_infeasible() => 2,
        _ => 1,
    }
}

fn load_instance(path: &Path) -> anyhow::Result<ProblemInstance> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("instance: cannot read {}", path.display()))?;
    Ok(parse_instance(&text)?)
}

/// Loads an assignment given in input task order and returns it in sorted order.
fn load_assignment(path: &Path, instance: &ProblemInstance) -> anyhow::Result<Assignment> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("assignment: cannot read {}", path.display()))?;
    let counts = parse_assignment(&text)?;
    let sorted = instance.tasks().to_sorted_order(&counts).map_err(|e| Error::Schema {
        field: "assignment".into(),
        message: e.to_string(),
    })?;
    let assignment = Assignment::new(sorted);
    if !assignment.is_valid_for(instance.agents()) {
        return Err(Error::Schema {
            field: "assignment".into(),
            message: format!(
                "uses {} agents but the instance has {}",
                assignment.total(),
                instance.agents()
            ),
        }
        .into());
    }
    Ok(assignment)
}

fn require_alpha(instance: &ProblemInstance) -> anyhow::Result<usize> {
    match instance.model() {
        FailureModel::Adversarial { alpha } => Ok(alpha),
        FailureModel::Stochastic { .. } => Err(Error::Schema {
            field: "alpha".into(),
            message: "this command needs an adversarial instance (`alpha`), found `p`".into(),
        }
        .into()),
    }
}

fn emit(doc: &impl Render, pretty: bool, out: &mut dyn Write) -> anyhow::Result<()> {
    if pretty {
        doc.render_table(out)?;
    } else {
        serde_json::to_writer(&mut *out, doc)?;
        writeln!(out)?;
    }
    Ok(())
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.command {
        Command::SolveStochastic { instance, method } => {
            let inst = load_instance(instance)?;
            let p = match inst.model() {
                FailureModel::Stochastic { p } => p,
                FailureModel::Adversarial { .. } => {
                    return Err(Error::Schema {
                        field: "p".into(),
                        message: "solve-stochastic needs a stochastic instance (`p`), found `alpha`"
                            .into(),
                    }
                    .into())
                }
            };
            let (name, solution) = match method {
                StochasticMethod::Greedy => ("greedy", solve_greedy(&inst)?),
                StochasticMethod::Relaxed => ("relaxed", solve_relaxed(&inst)?),
            };
            let doc = StochasticDoc::new(&inst, name, p, &solution)?;
            emit(&doc, cli.pretty, stdout)
        }
        Command::SolveAdversarial {
            instance,
            method,
            seed,
        } => {
            let inst = load_instance(instance)?;
            let alpha = require_alpha(&inst)?;
            let solution = adversarial::solve(&inst, (*method).into(), *seed)?;
            let attack = optimal_attack(inst.tasks(), &solution.assignment, alpha)?;
            let doc = AdversarialDoc::new(&inst, alpha, solution.method, &solution.assignment, &attack)?;
            emit(&doc, cli.pretty, stdout)
        }
        Command::Attack {
            instance,
            assignment,
        } => {
            let inst = load_instance(instance)?;
            let alpha = require_alpha(&inst)?;
            let x = load_assignment(assignment, &inst)?;
            let attack = optimal_attack(inst.tasks(), &x, alpha)?;
            let doc = AttackDoc::new(&inst, alpha, &x, &attack)?;
            emit(&doc, cli.pretty, stdout)
        }
        Command::Tolerant {
            instance,
            assignment,
            threshold,
        } => {
            let inst = load_instance(instance)?;
            let alpha = require_alpha(&inst)?;
            let x = load_assignment(assignment, &inst)?;
            let attack = optimal_attack(inst.tasks(), &x, alpha)?;
            let tolerant = is_alpha_tolerant(inst.tasks(), &x, alpha, *threshold)?;
            let doc = ToleranceDoc::new(&inst, alpha, &x, *threshold, attack.surviving_profit, tolerant)?;
            emit(&doc, cli.pretty, stdout)
        }
        Command::Bench {
            dist,
            trials,
            kmax,
            nmax,
            seed,
            out,
        } => {
            if *trials == 0 {
                bail!(Error::UnsatisfiableConfig("trials must be at least 1".into()));
            }
            let cfg = TrialConfig {
                k_max: *kmax,
                n_max: *nmax,
                trials: *trials,
                seed: *seed,
                ..TrialConfig::default()
            };
            let dists: Vec<DistributionSpec> = match dist {
                Some(d) => vec![(*d).into()],
                None => DistributionSpec::all().to_vec(),
            };
            let mut records = Vec::new();
            for d in dists {
                records.extend(bench::run_suite(&cfg, d)?);
            }
            let summary = bench::summarize(&records)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(path)
                        .with_context(|| format!("out: cannot create {}", path.display()))?;
                    bench::write_records_csv(std::io::BufWriter::new(file), &records)?;
                    let summary_path = summary_path(path);
                    let file = fs::File::create(&summary_path)
                        .with_context(|| format!("out: cannot create {}", summary_path.display()))?;
                    bench::write_summary_csv(std::io::BufWriter::new(file), &summary)?;
                    if cli.pretty {
                        output::render_summary(&summary, stdout)?;
                    } else {
                        bench::write_summary_csv(&mut *stdout, &summary)?;
                    }
                }
                None => {
                    bench::write_records_csv(&mut *stdout, &records)?;
                    if cli.pretty {
                        output::render_summary(&summary, stderr)?;
                    } else {
                        bench::write_summary_csv(&mut *stderr, &summary)?;
                    }
                }
            }
            Ok(())
        }
    }
}

/// `results.csv` -> `results.summary.csv`.
pub fn summary_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "bench".into());
    out.with_file_name(format!("{stem}.summary.csv"))
}
