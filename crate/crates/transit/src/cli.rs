//! Command-line front end.
//!
//! One command per process: parse an instance file, run one solver, and
//! emit the result. Solve, greedy, and oracle runs print a JSON result
//! record on stdout whose cost is re-evaluated from the returned
//! selection before printing, so every record is self-certifying.
//! Reductions, conversions, and generators emit instance JSON;
//! `trace` and `bench` emit CSV. Identical inputs produce byte-identical
//! stdout; wall-clock times go only to the `--time-log` sidecar.
//!
//! Exit codes: 0 on success, 2 when a guard refuses the run (oracle
//! search space too large, solver inapplicable), 1 on any input error.
//! The environment variable `TRANSIT_ORACLE_CAP` overrides the oracle's
//! explored-subset cap.

use crate::budget_dijkstra::{budget_dijkstra_traced, trace_csv};
use crate::error::{Error, Result};
use crate::greedy::{greedy_down, greedy_up, make_adversarial, AdversarialParams};
use crate::io::{emit_instance, parse_instance, Instance};
use crate::model::{NtpInstance, Objective, PtpInstance, Selection, Solution};
use crate::multi_agent::{solve_one_agent, solve_two_agents};
use crate::oracles::{oracle_ntp_capped, oracle_ptp_capped, DEFAULT_ORACLE_CAP};
use crate::ptp::{ptp_egalitarian_exact, ptp_utilitarian_dp};
use crate::rational::{fmt_rat, parse_rat, rat_int};
use crate::reductions::{ntp_to_rdp, setcover_to_ntp, vertexcover_to_ptp};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Entry point for the `transit` binary: parses `args` (including the
/// program name) and returns the process exit code.
pub fn main_entry<I>(args: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::TooLarge(_) | Error::Inapplicable(_) => 2,
                _ => 1,
            }
        }
    }
}

#[derive(Parser)]
#[command(name = "transit", version, about = "Budget-constrained transit investment solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Append `command,instance,milliseconds` lines to this file.
    #[arg(long, global = true, value_name = "PATH")]
    time_log: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance exactly.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Run a greedy investment heuristic on a network instance.
    #[command(subcommand)]
    Greedy(GreedyCmd),
    /// Exhaustive search over all feasible selections.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Build a hardness-gadget instance from a covering problem.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Convert an instance into another model.
    #[command(subcommand)]
    Convert(ConvertCmd),
    /// Generate instance families.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Emit solver execution traces.
    #[command(subcommand)]
    Trace(TraceCmd),
    /// Emit benchmark tables.
    #[command(subcommand)]
    Bench(BenchCmd),
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Optimal stop placement on a line.
    Ptp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Eg)]
        objective: ObjectiveArg,
        /// Defaults to the dynamic program for utilitarian runs and
        /// exhaustive search for egalitarian ones.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Optimal edge discounting in a network.
    Ntp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Eg)]
        objective: ObjectiveArg,
        /// Solve for the first N agents of the file only.
        #[arg(long, value_name = "N")]
        agents: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GreedyCmd {
    /// Start empty, add the most helpful edge until the budget is spent.
    Up {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Eg)]
        objective: ObjectiveArg,
    },
    /// Start full, drop the least helpful edge down to the budget.
    Down {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Eg)]
        objective: ObjectiveArg,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Enumerate stop subsets of a line instance.
    Ptp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Eg)]
        objective: ObjectiveArg,
    },
    /// Enumerate edge subsets of a network instance.
    Ntp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Eg)]
        objective: ObjectiveArg,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Set cover to network investment (egalitarian and utilitarian gaps).
    Setcover {
        file: PathBuf,
        /// Discount factor of the produced instance, in [0,1).
        #[arg(long)]
        alpha: String,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Vertex cover to stop placement (alpha = 0 gadget).
    Vertexcover {
        file: PathBuf,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConvertCmd {
    /// Unit-weight network investment to railway edge selection.
    NtpToRdp {
        file: PathBuf,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// The family on which both greedy heuristics overpay.
    Adversarial {
        /// Discount factor, in [0,1).
        #[arg(long)]
        alpha: String,
        /// Budget; the family has beta + 1 agents.
        #[arg(long)]
        beta: usize,
        /// Comma-separated increasing perturbations (beta + 1 values);
        /// defaults to the canonical sequence.
        #[arg(long, value_name = "LIST")]
        epsilons: Option<String>,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TraceCmd {
    /// Per-iteration CSV of the budget-aware Dijkstra run.
    Dijkstra {
        file: PathBuf,
        /// Source vertex name.
        #[arg(long)]
        source: String,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BenchCmd {
    /// Greedy cost versus the motorway selection on the adversarial family.
    GreedyRatio {
        #[arg(long, default_value = "1/2")]
        alpha: String,
        #[arg(long, default_value_t = 2)]
        beta_min: usize,
        #[arg(long, default_value_t = 8)]
        beta_max: usize,
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectiveArg {
    Eg,
    Ut,
}

impl ObjectiveArg {
    fn objective(self) -> Objective {
        match self {
            ObjectiveArg::Eg => Objective::Egalitarian,
            ObjectiveArg::Ut => Objective::Utilitarian,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Dp,
    Exact,
}

/// One emitted result: the record is rebuilt from the selection before
/// printing, so `cost` and `per_agent` always match a fresh evaluation.
#[derive(Serialize)]
struct ResultRecord {
    instance: String,
    solver: String,
    objective: String,
    cost: String,
    selection: SelectionOut,
    per_agent: Vec<String>,
    feasible: bool,
    clamped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    explored: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum SelectionOut {
    Stops(Vec<String>),
    Edges(Vec<usize>),
}

fn run(cli: Cli) -> Result<()> {
    let time_log = cli.time_log.as_deref();
    match cli.command {
        Command::Solve(SolveCmd::Ptp { file, objective, method }) => {
            let (id, instance) = load_ptp(&file)?;
            let objective = objective.objective();
            let method = method.unwrap_or(match objective {
                Objective::Egalitarian => MethodArg::Exact,
                Objective::Utilitarian => MethodArg::Dp,
            });
            let started = Instant::now();
            let (solver, solution) = match (method, objective) {
                (MethodArg::Dp, Objective::Utilitarian) => ("ptp-dp", ptp_utilitarian_dp(&instance)),
                (MethodArg::Dp, Objective::Egalitarian) => {
                    return Err(Error::Inapplicable(
                        "the pairwise decomposition only solves the utilitarian objective; \
                         use --method exact"
                            .into(),
                    ))
                }
                (MethodArg::Exact, Objective::Egalitarian) => {
                    ("ptp-exact", ptp_egalitarian_exact(&instance))
                }
                (MethodArg::Exact, Objective::Utilitarian) => {
                    let report = oracle_ptp_capped(&instance, objective, oracle_cap()?)?;
                    ("ptp-exact", instance.evaluate(&report.witnesses[0]))
                }
            };
            log_time(time_log, solver, &id, started)?;
            print_record(ptp_record(&id, solver, objective, &instance, &solution, None, None));
        }
        Command::Solve(SolveCmd::Ntp { file, objective, agents }) => {
            let (id, mut instance) = load_ntp(&file)?;
            let objective = objective.objective();
            if let Some(n) = agents {
                instance = take_agents(instance, n)?;
            }
            let started = Instant::now();
            let (solver, solution) = match instance.agents().len() {
                1 => ("budget-dijkstra", solve_one_agent(&instance)?),
                2 => ("two-agent", solve_two_agents(&instance, objective)?),
                _ => {
                    let report = oracle_ntp_capped(&instance, objective, oracle_cap()?)?;
                    ("oracle", instance.evaluate(&report.witnesses[0]))
                }
            };
            log_time(time_log, solver, &id, started)?;
            print_record(ntp_record(&id, solver, objective, &instance, &solution, None, None));
        }
        Command::Greedy(cmd) => {
            let (solver, file, objective) = match cmd {
                GreedyCmd::Up { file, objective } => ("greedy-up", file, objective),
                GreedyCmd::Down { file, objective } => ("greedy-down", file, objective),
            };
            let (id, instance) = load_ntp(&file)?;
            let objective = objective.objective();
            let started = Instant::now();
            let solution = match solver {
                "greedy-up" => greedy_up(&instance, objective),
                _ => greedy_down(&instance, objective),
            };
            log_time(time_log, solver, &id, started)?;
            print_record(ntp_record(&id, solver, objective, &instance, &solution, None, None));
        }
        Command::Oracle(OracleCmd::Ptp { file, objective }) => {
            let (id, instance) = load_ptp(&file)?;
            let objective = objective.objective();
            let started = Instant::now();
            let report = oracle_ptp_capped(&instance, objective, oracle_cap()?)?;
            log_time(time_log, "oracle-ptp", &id, started)?;
            let solution = instance.evaluate(&report.witnesses[0]);
            print_record(ptp_record(
                &id,
                "oracle-ptp",
                objective,
                &instance,
                &solution,
                Some(report.witnesses.len()),
                Some(report.explored),
            ));
        }
        Command::Oracle(OracleCmd::Ntp { file, objective }) => {
            let (id, instance) = load_ntp(&file)?;
            let objective = objective.objective();
            let started = Instant::now();
            let report = oracle_ntp_capped(&instance, objective, oracle_cap()?)?;
            log_time(time_log, "oracle-ntp", &id, started)?;
            let solution = instance.evaluate(&report.witnesses[0]);
            print_record(ntp_record(
                &id,
                "oracle-ntp",
                objective,
                &instance,
                &solution,
                Some(report.witnesses.len()),
                Some(report.explored),
            ));
        }
        Command::Reduce(ReduceCmd::Setcover { file, alpha, output }) => {
            let (id, parsed) = load(&file)?;
            let sc = parsed.expect_setcover()?;
            let alpha = parse_rat(&alpha)?;
            let started = Instant::now();
            let reduction = setcover_to_ntp(&sc, &alpha)?;
            log_time(time_log, "reduce-setcover", &id, started)?;
            eprintln!(
                "cover of size {} exists iff egalitarian optimum = {} (utilitarian {})",
                sc.rho(),
                fmt_rat(&reduction.kappa_eg),
                fmt_rat(&reduction.kappa_ut),
            );
            let text = emit_instance(&Instance::Ntp(reduction.ntp), Some(&format!("{id}-gadget")));
            emit_output(&text, output.as_deref())?;
        }
        Command::Reduce(ReduceCmd::Vertexcover { file, output }) => {
            let (id, parsed) = load(&file)?;
            let vc = parsed.expect_vertexcover()?;
            let started = Instant::now();
            let reduction = vertexcover_to_ptp(&vc)?;
            log_time(time_log, "reduce-vertexcover", &id, started)?;
            eprintln!(
                "cover of size {} exists iff egalitarian optimum <= {}; otherwise >= {}",
                vc.rho(),
                fmt_rat(&reduction.kappa),
                fmt_rat(&(rat_int(2) * &reduction.kappa)),
            );
            let text = emit_instance(&Instance::Ptp(reduction.ptp), Some(&format!("{id}-gadget")));
            emit_output(&text, output.as_deref())?;
        }
        Command::Convert(ConvertCmd::NtpToRdp { file, output }) => {
            let (id, instance) = load_ntp(&file)?;
            let started = Instant::now();
            let rdp = ntp_to_rdp(&instance)?;
            log_time(time_log, "convert-ntp-to-rdp", &id, started)?;
            let text = emit_instance(&Instance::Rdp(rdp), Some(&format!("{id}-rdp")));
            emit_output(&text, output.as_deref())?;
        }
        Command::Gen(GenCmd::Adversarial { alpha, beta, epsilons, output }) => {
            let alpha = parse_rat(&alpha)?;
            let params = match epsilons {
                Some(list) => {
                    let eps = list.split(',').map(|x| parse_rat(x.trim())).collect::<Result<Vec<_>>>()?;
                    AdversarialParams::new(alpha, beta, eps)?
                }
                None => AdversarialParams::canonical(alpha, beta)?,
            };
            let name = format!("adversarial-b{beta}");
            let started = Instant::now();
            let family = make_adversarial(&params)?;
            log_time(time_log, "gen-adversarial", &name, started)?;
            eprintln!(
                "greedy walks into edges {:?}; the motorway selection {:?} stays within 3 + alpha*beta",
                family.greedy_target, family.motorway,
            );
            let text = emit_instance(&Instance::Ntp(family.instance), Some(&name));
            emit_output(&text, output.as_deref())?;
        }
        Command::Trace(TraceCmd::Dijkstra { file, source, output }) => {
            let (id, instance) = load_ntp(&file)?;
            let source = instance.graph().vertex(&source)?;
            let started = Instant::now();
            let (_, trace) = budget_dijkstra_traced(&instance, source)?;
            log_time(time_log, "trace-dijkstra", &id, started)?;
            emit_output(&trace_csv(&instance, &trace), output.as_deref())?;
        }
        Command::Bench(BenchCmd::GreedyRatio { alpha, beta_min, beta_max, output }) => {
            let alpha = parse_rat(&alpha)?;
            if beta_min < 1 || beta_min > beta_max {
                return Err(Error::invalid("beta", "need 1 <= beta-min <= beta-max"));
            }
            let name = format!("greedy-ratio-b{beta_min}-{beta_max}");
            let started = Instant::now();
            let mut csv = String::from("beta,greedy_eg,motorway_eg,ratio,bound\n");
            for beta in beta_min..=beta_max {
                let params = AdversarialParams::canonical(alpha.clone(), beta)?;
                let family = make_adversarial(&params)?;
                let greedy = greedy_up(&family.instance, Objective::Egalitarian).max;
                let motorway = family.instance.evaluate(&family.motorway).max;
                let ratio = &motorway / &greedy;
                let bound = (rat_int(3) + &alpha * rat_int(beta as i64)) / rat_int(beta as i64);
                csv.push_str(&format!(
                    "{beta},{},{},{},{}\n",
                    fmt_rat(&greedy),
                    fmt_rat(&motorway),
                    fmt_rat(&ratio),
                    fmt_rat(&bound),
                ));
            }
            log_time(time_log, "bench-greedy-ratio", &name, started)?;
            emit_output(&csv, output.as_deref())?;
        }
    }
    Ok(())
}

/// Reads and parses an instance file, returning the record id: the
/// file's `name` field if present, the file stem otherwise.
fn load(path: &Path) -> Result<(String, Instance)> {
    let bytes = std::fs::read(path)?;
    let parsed = parse_instance(&bytes)?;
    let id = parsed
        .name
        .unwrap_or_else(|| path.file_stem().map_or("instance".into(), |s| s.to_string_lossy().into_owned()));
    Ok((id, parsed.instance))
}

fn load_ptp(path: &Path) -> Result<(String, PtpInstance)> {
    let (id, instance) = load(path)?;
    Ok((id, instance.expect_ptp()?))
}

fn load_ntp(path: &Path) -> Result<(String, NtpInstance)> {
    let (id, instance) = load(path)?;
    Ok((id, instance.expect_ntp()?))
}

/// Keeps the first `n` agents of the file, as `solve ntp --agents N`.
fn take_agents(instance: NtpInstance, n: usize) -> Result<NtpInstance> {
    if n == 0 || n > instance.agents().len() {
        return Err(Error::invalid(
            "agents",
            format!("the file has {} agent(s), cannot take {n}", instance.agents().len()),
        ));
    }
    let agents = instance.agents()[..n].to_vec();
    NtpInstance::new(instance.graph().clone(), agents, instance.alpha().clone(), instance.beta())
}

fn oracle_cap() -> Result<usize> {
    match std::env::var("TRANSIT_ORACLE_CAP") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Error::invalid("TRANSIT_ORACLE_CAP", format!("not a subset count: {text:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_CAP),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Error::invalid("TRANSIT_ORACLE_CAP", "not valid unicode"))
        }
    }
}

fn ptp_record(
    id: &str,
    solver: &str,
    objective: Objective,
    instance: &PtpInstance,
    solution: &Solution,
    witnesses: Option<usize>,
    explored: Option<usize>,
) -> ResultRecord {
    let Selection::Stops(stops) = &solution.selection else {
        unreachable!("line solvers select stops");
    };
    let check = instance.evaluate(stops);
    make_record(id, solver, objective, solution, check, witnesses, explored)
}

fn ntp_record(
    id: &str,
    solver: &str,
    objective: Objective,
    instance: &NtpInstance,
    solution: &Solution,
    witnesses: Option<usize>,
    explored: Option<usize>,
) -> ResultRecord {
    let Selection::Edges(edges) = &solution.selection else {
        unreachable!("network solvers select edges");
    };
    let check = instance.evaluate(edges);
    make_record(id, solver, objective, solution, check, witnesses, explored)
}

fn make_record(
    id: &str,
    solver: &str,
    objective: Objective,
    solution: &Solution,
    check: Solution,
    witnesses: Option<usize>,
    explored: Option<usize>,
) -> ResultRecord {
    assert_eq!(
        check.cost(objective),
        solution.cost(objective),
        "result record failed its re-evaluation self-check"
    );
    let selection = match &solution.selection {
        Selection::Stops(stops) => SelectionOut::Stops(stops.iter().map(fmt_rat).collect()),
        Selection::Edges(edges) => SelectionOut::Edges(edges.clone()),
    };
    ResultRecord {
        instance: id.into(),
        solver: solver.into(),
        objective: objective.short().into(),
        cost: fmt_rat(solution.cost(objective)),
        selection,
        per_agent: check.per_agent_costs.iter().map(fmt_rat).collect(),
        feasible: solution.feasible,
        clamped: solution.clamped,
        witnesses,
        explored,
    }
}

fn print_record(record: ResultRecord) {
    let text = serde_json::to_string_pretty(&record).expect("record serialization cannot fail");
    println!("{text}");
}

/// Writes `text` to `output`, or stdout when no path was given.
fn emit_output(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn log_time(path: Option<&Path>, solver: &str, instance: &str, started: Instant) -> Result<()> {
    let Some(path) = path else { return Ok(()) };
    let mut file = std::fs::OpenOptions::new().append(true).create(true).open(path)?;
    writeln!(file, "{solver},{instance},{}", started.elapsed().as_millis())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn take_agents_validates_the_range() {
        let net = crate::samples::six_vertex_network();
        assert!(take_agents(net.clone(), 0).is_err());
        assert!(take_agents(net.clone(), 2).is_err());
        assert_eq!(take_agents(net, 1).unwrap().agents().len(), 1);
    }

    #[test]
    fn oracle_cap_env_parsing() {
        // The default applies when the variable is absent.
        std::env::remove_var("TRANSIT_ORACLE_CAP");
        assert_eq!(oracle_cap().unwrap(), DEFAULT_ORACLE_CAP);
    }

    #[test]
    fn records_serialize_with_fixed_field_order() {
        let net = crate::samples::six_vertex_network();
        let solution = net.evaluate(&[2, 5]);
        let record =
            ntp_record("table", "solver", Objective::Egalitarian, &net, &solution, Some(1), Some(22));
        let text = serde_json::to_string(&record).unwrap();
        assert!(text.starts_with(r#"{"instance":"table","solver":"solver","objective":"eg","cost":"11/2""#));
        assert!(text.contains(r#""selection":{"edges":[2,5]}"#));
        assert!(text.contains(r#""explored":22"#));
    }
}
