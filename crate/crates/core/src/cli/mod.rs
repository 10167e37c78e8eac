// Copyright 2026 The hetsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `hetsched` command line.
//!
//! Every command writes to `--out` when given and to stdout otherwise.
//! Output depends only on the inputs and flags; `--timestamps` adds the
//! generation time.

mod exit;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use exit::exit_code;

use crate::error::{Error, FormatError, Result};
use crate::io::{
    comparison_csv, import_raw_profiles, load_cluster, load_profiles, load_topology, parse,
    read_text, report_csv, sweep_csv, to_json, write_text, SweepRow, RAW_PROFILE_HEADER,
};
use crate::model::{ExecutionPlan, Problem};
use crate::schedule::{
    optimal_schedule, propose, round_robin_schedule, OptimalConfig, ScheduleResult,
    SchedulerConfig, DEFAULT_COST_CAP,
};
use crate::sim::{compare, discrete_oracle, max_tick, simulate, OracleConfig, OracleReport, SimulationReport};

#[derive(Debug, Parser)]
#[command(name = "hetsched", version, about = "Throughput-maximizing scheduler for stream topologies on heterogeneous clusters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a plan with one scheduler and report it.
    Schedule(ScheduleArgs),
    /// Evaluate an existing plan, optionally with the discrete-event oracle.
    Simulate(SimulateArgs),
    /// Round-Robin throughput over a grid of instance counts.
    Sweep(SweepArgs),
    /// Run several schedulers and tabulate their gains.
    Compare(CompareArgs),
    /// Convert a seconds-per-tuple CSV into a profile file.
    ImportProfiles(ImportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Proposed,
    Roundrobin,
    Optimal,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Proposed => "proposed",
            Algo::Roundrobin => "roundrobin",
            Algo::Optimal => "optimal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON.
    Structured,
    Csv,
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Topology file (JSON).
    #[arg(long)]
    pub topology: PathBuf,
    /// Cluster file (JSON).
    #[arg(long)]
    pub cluster: PathBuf,
    /// Profile file (JSON).
    #[arg(long)]
    pub profiles: PathBuf,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "structured")]
    pub format: Format,
    /// Embed the generation time (seconds since the Unix epoch).
    #[arg(long)]
    pub timestamps: bool,
}

#[derive(Debug, Args)]
pub struct Tuning {
    /// Initial input rate of the heuristic, tuples/s.
    #[arg(long, default_value_t = 1.0)]
    pub r0: f64,
    /// Initial rate-increment divisor of the heuristic.
    #[arg(long, default_value_t = 1.0)]
    pub scale_init: f64,
    /// Per-machine task caps for the optimal search: one value for every
    /// machine, or a comma-separated list with one entry per machine.
    #[arg(long, default_value = "2")]
    pub budget: String,
    /// Refuse optimal searches whose estimated size exceeds this.
    #[arg(long, default_value_t = DEFAULT_COST_CAP)]
    pub cost_cap: f64,
    /// Instance counts for Round-Robin (comma-separated, component order);
    /// defaults to the counts the heuristic chooses.
    #[arg(long)]
    pub counts: Option<String>,
}

#[derive(Debug, Args)]
pub struct ScheduleArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    #[arg(long, value_enum, default_value = "proposed")]
    pub algo: Algo,
    #[command(flatten)]
    pub tuning: Tuning,
    /// Record the heuristic's per-iteration trace.
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// Plan file: a bare plan or the output of `schedule`.
    #[arg(long)]
    pub plan: PathBuf,
    /// Also run the discrete-event oracle.
    #[arg(long)]
    pub oracle: bool,
    /// Oracle horizon, seconds.
    #[arg(long, default_value_t = 60.0)]
    pub horizon: f64,
    /// Oracle tick, seconds; defaults to the largest accepted tick.
    #[arg(long)]
    pub tick: Option<f64>,
    /// Seed for jittered oracle arrivals; evenly spaced when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// `component=LO..HI`, inclusive; repeat for every swept component.
    #[arg(long = "sweep", required = true)]
    pub ranges: Vec<String>,
    /// Counts of the components not swept (comma-separated); all 1 when
    /// absent.
    #[arg(long)]
    pub counts: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// At least two schedulers, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub algo: Vec<Algo>,
    #[command(flatten)]
    pub tuning: Tuning,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ImportArgs {
    /// Raw table with header `profile_key,type_id,seconds_per_tuple[,met]`.
    #[arg(long)]
    pub raw: PathBuf,
    /// Cluster file providing capacity and cores per type.
    #[arg(long)]
    pub cluster: PathBuf,
    /// Optional topology whose profile keys must all be covered.
    #[arg(long)]
    pub topology: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub timestamps: bool,
}

/// Runs one parsed command, writing its output to `--out` or `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    let (text, out) = match cli.command {
        Command::Schedule(a) => (cmd_schedule(&a)?, a.output.out),
        Command::Simulate(a) => (cmd_simulate(&a)?, a.output.out),
        Command::Sweep(a) => (cmd_sweep(&a)?, a.output.out),
        Command::Compare(a) => (cmd_compare(&a)?, a.output.out),
        Command::ImportProfiles(a) => (cmd_import(&a)?, a.out),
    };
    emit(&text, out.as_deref(), stdout)
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => write_text(path, text)?,
        None => stdout.write_all(text.as_bytes()).map_err(|source| FormatError::Io {
            path: "<stdout>".into(),
            source,
        })?,
    }
    Ok(())
}

fn load_problem(inputs: &Inputs) -> Result<Problem> {
    let topology = load_topology(&inputs.topology)?;
    let cluster = load_cluster(&inputs.cluster)?;
    let profiles = load_profiles(&inputs.profiles, &cluster)?;
    Ok(Problem::new(topology, cluster, profiles)?)
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

#[derive(Serialize)]
struct Stamped<'a, T: Serialize> {
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<u64>,
    #[serde(flatten)]
    body: &'a T,
}

fn render<T: Serialize>(value: &T, csv: impl FnOnce() -> Result<String, FormatError>, output: &Output) -> Result<String> {
    let generated_at = output.timestamps.then(now);
    match output.format {
        Format::Structured => Ok(to_json(&Stamped { generated_at, body: value })),
        Format::Csv => {
            let body = csv()?;
            Ok(match generated_at {
                Some(t) => format!("# generated_at={t}\n{body}"),
                None => body,
            })
        }
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Usage(format!("{what}: `{s}` is not a non-negative integer")))
        })
        .collect()
}

fn budget(text: &str, machines: usize) -> Result<Vec<u32>> {
    let list = parse_list(text, "--budget")?;
    Ok(if list.len() == 1 { vec![list[0]; machines] } else { list })
}

fn config(t: &Tuning, trace: bool) -> SchedulerConfig {
    SchedulerConfig {
        r0: t.r0,
        scale_init: t.scale_init,
        record_trace: trace,
        ..SchedulerConfig::default()
    }
}

fn run_algo(algo: Algo, problem: &Problem, t: &Tuning, trace: bool) -> Result<ScheduleResult> {
    match algo {
        Algo::Proposed => Ok(propose(problem, &config(t, trace))?),
        Algo::Optimal => {
            let cfg = OptimalConfig {
                budget_per_machine: budget(&t.budget, problem.cluster().len())?,
                cost_cap: t.cost_cap,
            };
            Ok(optimal_schedule(problem, &cfg)?)
        }
        Algo::Roundrobin => {
            let counts = match &t.counts {
                Some(c) => parse_list(c, "--counts")?,
                None => propose(problem, &config(t, false))?.plan.instance_counts,
            };
            let plan = round_robin_schedule(&counts, problem)?;
            let report = simulate(&plan, problem);
            Ok(ScheduleResult {
                plan,
                report,
                iterations: 0,
                trace: None,
            })
        }
    }
}

#[derive(Serialize)]
struct ScheduleOutput<'a> {
    algorithm: Algo,
    #[serde(flatten)]
    result: &'a ScheduleResult,
}

fn cmd_schedule(a: &ScheduleArgs) -> Result<String> {
    let problem = load_problem(&a.inputs)?;
    let result = run_algo(a.algo, &problem, &a.tuning, a.trace)?;
    let out = ScheduleOutput {
        algorithm: a.algo,
        result: &result,
    };
    render(&out, || report_csv(&result.report), &a.output)
}

#[derive(Serialize)]
struct SimulateOutput {
    report: SimulationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

fn read_plan(path: &Path) -> Result<ExecutionPlan> {
    let text = read_text(path)?;
    let document = path.display().to_string();
    let mut value: serde_json::Value = parse(&text, &document)?;
    if let Some(inner) = value.get_mut("plan") {
        value = inner.take();
    }
    serde_json::from_value(value)
        .map_err(|e| FormatError::Schema { document, message: e.to_string() }.into())
}

fn cmd_simulate(a: &SimulateArgs) -> Result<String> {
    let problem = load_problem(&a.inputs)?;
    let plan = read_plan(&a.plan)?;
    plan.validate(problem.topology(), problem.cluster())?;
    let report = simulate(&plan, &problem);
    let oracle = if a.oracle {
        let mut cfg = OracleConfig::new(a.horizon, a.tick.unwrap_or_else(|| max_tick(&plan, &problem)));
        cfg.jitter_seed = a.seed;
        Some(discrete_oracle(&plan, &problem, &cfg)?)
    } else {
        None
    };
    let csv_report = oracle.as_ref().map_or(&report, |o| &o.report).clone();
    render(&SimulateOutput { report, oracle }, || report_csv(&csv_report), &a.output)
}

fn parse_range(spec: &str, problem: &Problem) -> Result<(String, usize, u32, u32)> {
    let bad = || Error::Usage(format!("--sweep `{spec}`: expected component=LO..HI"));
    let (name, range) = spec.split_once('=').ok_or_else(bad)?;
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    let component = problem
        .topology()
        .find(name.trim())
        .ok_or_else(|| Error::Usage(format!("--sweep: unknown component `{name}`")))?;
    if lo == 0 || lo > hi {
        return Err(Error::RangeEmpty(name.trim().to_string()));
    }
    Ok((name.trim().to_string(), component.0, lo, hi))
}

/// Round-Robin throughput for every count combination of the swept
/// components, in lexicographic order with the first range varying slowest.
/// Combinations whose fixed overhead alone overloads a machine score 0.
pub fn sweep_rows(problem: &Problem, base: &[u32], ranges: &[(usize, u32, u32)]) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    let mut counts = base.to_vec();
    let mut idx: Vec<u32> = ranges.iter().map(|r| r.1).collect();
    loop {
        for (&(c, _, _), &v) in ranges.iter().zip(&idx) {
            counts[c] = v;
        }
        let (input_rate, throughput) = match round_robin_schedule(&counts, problem) {
            Ok(plan) => (plan.input_rate, simulate(&plan, problem).overall_throughput),
            Err(crate::error::ScheduleError::Rate(_)) => (0.0, 0.0),
            Err(e) => return Err(e.into()),
        };
        rows.push(SweepRow {
            counts: counts.clone(),
            input_rate,
            throughput,
            argmax: false,
        });
        let mut j = ranges.len();
        loop {
            if j == 0 {
                let best = rows
                    .iter()
                    .enumerate()
                    .fold(0, |b, (i, r)| if r.throughput > rows[b].throughput { i } else { b });
                rows[best].argmax = true;
                return Ok(rows);
            }
            j -= 1;
            if idx[j] < ranges[j].2 {
                idx[j] += 1;
                break;
            }
            idx[j] = ranges[j].1;
        }
    }
}

fn cmd_sweep(a: &SweepArgs) -> Result<String> {
    let problem = load_problem(&a.inputs)?;
    let n = problem.topology().len();
    let base = match &a.counts {
        Some(c) => parse_list(c, "--counts")?,
        None => vec![1; n],
    };
    if base.len() != n || base.contains(&0) {
        return Err(Error::Usage(format!("--counts needs {n} positive entries")));
    }
    let mut named = Vec::new();
    let mut ranges = Vec::new();
    for spec in &a.ranges {
        let (name, c, lo, hi) = parse_range(spec, &problem)?;
        if ranges.iter().any(|r: &(usize, u32, u32)| r.0 == c) {
            return Err(Error::Usage(format!("--sweep: component `{name}` given twice")));
        }
        named.push((name, c));
        ranges.push((c, lo, hi));
    }
    let rows = sweep_rows(&problem, &base, &ranges)?;
    // the structured form carries the same rows
    #[derive(Serialize)]
    struct Row<'a> {
        counts: &'a [u32],
        input_rate: f64,
        throughput: f64,
        argmax: bool,
    }
    #[derive(Serialize)]
    struct SweepOutput<'a> {
        swept: Vec<&'a str>,
        rows: Vec<Row<'a>>,
    }
    let out = SweepOutput {
        swept: named.iter().map(|(n, _)| n.as_str()).collect(),
        rows: rows
            .iter()
            .map(|r| Row {
                counts: &r.counts,
                input_rate: r.input_rate,
                throughput: r.throughput,
                argmax: r.argmax,
            })
            .collect(),
    };
    render(&out, || sweep_csv(&named, &rows), &a.output)
}

fn cmd_compare(a: &CompareArgs) -> Result<String> {
    let mut algos: Vec<Algo> = Vec::new();
    for &algo in &a.algo {
        if !algos.contains(&algo) {
            algos.push(algo);
        }
    }
    if algos.len() < 2 {
        return Err(Error::Usage("compare needs at least two distinct --algo values".into()));
    }
    let problem = load_problem(&a.inputs)?;
    let mut plans = Vec::new();
    for &algo in &algos {
        plans.push((algo.name().to_string(), run_algo(algo, &problem, &a.tuning, false)?.plan));
    }
    let cmp = compare(&plans, &problem)?;
    render(&cmp, || comparison_csv(&cmp), &a.output)
}

fn cmd_import(a: &ImportArgs) -> Result<String> {
    let cluster = load_cluster(&a.cluster)?;
    let topology = a.topology.as_deref().map(load_topology).transpose()?;
    let keys = topology.as_ref().map_or_else(Vec::new, |t| t.profile_keys());
    let raw = read_text(&a.raw)?;
    let mut doc = import_raw_profiles(&raw, &cluster, &keys)?;
    doc.note = format!("imported from a {RAW_PROFILE_HEADER} table");
    doc.generated_at = a.timestamps.then(now);
    Ok(to_json(&doc))
}
