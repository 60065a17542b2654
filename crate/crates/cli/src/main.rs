//! Command-line front end for contact-network link prediction.
//!
//! Subcommands cover the full pipeline: `validate` and `stats` inspect
//! event data, `evaluate`, `sweep`, and `prune-sweep` measure ranking
//! accuracy, `subgroups` mines attribute patterns, and `synth` generates
//! test data. Every output file is accompanied by a JSON manifest that
//! pins the configuration and input digests needed to reproduce it.
//!
//! Exit codes: 0 success, 1 data validation or I/O failure, 2 bad
//! configuration or usage, 3 undefined result (an empty AUC class, a zero
//! population mean, or a walk that failed to converge).

mod manifest;
mod output;

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use linkprox::contact_data::{parse_events, write_events};
use linkprox::evaluation::{
    evaluate, sweep_future_threshold, weak_tie_removal_sweep, write_auc_csv, EvaluationConfig,
    Task, DEFAULT_WEAK_TIE_FUTURE_THRESHOLD,
};
use linkprox::predictors::{Measure, PredictorConfig};
use linkprox::statistics::{
    contact_length_ccdf, graph_summary, recurrence_by_bin, recurrence_duration_ccdf,
    recurrence_prob_conditioned, top_k_contact_fractions, Condition, DurationBin,
};
use linkprox::subgroups::{
    discover, parse_profiles, target_new_contact_count, target_recurring_duration, write_profiles,
    Direction,
};
use linkprox::synth::{generate, PlantSpec, SynthConfig};
use linkprox::{ContactEvent, ContactGraph, Error, Result, TemporalSplit};

use crate::manifest::{manifest_path, RunManifest};

#[derive(Parser)]
#[command(
    name = "linkprox",
    version,
    about = "Link prediction and contact statistics for temporal face-to-face contact networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an event CSV (and optionally a profile CSV).
    Validate(ValidateArgs),
    /// Descriptive statistics of the aggregated contact graph.
    Stats(StatsArgs),
    /// AUC of proximity measures on one train/test split.
    Evaluate(EvaluateArgs),
    /// AUC of proximity measures across future-contact thresholds.
    Sweep(SweepArgs),
    /// AUC of proximity measures as weak training ties are removed.
    PruneSweep(PruneSweepArgs),
    /// Mine attribute conjunctions whose members contact unusually.
    Subgroups(SubgroupsArgs),
    /// Generate a synthetic event dataset with optional planted structure.
    Synth(SynthArgs),
}

#[derive(Args)]
struct SplitArgs {
    /// Event CSV with header start,end,a,b (unix seconds, participant ids).
    #[arg(long, value_name = "FILE")]
    events: PathBuf,
    /// Cut timestamp in raw unix seconds; events starting at or before it
    /// form the training period, the rest the test period.
    #[arg(long, value_name = "UNIX_SECONDS")]
    split_ts: i64,
}

#[derive(Args)]
struct PredictorArgs {
    /// Restart probability of the rooted random walk.
    #[arg(long, default_value_t = PredictorConfig::default().alpha)]
    alpha: f64,
    /// Damping factor per walk step of the Katz measures.
    #[arg(long, default_value_t = PredictorConfig::default().beta)]
    beta: f64,
    /// Longest walk length counted by the Katz measures.
    #[arg(long, default_value_t = PredictorConfig::default().l_max)]
    l_max: usize,
    /// L1 convergence threshold of the power iteration.
    #[arg(long, default_value_t = PredictorConfig::default().rpr_tolerance)]
    rpr_tolerance: f64,
    /// Iteration cap of the power iteration.
    #[arg(long, default_value_t = PredictorConfig::default().rpr_max_iterations)]
    rpr_max_iterations: usize,
}

impl PredictorArgs {
    fn to_config(&self) -> PredictorConfig {
        PredictorConfig {
            alpha: self.alpha,
            beta: self.beta,
            l_max: self.l_max,
            rpr_tolerance: self.rpr_tolerance,
            rpr_max_iterations: self.rpr_max_iterations,
        }
    }

    fn echo(&self, man: &mut RunManifest) {
        man.arg("alpha", self.alpha)
            .arg("beta", self.beta)
            .arg("l-max", self.l_max)
            .arg("rpr-tolerance", self.rpr_tolerance)
            .arg("rpr-max-iterations", self.rpr_max_iterations);
    }
}

#[derive(Args)]
struct ValidateArgs {
    /// Event CSV to check.
    #[arg(value_name = "EVENTS")]
    events: PathBuf,
    /// Profile CSV (header id,attribute,value) to check alongside.
    #[arg(long, value_name = "FILE")]
    profiles: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Event CSV with header start,end,a,b.
    #[arg(long, value_name = "FILE")]
    events: PathBuf,
    /// Cut timestamp enabling the recurrence analyses.
    #[arg(long, value_name = "UNIX_SECONDS")]
    split_ts: Option<i64>,
    /// Directory receiving one CSV plus one JSON sidecar per analysis.
    #[arg(long, value_name = "DIR")]
    out_dir: PathBuf,
    /// Number of strongest-contact ranks in the fraction table.
    #[arg(long, default_value_t = 10)]
    top_k: usize,
    /// Ascending duration-bin edges in seconds; the last edge opens the
    /// final unbounded bin.
    #[arg(long, value_name = "LIST", default_value = "20,60,120,240,480,960")]
    bin_edges: String,
    /// Future contact seconds a pair needs to count as recurring in the
    /// conditional curves.
    #[arg(long, default_value_t = DEFAULT_WEAK_TIE_FUTURE_THRESHOLD)]
    strength_threshold: u64,
    /// Common-neighbor thresholds of the conditional curve.
    #[arg(long, value_name = "LIST", default_value = "0,1,2,3,4,5")]
    cn_thresholds: String,
    /// Tie-strength thresholds (seconds) of the conditional curve.
    #[arg(long, value_name = "LIST", default_value = "0,60,120,240,480,960")]
    tie_thresholds: String,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    split: SplitArgs,
    /// Prediction task: new or recurring.
    #[arg(long, value_parser = Task::from_str)]
    task: Task,
    /// Measures to evaluate: names, a comma list, or all.
    #[arg(long, value_name = "MEASURES")]
    measure: String,
    /// Future contact seconds required for a positive label; pairs with
    /// less (but some) future contact are excluded from the ranking.
    #[arg(long, default_value_t = EvaluationConfig::default().future_threshold)]
    future_threshold: u64,
    /// Hide training ties weaker than this many seconds from the scoring
    /// graph; candidates and labels still come from the full graph.
    #[arg(long, default_value_t = EvaluationConfig::default().removal_threshold)]
    removal_threshold: u64,
    #[command(flatten)]
    predictor: PredictorArgs,
    /// Output CSV path.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    split: SplitArgs,
    /// Prediction task: new or recurring.
    #[arg(long, value_parser = Task::from_str)]
    task: Task,
    /// Measures to sweep: names, a comma list, or all.
    #[arg(long, value_name = "MEASURES")]
    measure: String,
    /// Ascending future-contact thresholds in seconds, one sweep point
    /// each; points with an empty label class stay in the output with an
    /// empty auc field.
    #[arg(long, value_name = "LIST")]
    future_thresholds: String,
    #[command(flatten)]
    predictor: PredictorArgs,
    /// Output CSV path.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct PruneSweepArgs {
    #[command(flatten)]
    split: SplitArgs,
    /// Prediction task: new or recurring.
    #[arg(long, default_value = "recurring", value_parser = Task::from_str)]
    task: Task,
    /// Measures to sweep: names, a comma list, or all.
    #[arg(long, value_name = "MEASURES")]
    measure: String,
    /// Ascending removal thresholds in seconds; each point scores on a
    /// training graph without the ties weaker than the threshold.
    #[arg(long, value_name = "LIST")]
    removal_thresholds: String,
    /// Fixed future contact seconds required for a positive label.
    #[arg(long, default_value_t = DEFAULT_WEAK_TIE_FUTURE_THRESHOLD)]
    future_threshold: u64,
    #[command(flatten)]
    predictor: PredictorArgs,
    /// Output CSV path.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct SubgroupsArgs {
    #[command(flatten)]
    split: SplitArgs,
    /// Profile CSV with header id,attribute,value.
    #[arg(long, value_name = "FILE")]
    profiles: PathBuf,
    /// Target property per participant: new-contacts (distinct partners
    /// first met after the cut) or recurring-duration (post-cut seconds
    /// with already-known partners).
    #[arg(long, value_parser = TargetKind::from_str)]
    target: TargetKind,
    /// Most attributes a conjunction may combine.
    #[arg(long, default_value_t = 2)]
    max_depth: usize,
    /// Smallest subgroup size reported.
    #[arg(long, default_value_t = 1)]
    min_size: usize,
    /// Number of patterns reported.
    #[arg(long, default_value_t = 20)]
    top_k: usize,
    /// Rank by lift: high surfaces elevated subgroups, low depressed ones.
    #[arg(long, default_value = "high", value_parser = Direction::from_str)]
    direction: Direction,
    /// Output CSV path.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, default_value_t = SynthConfig::default().participants)]
    participants: usize,
    #[arg(long, default_value_t = SynthConfig::default().days)]
    days: usize,
    /// Seconds per day window.
    #[arg(long, default_value_t = SynthConfig::default().day_length)]
    day_length: i64,
    #[arg(long, default_value_t = SynthConfig::default().events_per_day)]
    events_per_day: usize,
    /// Pareto tail exponent of contact durations.
    #[arg(long, default_value_t = SynthConfig::default().pareto_shape)]
    pareto_shape: f64,
    /// Minimum contact duration in seconds.
    #[arg(long, default_value_t = SynthConfig::default().pareto_minimum)]
    pareto_minimum: u64,
    /// RNG seed; the generator is a fixed ChaCha12 stream, so a seed is
    /// portable across platforms and builds.
    #[arg(long, default_value_t = SynthConfig::default().seed)]
    seed: u64,
    /// Planted structure: positives-share-cn,
    /// future-weight-proportional-to-training-weight, or
    /// noise-edges-below:<seconds>.
    #[arg(long, value_name = "SPEC", value_parser = PlantSpec::from_str)]
    plant: Option<PlantSpec>,
    /// Event CSV to write.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Profile CSV to write.
    #[arg(long, value_name = "FILE")]
    profiles_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy)]
enum TargetKind {
    NewContacts,
    RecurringDuration,
}

impl TargetKind {
    fn name(self) -> &'static str {
        match self {
            TargetKind::NewContacts => "new-contacts",
            TargetKind::RecurringDuration => "recurring-duration",
        }
    }
}

impl FromStr for TargetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "new-contacts" => Ok(TargetKind::NewContacts),
            "recurring-duration" => Ok(TargetKind::RecurringDuration),
            other => Err(Error::Config(format!(
                "unknown target {other:?}, expected new-contacts or recurring-duration"
            ))),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate(args) => run_validate(args),
        Command::Stats(args) => run_stats(args),
        Command::Evaluate(args) => run_evaluate(args),
        Command::Sweep(args) => run_sweep(args),
        Command::PruneSweep(args) => run_prune_sweep(args),
        Command::Subgroups(args) => run_subgroups(args),
        Command::Synth(args) => run_synth(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::Validation { .. }
        | Error::Invalid(_)
        | Error::UnknownParticipant(_)
        | Error::Io(_) => 1,
        Error::Config(_) => 2,
        Error::Convergence { .. } | Error::UndefinedAuc { .. } | Error::UndefinedLift { .. } => 3,
    }
}

fn load_events(path: &Path) -> Result<Vec<ContactEvent>> {
    parse_events(File::open(path)?)
}

/// Expands a measure flag: single names, comma lists, and `all` (the full
/// set in declaration order).
fn parse_measures(flag: &str) -> Result<Vec<Measure>> {
    let mut measures = Vec::new();
    for part in flag.split(',') {
        let part = part.trim();
        if part == "all" {
            measures.extend(Measure::ALL);
        } else {
            measures.push(part.parse()?);
        }
    }
    Ok(measures)
}

fn parse_u64_list(flag: &str, text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u64>().map_err(|_| {
                Error::Config(format!(
                    "{flag} expects comma-separated whole numbers of seconds, got {part:?}"
                ))
            })
        })
        .collect()
}

fn parse_ascending(flag: &str, text: &str) -> Result<Vec<u64>> {
    let values = parse_u64_list(flag, text)?;
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config(format!(
            "{flag} must be strictly ascending, got {text}"
        )));
    }
    Ok(values)
}

/// Turns ascending edges `a,b,...,z` into bins `[a,b) ... [z,inf)`.
fn parse_bins(text: &str) -> Result<Vec<DurationBin>> {
    let edges = parse_ascending("--bin-edges", text)?;
    let mut bins: Vec<DurationBin> = edges
        .windows(2)
        .map(|w| DurationBin::new(w[0], w[1]))
        .collect();
    bins.push(DurationBin::open(
        *edges.last().expect("at least one edge parsed"),
    ));
    Ok(bins)
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run_validate(args: &ValidateArgs) -> Result<()> {
    let events = load_events(&args.events)?;
    let graph = ContactGraph::from_events(&events);
    println!(
        "ok: {} events, {} participants, {} linked pairs",
        events.len(),
        graph.vertex_count(),
        graph.edge_count()
    );
    if let Some(path) = &args.profiles {
        let profiles = parse_profiles(File::open(path)?)?;
        let attributes: BTreeSet<&str> = profiles
            .iter()
            .flat_map(|p| p.attributes.keys().map(String::as_str))
            .collect();
        println!(
            "ok: {} profiles, {} attributes",
            profiles.len(),
            attributes.len()
        );
    }
    Ok(())
}

fn run_stats(args: &StatsArgs) -> Result<()> {
    if args.top_k == 0 {
        return Err(Error::Config("--top-k must be at least 1".to_string()));
    }
    let bins = parse_bins(&args.bin_edges)?;
    let cn_thresholds = parse_ascending("--cn-thresholds", &args.cn_thresholds)?;
    let tie_thresholds = parse_ascending("--tie-thresholds", &args.tie_thresholds)?;
    let events = load_events(&args.events)?;
    std::fs::create_dir_all(&args.out_dir)?;
    let graph = ContactGraph::from_events(&events);

    let mut man = RunManifest::new("stats");
    man.arg("events", args.events.display())
        .arg(
            "split-ts",
            args.split_ts.map_or("none".to_string(), |t| t.to_string()),
        )
        .arg("out-dir", args.out_dir.display())
        .arg("top-k", args.top_k)
        .arg("bins", bins.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" "))
        .arg("strength-threshold", args.strength_threshold)
        .arg("cn-thresholds", join(&cn_thresholds))
        .arg("tie-thresholds", join(&tie_thresholds));
    man.input(&args.events)?;

    let emit = |name: &str, man: &mut RunManifest| -> PathBuf {
        let path = args.out_dir.join(name);
        man.output(&path);
        man.output(&path.with_extension("json"));
        path
    };

    let path = emit("summary.csv", &mut man);
    output::write_summary(&path, &graph_summary(&graph))?;
    let path = emit("contact_length_ccdf.csv", &mut man);
    output::write_contact_length_ccdf(&path, &contact_length_ccdf(&graph))?;
    let path = emit("top_contact_fractions.csv", &mut man);
    output::write_top_fractions(
        &path,
        &top_k_contact_fractions(&graph, args.top_k),
        args.top_k,
    )?;

    if let Some(split_ts) = args.split_ts {
        let split = TemporalSplit::at(&events, split_ts);
        let path = emit("recurrence_by_bin.csv", &mut man);
        output::write_recurrence_by_bin(
            &path,
            &recurrence_by_bin(&split, &bins),
            &bins,
            split_ts,
        )?;
        let path = emit("recurrence_duration_ccdf.csv", &mut man);
        output::write_recurrence_duration_ccdf(
            &path,
            &recurrence_duration_ccdf(&split, &bins),
            &bins,
            split_ts,
        )?;
        let cn_curve = recurrence_prob_conditioned(
            &split,
            Condition::CommonNeighbors,
            args.strength_threshold,
            &cn_thresholds,
        );
        let tie_curve = recurrence_prob_conditioned(
            &split,
            Condition::TieStrength,
            args.strength_threshold,
            &tie_thresholds,
        );
        let path = emit("recurrence_conditioned.csv", &mut man);
        output::write_recurrence_conditioned(
            &path,
            &[
                (Condition::CommonNeighbors.name(), cn_curve.as_slice()),
                (Condition::TieStrength.name(), tie_curve.as_slice()),
            ],
            split_ts,
            args.strength_threshold,
            &cn_thresholds,
            &tie_thresholds,
        )?;
    }

    let file_count = 1 + 2 * if args.split_ts.is_some() { 6 } else { 3 };
    man.write(&args.out_dir.join("manifest.json"))?;
    println!("wrote {} files to {}", file_count, args.out_dir.display());
    Ok(())
}

fn run_evaluate(args: &EvaluateArgs) -> Result<()> {
    let measures = parse_measures(&args.measure)?;
    let pcfg = args.predictor.to_config();
    pcfg.validate()?;
    let ecfg = EvaluationConfig {
        future_threshold: args.future_threshold,
        removal_threshold: args.removal_threshold,
    };
    let events = load_events(&args.split.events)?;
    let split = TemporalSplit::at(&events, args.split.split_ts);

    let mut results = Vec::with_capacity(measures.len());
    for &measure in &measures {
        results.push(evaluate(&split, measure, args.task, &ecfg, &pcfg)?);
    }
    write_auc_csv(&results, File::create(&args.out)?)?;

    let mut man = RunManifest::new("evaluate");
    man.arg("events", args.split.events.display())
        .arg("split-ts", args.split.split_ts)
        .arg("task", args.task)
        .arg("measure", join(&measures))
        .arg("future-threshold", args.future_threshold)
        .arg("removal-threshold", args.removal_threshold)
        .arg("out", args.out.display());
    args.predictor.echo(&mut man);
    man.input(&args.split.events)?;
    man.output(&args.out);
    man.write(&manifest_path(&args.out))?;

    println!("wrote {} ({} rows)", args.out.display(), results.len());
    Ok(())
}

fn run_sweep(args: &SweepArgs) -> Result<()> {
    let measures = parse_measures(&args.measure)?;
    let thresholds = parse_ascending("--future-thresholds", &args.future_thresholds)?;
    let pcfg = args.predictor.to_config();
    pcfg.validate()?;
    let events = load_events(&args.split.events)?;
    let split = TemporalSplit::at(&events, args.split.split_ts);

    let mut results = Vec::with_capacity(measures.len() * thresholds.len());
    for &measure in &measures {
        results.extend(sweep_future_threshold(
            &split,
            measure,
            args.task,
            &thresholds,
            &pcfg,
        )?);
    }
    write_auc_csv(&results, File::create(&args.out)?)?;

    let mut man = RunManifest::new("sweep");
    man.arg("events", args.split.events.display())
        .arg("split-ts", args.split.split_ts)
        .arg("task", args.task)
        .arg("measure", join(&measures))
        .arg("future-thresholds", join(&thresholds))
        .arg("out", args.out.display());
    args.predictor.echo(&mut man);
    man.input(&args.split.events)?;
    man.output(&args.out);
    man.write(&manifest_path(&args.out))?;

    println!("wrote {} ({} rows)", args.out.display(), results.len());
    Ok(())
}

fn run_prune_sweep(args: &PruneSweepArgs) -> Result<()> {
    let measures = parse_measures(&args.measure)?;
    let thresholds = parse_ascending("--removal-thresholds", &args.removal_thresholds)?;
    let pcfg = args.predictor.to_config();
    pcfg.validate()?;
    let events = load_events(&args.split.events)?;
    let split = TemporalSplit::at(&events, args.split.split_ts);

    let mut results = Vec::with_capacity(measures.len() * thresholds.len());
    for &measure in &measures {
        results.extend(weak_tie_removal_sweep(
            &split,
            measure,
            args.task,
            &thresholds,
            args.future_threshold,
            &pcfg,
        )?);
    }
    write_auc_csv(&results, File::create(&args.out)?)?;

    let mut man = RunManifest::new("prune-sweep");
    man.arg("events", args.split.events.display())
        .arg("split-ts", args.split.split_ts)
        .arg("task", args.task)
        .arg("measure", join(&measures))
        .arg("removal-thresholds", join(&thresholds))
        .arg("future-threshold", args.future_threshold)
        .arg("out", args.out.display());
    args.predictor.echo(&mut man);
    man.input(&args.split.events)?;
    man.output(&args.out);
    man.write(&manifest_path(&args.out))?;

    println!("wrote {} ({} rows)", args.out.display(), results.len());
    Ok(())
}

fn run_subgroups(args: &SubgroupsArgs) -> Result<()> {
    let profiles = parse_profiles(File::open(&args.profiles)?)?;
    let events = load_events(&args.split.events)?;
    let split = TemporalSplit::at(&events, args.split.split_ts);

    let mut targets = BTreeMap::new();
    for id in split.core() {
        let value = match args.target {
            TargetKind::NewContacts => target_new_contact_count(&split, id)? as f64,
            TargetKind::RecurringDuration => target_recurring_duration(&split, id)? as f64,
        };
        targets.insert(id.clone(), value);
    }
    let patterns = discover(
        &profiles,
        &targets,
        args.max_depth,
        args.min_size,
        args.top_k,
        args.direction,
    )?;
    output::write_patterns(&args.out, &patterns)?;

    let mut man = RunManifest::new("subgroups");
    man.arg("events", args.split.events.display())
        .arg("split-ts", args.split.split_ts)
        .arg("profiles", args.profiles.display())
        .arg("target", args.target.name())
        .arg("max-depth", args.max_depth)
        .arg("min-size", args.min_size)
        .arg("top-k", args.top_k)
        .arg("direction", args.direction)
        .arg("out", args.out.display());
    man.input(&args.split.events)?;
    man.input(&args.profiles)?;
    man.output(&args.out);
    man.write(&manifest_path(&args.out))?;

    println!("wrote {} ({} patterns)", args.out.display(), patterns.len());
    Ok(())
}

fn run_synth(args: &SynthArgs) -> Result<()> {
    let cfg = SynthConfig {
        participants: args.participants,
        days: args.days,
        day_length: args.day_length,
        events_per_day: args.events_per_day,
        pareto_shape: args.pareto_shape,
        pareto_minimum: args.pareto_minimum,
        seed: args.seed,
        plant: args.plant,
    };
    let (events, profiles) = generate(&cfg)?;
    write_events(&events, File::create(&args.out)?)?;
    if let Some(path) = &args.profiles_out {
        write_profiles(&profiles, File::create(path)?)?;
    }

    let mut man = RunManifest::new("synth");
    man.arg("participants", cfg.participants)
        .arg("days", cfg.days)
        .arg("day-length", cfg.day_length)
        .arg("events-per-day", cfg.events_per_day)
        .arg("pareto-shape", cfg.pareto_shape)
        .arg("pareto-minimum", cfg.pareto_minimum)
        .arg("seed", cfg.seed)
        .arg(
            "plant",
            cfg.plant.map_or("none".to_string(), |p| p.to_string()),
        )
        .arg("suggested-split-ts", cfg.cut())
        .arg("out", args.out.display());
    man.output(&args.out);
    if let Some(path) = &args.profiles_out {
        man.arg("profiles-out", path.display());
        man.output(path);
    }
    man.write(&manifest_path(&args.out))?;

    println!(
        "wrote {} events to {}; suggested --split-ts {}",
        events.len(),
        args.out.display(),
        cfg.cut()
    );
    Ok(())
}
