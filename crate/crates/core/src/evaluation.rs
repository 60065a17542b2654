//! Ranking evaluation of proximity measures on a temporal split.
//!
//! Candidate pairs are drawn from the core participants of a split: pairs
//! without a training edge for the new-links task, training edges for the
//! recurring-links task. Each candidate is labeled by its post-cut contact
//! seconds: positive at or above the future threshold, excluded when it has
//! future contact below the threshold, negative without any future contact.
//! A measure is judged by the exact Mann-Whitney AUC of its ranking, with
//! tied scores credited one half.

use std::io::Write;

use crate::contact_data::{Pair, TemporalSplit};
use crate::error::{Error, Result};
use crate::predictors::{score_pairs, Measure, PredictorConfig};

/// Default post-cut threshold (seconds) for the weak-tie removal sweep.
pub const DEFAULT_WEAK_TIE_FUTURE_THRESHOLD: u64 = 900;

/// Header of the CSV emitted by [`write_auc_csv`].
pub const AUC_CSV_HEADER: [&str; 11] = [
    "measure",
    "task",
    "future_threshold",
    "removal_threshold",
    "auc",
    "positives",
    "negatives",
    "excluded",
    "alpha",
    "beta",
    "l_max",
];

/// Which kind of future contact is being predicted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task {
    /// Pairs with no training edge: will they meet after the cut?
    NewLinks,
    /// Pairs with a training edge: will they meet again after the cut?
    RecurringLinks,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::NewLinks => "new",
            Task::RecurringLinks => "recurring",
        }
    }
}

impl std::fmt::Display for Task {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "new" => Ok(Task::NewLinks),
            "recurring" => Ok(Task::RecurringLinks),
            other => Err(Error::Config(format!(
                "unknown task {other:?}, expected \"new\" or \"recurring\""
            ))),
        }
    }
}

/// Outcome class of one candidate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Positive,
    Negative,
    /// Future contact exists but stays below the threshold; the pair is
    /// left out of the AUC rather than counted against the measure.
    Excluded,
}

/// Evaluation knobs: both thresholds are in seconds, 0 disables them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvaluationConfig {
    /// Minimum post-cut contact seconds for a positive label. 0 means any
    /// future contact counts.
    pub future_threshold: u64,
    /// Training edges weaker than this are hidden from the measure while
    /// scoring. Candidates and labels always come from the unpruned split.
    pub removal_threshold: u64,
}

/// One candidate with its score and label.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredPair {
    pub pair: Pair,
    pub score: f64,
    pub label: Label,
}

/// AUC of one measure on one task, with the configuration that produced it.
///
/// `auc` is `None` when either label class was empty; the counts stay
/// visible so degenerate sweep points remain accountable.
#[derive(Debug, Clone, PartialEq)]
pub struct AucResult {
    pub measure: Measure,
    pub task: Task,
    pub future_threshold: u64,
    pub removal_threshold: u64,
    pub auc: Option<f64>,
    pub positives: usize,
    pub negatives: usize,
    pub excluded: usize,
    pub alpha: f64,
    pub beta: f64,
    pub l_max: usize,
}

/// All candidate pairs of a task, in lexicographic order.
pub fn candidates(split: &TemporalSplit, task: Task) -> Vec<Pair> {
    let core: Vec<&str> = split.core().iter().map(String::as_str).collect();
    let train = split.train();
    let mut pairs = Vec::new();
    for (i, &x) in core.iter().enumerate() {
        for &y in &core[i + 1..] {
            let connected = train
                .weight(x, y)
                .expect("core participants are training vertices")
                .is_some();
            let wanted = match task {
                Task::NewLinks => !connected,
                Task::RecurringLinks => connected,
            };
            if wanted {
                pairs.push(Pair::new(x, y).expect("core ids are distinct"));
            }
        }
    }
    pairs
}

/// Labels one candidate by its post-cut contact seconds.
pub fn label(split: &TemporalSplit, pair: &Pair, cfg: &EvaluationConfig) -> Label {
    let future = split.future_weight(pair);
    if future == 0 {
        Label::Negative
    } else if future >= cfg.future_threshold.max(1) {
        Label::Positive
    } else {
        Label::Excluded
    }
}

/// Exact Mann-Whitney AUC over the non-excluded pairs: the probability that
/// a uniformly chosen positive outranks a uniformly chosen negative, ties
/// counting one half. Errors when either class is empty.
pub fn auc(scored: &[ScoredPair]) -> Result<f64> {
    let mut ranked: Vec<(f64, bool)> = scored
        .iter()
        .filter_map(|sp| match sp.label {
            Label::Positive => Some((sp.score, true)),
            Label::Negative => Some((sp.score, false)),
            Label::Excluded => None,
        })
        .collect();
    let positives = ranked.iter().filter(|&&(_, pos)| pos).count();
    let negatives = ranked.len() - positives;
    if positives == 0 || negatives == 0 {
        return Err(Error::UndefinedAuc {
            positives,
            negatives,
            excluded: scored.len() - ranked.len(),
        });
    }

    ranked.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut rank_sum_positive = 0.0;
    let mut i = 0;
    while i < ranked.len() {
        let mut j = i;
        while j < ranked.len() && ranked[j].0 == ranked[i].0 {
            j += 1;
        }
        // Ranks are 1-based; tied scores share the average rank of the run.
        let average_rank = (i + 1 + j) as f64 / 2.0;
        let tied_positives = ranked[i..j].iter().filter(|&&(_, pos)| pos).count();
        rank_sum_positive += average_rank * tied_positives as f64;
        i = j;
    }

    let p = positives as f64;
    let u = rank_sum_positive - p * (p + 1.0) / 2.0;
    Ok(u / (p * negatives as f64))
}

/// Scores and labels every candidate of a task. Scoring sees the training
/// graph with edges below `cfg.removal_threshold` hidden; candidates and
/// labels are fixed by the unpruned split.
pub fn score_candidates(
    split: &TemporalSplit,
    measure: Measure,
    task: Task,
    cfg: &EvaluationConfig,
    pcfg: &PredictorConfig,
) -> Result<Vec<ScoredPair>> {
    let pairs = candidates(split, task);
    let scoring_graph;
    let graph = if cfg.removal_threshold > 0 {
        scoring_graph = split.train().prune_below(cfg.removal_threshold);
        &scoring_graph
    } else {
        split.train()
    };
    let scores = score_pairs(graph, &pairs, measure, pcfg)?;
    Ok(pairs
        .into_iter()
        .zip(scores)
        .map(|(pair, score)| {
            let label = label(split, &pair, cfg);
            ScoredPair { pair, score, label }
        })
        .collect())
}

/// Evaluates one measure on one task. Errors when the AUC is undefined;
/// sweeps record such points instead, see [`sweep_future_threshold`].
pub fn evaluate(
    split: &TemporalSplit,
    measure: Measure,
    task: Task,
    cfg: &EvaluationConfig,
    pcfg: &PredictorConfig,
) -> Result<AucResult> {
    let result = summarize(
        &score_candidates(split, measure, task, cfg, pcfg)?,
        measure,
        task,
        cfg,
        pcfg,
    );
    match result.auc {
        Some(_) => Ok(result),
        None => Err(Error::UndefinedAuc {
            positives: result.positives,
            negatives: result.negatives,
            excluded: result.excluded,
        }),
    }
}

fn summarize(
    scored: &[ScoredPair],
    measure: Measure,
    task: Task,
    cfg: &EvaluationConfig,
    pcfg: &PredictorConfig,
) -> AucResult {
    let count = |wanted: Label| scored.iter().filter(|sp| sp.label == wanted).count();
    AucResult {
        measure,
        task,
        future_threshold: cfg.future_threshold,
        removal_threshold: cfg.removal_threshold,
        auc: auc(scored).ok(),
        positives: count(Label::Positive),
        negatives: count(Label::Negative),
        excluded: count(Label::Excluded),
        alpha: pcfg.alpha,
        beta: pcfg.beta,
        l_max: pcfg.l_max,
    }
}

/// Evaluates one measure across several future thresholds. Scores are
/// computed once; only the labels move with the threshold. Points with an
/// empty label class carry `auc: None` instead of failing the sweep.
pub fn sweep_future_threshold(
    split: &TemporalSplit,
    measure: Measure,
    task: Task,
    thresholds: &[u64],
    pcfg: &PredictorConfig,
) -> Result<Vec<AucResult>> {
    let base_cfg = EvaluationConfig::default();
    let scored = score_candidates(split, measure, task, &base_cfg, pcfg)?;
    Ok(thresholds
        .iter()
        .map(|&future_threshold| {
            let cfg = EvaluationConfig {
                future_threshold,
                removal_threshold: 0,
            };
            let relabeled: Vec<ScoredPair> = scored
                .iter()
                .map(|sp| ScoredPair {
                    pair: sp.pair.clone(),
                    score: sp.score,
                    label: label(split, &sp.pair, &cfg),
                })
                .collect();
            summarize(&relabeled, measure, task, &cfg, pcfg)
        })
        .collect())
}

/// Evaluates one measure while progressively hiding weak training ties from
/// the scoring graph. The candidate set and the labels, fixed by
/// `future_threshold`, stay the same at every point; only the scores react
/// to the pruning.
pub fn weak_tie_removal_sweep(
    split: &TemporalSplit,
    measure: Measure,
    task: Task,
    removal_thresholds: &[u64],
    future_threshold: u64,
    pcfg: &PredictorConfig,
) -> Result<Vec<AucResult>> {
    let mut points = Vec::with_capacity(removal_thresholds.len());
    for &removal_threshold in removal_thresholds {
        let cfg = EvaluationConfig {
            future_threshold,
            removal_threshold,
        };
        let scored = score_candidates(split, measure, task, &cfg, pcfg)?;
        points.push(summarize(&scored, measure, task, &cfg, pcfg));
    }
    Ok(points)
}

/// Writes results as CSV with header [`AUC_CSV_HEADER`], one row per
/// result; an undefined AUC becomes an empty field.
pub fn write_auc_csv<W: Write>(results: &[AucResult], writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(AUC_CSV_HEADER)
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    for r in results {
        wtr.write_record([
            r.measure.name().to_string(),
            r.task.name().to_string(),
            r.future_threshold.to_string(),
            r.removal_threshold.to_string(),
            r.auc.map_or(String::new(), |a| a.to_string()),
            r.positives.to_string(),
            r.negatives.to_string(),
            r.excluded.to_string(),
            r.alpha.to_string(),
            r.beta.to_string(),
            r.l_max.to_string(),
        ])
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    wtr.flush()?;
    Ok(())
}
