//! CSV and JSON-sidecar writers for the analysis subcommands.
//!
//! Every analysis emits a CSV whose header names each column, plus a JSON
//! sidecar of the same stem echoing the parameters and the methodological
//! decisions baked into the numbers. All floating-point values use Rust's
//! shortest round-trip formatting, so files are byte-stable across runs.

use std::fs::File;
use std::path::Path;

use linkprox::statistics::{
    BinLabel, ConditionedPoint, DurationBin, GraphSummary, RankFraction, RecurrenceTable,
};
use linkprox::subgroups::Pattern;
use linkprox::{Error, Result};
use serde::Serialize;

fn csv_writer(path: &Path) -> Result<csv::Writer<File>> {
    Ok(csv::Writer::from_writer(File::create(path)?))
}

fn csv_io(err: csv::Error) -> Error {
    Error::Io(std::io::Error::other(err))
}

fn write_sidecar<T: Serialize>(csv_path: &Path, sidecar: &T) -> Result<()> {
    let path = csv_path.with_extension("json");
    let mut json = serde_json::to_string_pretty(sidecar)
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    json.push('\n');
    std::fs::write(path, json)?;
    Ok(())
}

fn opt_string<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

#[derive(Serialize)]
struct SummarySidecar {
    analysis: &'static str,
    decisions: [&'static str; 3],
}

pub fn write_summary(path: &Path, summary: &GraphSummary) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record([
        "vertices",
        "edges",
        "avg_degree",
        "avg_path_length",
        "diameter",
        "largest_clique",
        "avg_contact_length",
    ])
    .map_err(csv_io)?;
    wtr.write_record([
        summary.vertex_count.to_string(),
        summary.edge_count.to_string(),
        summary.avg_degree.to_string(),
        opt_string(&summary.avg_path_length),
        opt_string(&summary.diameter),
        summary.largest_clique_number.to_string(),
        summary.avg_contact_length.to_string(),
    ])
    .map_err(csv_io)?;
    wtr.flush()?;
    write_sidecar(
        path,
        &SummarySidecar {
            analysis: "graph_summary",
            decisions: [
                "average path length and diameter cover ordered pairs within the \
                 largest connected component; both are absent when it has fewer \
                 than two vertices",
                "largest clique number comes from an exact branch-and-bound search",
                "average contact length is the mean edge weight in seconds",
            ],
        },
    )
}

#[derive(Serialize)]
struct CcdfSidecar {
    analysis: &'static str,
    decisions: [&'static str; 1],
}

pub fn write_contact_length_ccdf(path: &Path, rows: &[(u64, f64)]) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record(["seconds", "probability"]).map_err(csv_io)?;
    for (seconds, probability) in rows {
        wtr.write_record([seconds.to_string(), probability.to_string()])
            .map_err(csv_io)?;
    }
    wtr.flush()?;
    write_sidecar(
        path,
        &CcdfSidecar {
            analysis: "contact_length_ccdf",
            decisions: ["each row gives the share of edges whose total contact \
                 seconds reach the value, at every distinct weight ascending"],
        },
    )
}

#[derive(Serialize)]
struct FractionsSidecar {
    analysis: &'static str,
    top_k: usize,
    decisions: [&'static str; 2],
}

pub fn write_top_fractions(path: &Path, rows: &[RankFraction], top_k: usize) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record(["rank", "mean_fraction", "ci95_half_width"])
        .map_err(csv_io)?;
    for row in rows {
        wtr.write_record([
            row.rank.to_string(),
            row.mean.to_string(),
            row.ci95.to_string(),
        ])
        .map_err(csv_io)?;
    }
    wtr.flush()?;
    write_sidecar(
        path,
        &FractionsSidecar {
            analysis: "top_contact_fractions",
            top_k,
            decisions: [
                "participants with fewer partners than a rank contribute \
                 fraction 0 at that rank, keeping the denominator constant",
                "ci95_half_width is the normal-approximation 95% interval, \
                 1.96 * sd / sqrt(n), 0 for fewer than two participants",
            ],
        },
    )
}

#[derive(Serialize)]
struct RecurrenceBinSidecar {
    analysis: &'static str,
    split_ts: i64,
    bins: Vec<String>,
    unbinned_pairs: usize,
    decisions: [&'static str; 2],
}

pub fn write_recurrence_by_bin(
    path: &Path,
    table: &RecurrenceTable,
    bins: &[DurationBin],
    split_ts: i64,
) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record(["bin", "pairs", "no_recurrence", "probability"])
        .map_err(csv_io)?;
    for row in &table.rows {
        wtr.write_record([
            row.bin.to_string(),
            row.pairs.to_string(),
            row.no_recurrence.to_string(),
            opt_string(&row.probability),
        ])
        .map_err(csv_io)?;
    }
    wtr.flush()?;
    write_sidecar(
        path,
        &RecurrenceBinSidecar {
            analysis: "recurrence_by_bin",
            split_ts,
            bins: bins.iter().map(DurationBin::to_string).collect(),
            unbinned_pairs: table.unbinned_pairs,
            decisions: [
                "the pair universe is every unordered pair of core participants; \
                 the no-contact row counts pairs without a training edge",
                "pairs whose training weight no bin covers are excluded from the \
                 rows and reported as unbinned_pairs",
            ],
        },
    )
}

#[derive(Serialize)]
struct RecurrenceCcdfSidecar {
    analysis: &'static str,
    split_ts: i64,
    bins: Vec<String>,
    decisions: [&'static str; 1],
}

pub fn write_recurrence_duration_ccdf(
    path: &Path,
    rows: &[(BinLabel, Vec<(u64, f64)>)],
    bins: &[DurationBin],
    split_ts: i64,
) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record(["bin", "seconds", "probability"]).map_err(csv_io)?;
    for (label, ccdf) in rows {
        for (seconds, probability) in ccdf {
            wtr.write_record([
                label.to_string(),
                seconds.to_string(),
                probability.to_string(),
            ])
            .map_err(csv_io)?;
        }
    }
    wtr.flush()?;
    write_sidecar(
        path,
        &RecurrenceCcdfSidecar {
            analysis: "recurrence_duration_ccdf",
            split_ts,
            bins: bins.iter().map(DurationBin::to_string).collect(),
            decisions: ["per training-weight bin, the distribution of post-cut \
                 contact seconds over the pairs of that bin that recur at all"],
        },
    )
}

#[derive(Serialize)]
struct ConditionedSidecar {
    analysis: &'static str,
    split_ts: i64,
    strength_threshold: u64,
    cn_thresholds: Vec<u64>,
    tie_thresholds: Vec<u64>,
    decisions: [&'static str; 2],
}

#[allow(clippy::too_many_arguments)]
pub fn write_recurrence_conditioned(
    path: &Path,
    curves: &[(&'static str, &[ConditionedPoint])],
    split_ts: i64,
    strength_threshold: u64,
    cn_thresholds: &[u64],
    tie_thresholds: &[u64],
) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record([
        "condition",
        "threshold",
        "satisfying",
        "recurring",
        "probability",
    ])
    .map_err(csv_io)?;
    for (condition, points) in curves {
        for p in *points {
            wtr.write_record([
                condition.to_string(),
                p.threshold.to_string(),
                p.satisfying.to_string(),
                p.recurring.to_string(),
                opt_string(&p.probability),
            ])
            .map_err(csv_io)?;
        }
    }
    wtr.flush()?;
    write_sidecar(
        path,
        &ConditionedSidecar {
            analysis: "recurrence_conditioned",
            split_ts,
            strength_threshold,
            cn_thresholds: cn_thresholds.to_vec(),
            tie_thresholds: tie_thresholds.to_vec(),
            decisions: [
                "candidates are training edges with both endpoints in the core; \
                 a pair recurs when its post-cut seconds reach \
                 max(strength_threshold, 1)",
                "probability is absent at thresholds no candidate satisfies",
            ],
        },
    )
}

pub fn write_patterns(path: &Path, patterns: &[Pattern]) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    wtr.write_record(["rank", "lift", "mean", "size", "description"])
        .map_err(csv_io)?;
    for (i, p) in patterns.iter().enumerate() {
        wtr.write_record([
            (i + 1).to_string(),
            p.lift.to_string(),
            p.mean.to_string(),
            p.size.to_string(),
            p.description(),
        ])
        .map_err(csv_io)?;
    }
    wtr.flush()?;
    Ok(())
}
