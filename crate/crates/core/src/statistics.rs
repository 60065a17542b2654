//! Descriptive statistics of contact graphs and recurrence behavior across
//! a temporal split.
//!
//! Covers whole-graph summaries (degrees, path lengths, clique number, mean
//! contact length), the complementary cumulative distribution of contact
//! lengths, how strongly each participant's contact time concentrates on
//! their top partners, and how contact recurrence after the cut depends on
//! the strength of the tie before it.

use std::collections::BTreeSet;
use std::fmt;

use crate::contact_data::{ContactGraph, TemporalSplit};
use crate::evaluation::{candidates, Task};
use crate::predictors::shared_neighbor_count;

/// Whole-graph descriptive summary.
///
/// Path statistics are taken over ordered vertex pairs of the largest
/// connected component and are absent when that component has fewer than
/// two vertices. The clique number is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// `2 * edge_count / vertex_count`, 0 for the empty graph.
    pub avg_degree: f64,
    pub avg_path_length: Option<f64>,
    pub diameter: Option<usize>,
    pub largest_clique_number: usize,
    /// Mean edge weight in seconds, 0 without edges.
    pub avg_contact_length: f64,
}

/// Half-open duration range `[lower, upper)` in seconds; `upper: None`
/// leaves the range open-ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DurationBin {
    pub lower: u64,
    pub upper: Option<u64>,
}

impl DurationBin {
    pub fn new(lower: u64, upper: u64) -> Self {
        Self {
            lower,
            upper: Some(upper),
        }
    }

    pub fn open(lower: u64) -> Self {
        Self { lower, upper: None }
    }

    pub fn contains(&self, seconds: u64) -> bool {
        seconds >= self.lower && self.upper.is_none_or(|u| seconds < u)
    }

    /// The default analysis bins: `[20,60), [60,120), [120,240), [240,480),
    /// [480,960), [960,inf)`.
    pub fn default_bins() -> Vec<DurationBin> {
        vec![
            DurationBin::new(20, 60),
            DurationBin::new(60, 120),
            DurationBin::new(120, 240),
            DurationBin::new(240, 480),
            DurationBin::new(480, 960),
            DurationBin::open(960),
        ]
    }
}

impl fmt::Display for DurationBin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "[{},{})", self.lower, u),
            None => write!(f, "[{},inf)", self.lower),
        }
    }
}

/// Row label of the recurrence tables: either the pairs without any
/// training contact, or a training-weight range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinLabel {
    NoContact,
    Range(DurationBin),
}

impl fmt::Display for BinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinLabel::NoContact => f.write_str("no-contact"),
            BinLabel::Range(bin) => bin.fmt(f),
        }
    }
}

/// Recurrence behavior of the core pairs falling into one bin.
#[derive(Debug, Clone, PartialEq)]
pub struct BinRecurrence {
    pub bin: BinLabel,
    /// Core pairs whose training weight falls into the bin.
    pub pairs: usize,
    /// Those without any post-cut contact.
    pub no_recurrence: usize,
    /// `no_recurrence / pairs`, absent for an empty bin.
    pub probability: Option<f64>,
}

/// Per-bin recurrence counts over every unordered core pair.
///
/// The no-contact row always comes first, followed by one row per given
/// bin. Pairs with a training edge that no bin covers are counted in
/// `unbinned_pairs`; with bins covering all positive weights the row counts
/// sum to the total number of core pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceTable {
    pub rows: Vec<BinRecurrence>,
    pub unbinned_pairs: usize,
}

/// Mean share of a participant's contact seconds spent on their rank-th
/// strongest partner, with a normal-approximation 95% confidence interval.
#[derive(Debug, Clone, PartialEq)]
pub struct RankFraction {
    /// 1-based rank of the partner by contact seconds.
    pub rank: usize,
    pub mean: f64,
    pub ci95: f64,
}

/// What the recurrence probability is conditioned on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Number of shared training neighbors at or above the threshold.
    CommonNeighbors,
    /// Training contact seconds at or above the threshold.
    TieStrength,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::CommonNeighbors => "common-neighbors",
            Condition::TieStrength => "tie-strength",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Condition {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "common-neighbors" => Ok(Condition::CommonNeighbors),
            "tie-strength" => Ok(Condition::TieStrength),
            other => Err(crate::error::Error::Config(format!(
                "unknown condition {other:?}, expected \"common-neighbors\" or \"tie-strength\""
            ))),
        }
    }
}

/// Recurrence probability among the training edges meeting one condition
/// threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionedPoint {
    pub threshold: u64,
    /// Training edges within core meeting the condition.
    pub satisfying: usize,
    /// Those that recur with at least the required future seconds.
    pub recurring: usize,
    /// `recurring / satisfying`, absent when nothing satisfies.
    pub probability: Option<f64>,
}

/// Computes the whole-graph summary.
pub fn graph_summary(g: &ContactGraph) -> GraphSummary {
    let n = g.vertex_count();
    let e = g.edge_count();
    let avg_degree = if n == 0 { 0.0 } else { 2.0 * e as f64 / n as f64 };

    let (avg_path_length, diameter) = largest_component_paths(g);
    let largest_clique_number = largest_clique(g);

    let avg_contact_length = if e == 0 {
        0.0
    } else {
        g.edges().map(|(_, _, w)| w).sum::<u64>() as f64 / e as f64
    };

    GraphSummary {
        vertex_count: n,
        edge_count: e,
        avg_degree,
        avg_path_length,
        diameter,
        largest_clique_number,
        avg_contact_length,
    }
}

/// BFS distances within the largest connected component (largest by size,
/// earliest vertex on ties), averaged over its ordered vertex pairs.
fn largest_component_paths(g: &ContactGraph) -> (Option<f64>, Option<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (None, None);
    }

    let mut component = vec![usize::MAX; n];
    let mut members_of_largest: Vec<usize> = Vec::new();
    let mut next_component = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        component[start] = next_component;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in g.neighbors_at(u) {
                if component[v] == usize::MAX {
                    component[v] = next_component;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        if members.len() > members_of_largest.len() {
            members_of_largest = members;
        }
        next_component += 1;
    }

    if members_of_largest.len() < 2 {
        return (None, None);
    }

    let mut distance_sum: u64 = 0;
    let mut eccentricity_max: usize = 0;
    for &start in &members_of_largest {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in g.neighbors_at(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for &other in &members_of_largest {
            if other != start {
                distance_sum += dist[other] as u64;
                eccentricity_max = eccentricity_max.max(dist[other]);
            }
        }
    }

    let ordered_pairs = members_of_largest.len() * (members_of_largest.len() - 1);
    (
        Some(distance_sum as f64 / ordered_pairs as f64),
        Some(eccentricity_max),
    )
}

/// Exact clique number via branch-and-bound search with pivoting.
fn largest_clique(g: &ContactGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let adjacency: Vec<BTreeSet<usize>> = (0..n)
        .map(|u| g.neighbors_at(u).iter().map(|&(v, _)| v).collect())
        .collect();
    let mut best = 0;
    let p: BTreeSet<usize> = (0..n).collect();
    let x = BTreeSet::new();
    expand_cliques(&adjacency, 0, p, x, &mut best);
    best
}

fn expand_cliques(
    adjacency: &[BTreeSet<usize>],
    clique_len: usize,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    best: &mut usize,
) {
    if p.is_empty() && x.is_empty() {
        *best = (*best).max(clique_len);
        return;
    }
    if clique_len + p.len() <= *best {
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| adjacency[u].intersection(&p).count())
        .expect("p or x is non-empty");
    let branches: Vec<usize> = p.difference(&adjacency[pivot]).copied().collect();
    for v in branches {
        let np: BTreeSet<usize> = p.intersection(&adjacency[v]).copied().collect();
        let nx: BTreeSet<usize> = x.intersection(&adjacency[v]).copied().collect();
        expand_cliques(adjacency, clique_len + 1, np, nx, best);
        p.remove(&v);
        x.insert(v);
    }
}

/// Complementary cumulative distribution of edge weights: for each distinct
/// weight `s` ascending, the share of edges with weight at least `s`.
pub fn contact_length_ccdf(g: &ContactGraph) -> Vec<(u64, f64)> {
    let mut weights: Vec<u64> = g.edges().map(|(_, _, w)| w).collect();
    weights.sort_unstable();
    let total = weights.len() as f64;
    let mut out = Vec::new();
    let mut i = 0;
    while i < weights.len() {
        let s = weights[i];
        out.push((s, (weights.len() - i) as f64 / total));
        while i < weights.len() && weights[i] == s {
            i += 1;
        }
    }
    out
}

/// For ranks 1 to `k`: the mean share of a participant's total contact
/// seconds spent on their rank-th strongest partner, averaged over all
/// participants with at least one edge. Participants with fewer than `rank`
/// partners contribute a zero share at that rank.
pub fn top_k_contact_fractions(g: &ContactGraph, k: usize) -> Vec<RankFraction> {
    let mut per_rank: Vec<Vec<f64>> = vec![Vec::new(); k];
    for id in g.vertices() {
        let neighbors = g.neighbors_at(g.idx(id).expect("iterating own vertices"));
        if neighbors.is_empty() {
            continue;
        }
        let mut weights: Vec<u64> = neighbors.iter().map(|&(_, w)| w).collect();
        weights.sort_unstable_by(|a, b| b.cmp(a));
        let strength: u64 = weights.iter().sum();
        for rank in 0..k {
            let share = weights
                .get(rank)
                .map_or(0.0, |&w| w as f64 / strength as f64);
            per_rank[rank].push(share);
        }
    }

    per_rank
        .into_iter()
        .enumerate()
        .map(|(i, shares)| {
            let n = shares.len();
            let mean = if n == 0 {
                0.0
            } else {
                shares.iter().sum::<f64>() / n as f64
            };
            let ci95 = if n < 2 {
                0.0
            } else {
                let variance = shares.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>()
                    / (n - 1) as f64;
                1.96 * variance.sqrt() / (n as f64).sqrt()
            };
            RankFraction {
                rank: i + 1,
                mean,
                ci95,
            }
        })
        .collect()
}

/// Iterates every unordered core pair with its training weight (`None`
/// without a training edge) and post-cut weight.
fn core_pair_weights<'a>(
    split: &'a TemporalSplit,
) -> impl Iterator<Item = (Option<u64>, u64)> + 'a {
    let core: Vec<&'a str> = split.core().iter().map(String::as_str).collect();
    let train = split.train();
    (0..core.len()).flat_map(move |i| {
        let core = core.clone();
        (i + 1..core.len()).map(move |j| {
            let (x, y) = (core[i], core[j]);
            let trained = train
                .weight(x, y)
                .expect("core participants are training vertices");
            let pair = crate::contact_data::Pair::new(x, y).expect("core ids are distinct");
            (trained, split.future_weight(&pair))
        })
    })
}

/// Probability that a core pair has no post-cut contact, by training-weight
/// bin. See [`RecurrenceTable`] for the accounting rules.
pub fn recurrence_by_bin(split: &TemporalSplit, bins: &[DurationBin]) -> RecurrenceTable {
    let mut pairs = vec![0usize; bins.len() + 1];
    let mut silent = vec![0usize; bins.len() + 1];
    let mut unbinned_pairs = 0;

    for (trained, future) in core_pair_weights(split) {
        let row = match trained {
            None => Some(0),
            Some(w) => match bins.iter().position(|bin| bin.contains(w)) {
                Some(b) => Some(b + 1),
                None => {
                    unbinned_pairs += 1;
                    None
                }
            },
        };
        if let Some(row) = row {
            pairs[row] += 1;
            if future == 0 {
                silent[row] += 1;
            }
        }
    }

    let rows = (0..=bins.len())
        .map(|row| {
            let bin = if row == 0 {
                BinLabel::NoContact
            } else {
                BinLabel::Range(bins[row - 1])
            };
            BinRecurrence {
                bin,
                pairs: pairs[row],
                no_recurrence: silent[row],
                probability: (pairs[row] > 0)
                    .then(|| silent[row] as f64 / pairs[row] as f64),
            }
        })
        .collect();

    RecurrenceTable {
        rows,
        unbinned_pairs,
    }
}

/// Per training-weight bin, the complementary cumulative distribution of
/// post-cut contact seconds over the pairs of that bin that do recur. The
/// no-contact row describes the future contacts of pairs that never met
/// before the cut.
pub fn recurrence_duration_ccdf(
    split: &TemporalSplit,
    bins: &[DurationBin],
) -> Vec<(BinLabel, Vec<(u64, f64)>)> {
    let mut futures: Vec<Vec<u64>> = vec![Vec::new(); bins.len() + 1];
    for (trained, future) in core_pair_weights(split) {
        if future == 0 {
            continue;
        }
        let row = match trained {
            None => Some(0),
            Some(w) => bins.iter().position(|bin| bin.contains(w)).map(|b| b + 1),
        };
        if let Some(row) = row {
            futures[row].push(future);
        }
    }

    futures
        .into_iter()
        .enumerate()
        .map(|(row, mut weights)| {
            let bin = if row == 0 {
                BinLabel::NoContact
            } else {
                BinLabel::Range(bins[row - 1])
            };
            weights.sort_unstable();
            let total = weights.len() as f64;
            let mut ccdf = Vec::new();
            let mut i = 0;
            while i < weights.len() {
                let s = weights[i];
                ccdf.push((s, (weights.len() - i) as f64 / total));
                while i < weights.len() && weights[i] == s {
                    i += 1;
                }
            }
            (bin, ccdf)
        })
        .collect()
}

/// Probability that a training edge within core recurs with at least
/// `strength_threshold` post-cut seconds (at least one second when the
/// threshold is 0), conditioned on the edge meeting each condition
/// threshold in turn.
pub fn recurrence_prob_conditioned(
    split: &TemporalSplit,
    condition: Condition,
    strength_threshold: u64,
    thresholds: &[u64],
) -> Vec<ConditionedPoint> {
    let train = split.train();
    let edges: Vec<(u64, bool)> = candidates(split, Task::RecurringLinks)
        .into_iter()
        .map(|pair| {
            let value = match condition {
                Condition::CommonNeighbors => {
                    let xi = train.idx(pair.first()).expect("candidate endpoints exist");
                    let yi = train.idx(pair.second()).expect("candidate endpoints exist");
                    shared_neighbor_count(train, xi, yi) as u64
                }
                Condition::TieStrength => train
                    .weight(pair.first(), pair.second())
                    .expect("candidate endpoints exist")
                    .expect("recurring candidates have a training edge"),
            };
            let recurs = split.future_weight(&pair) >= strength_threshold.max(1);
            (value, recurs)
        })
        .collect();

    thresholds
        .iter()
        .map(|&threshold| {
            let satisfying = edges.iter().filter(|&&(v, _)| v >= threshold).count();
            let recurring = edges
                .iter()
                .filter(|&&(v, recurs)| v >= threshold && recurs)
                .count();
            ConditionedPoint {
                threshold,
                satisfying,
                recurring,
                probability: (satisfying > 0).then(|| recurring as f64 / satisfying as f64),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact_data::{ContactEvent, ContactGraph, TemporalSplit};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn ev(start: i64, end: i64, a: &str, b: &str) -> ContactEvent {
        ContactEvent::new(start, end, a, b).unwrap()
    }

    #[test]
    fn triangle_summary_matches_hand_values() {
        let g = ContactGraph::from_weighted_edges([
            ("p1", "p2", 1),
            ("p2", "p3", 1),
            ("p1", "p3", 1),
        ])
        .unwrap();
        let s = graph_summary(&g);
        assert_eq!(s.vertex_count, 3);
        assert_eq!(s.edge_count, 3);
        assert_eq!(s.avg_degree, 2.0);
        assert_eq!(s.avg_path_length, Some(1.0));
        assert_eq!(s.diameter, Some(1));
        assert_eq!(s.largest_clique_number, 3);
        assert_eq!(s.avg_contact_length, 1.0);
    }

    #[test]
    fn four_path_summary_matches_hand_values() {
        let g = ContactGraph::from_weighted_edges([
            ("p1", "p2", 10),
            ("p2", "p3", 20),
            ("p3", "p4", 30),
        ])
        .unwrap();
        let s = graph_summary(&g);
        assert_eq!(s.diameter, Some(3));
        assert!((s.avg_path_length.unwrap() - 5.0 / 3.0).abs() < 1e-12);
        assert_eq!(s.largest_clique_number, 2);
        assert_eq!(s.avg_contact_length, 20.0);
    }

    #[test]
    fn empty_and_edgeless_graphs_summarize_gracefully() {
        let s = graph_summary(&ContactGraph::empty());
        assert_eq!(s.vertex_count, 0);
        assert_eq!(s.avg_degree, 0.0);
        assert_eq!(s.avg_path_length, None);
        assert_eq!(s.diameter, None);
        assert_eq!(s.largest_clique_number, 0);
        assert_eq!(s.avg_contact_length, 0.0);

        let lonely = ContactGraph::from_weighted_edges([("p1", "p2", 9)])
            .unwrap()
            .prune_below(100);
        let s = graph_summary(&lonely);
        assert_eq!(s.vertex_count, 2);
        assert_eq!(s.edge_count, 0);
        assert_eq!(s.avg_path_length, None);
        assert_eq!(s.diameter, None);
        assert_eq!(s.largest_clique_number, 1, "a vertex is a clique of one");
    }

    #[test]
    fn path_stats_use_largest_component_cliques_use_whole_graph() {
        // Larger component: a 4-path. Smaller component: a triangle.
        let g = ContactGraph::from_weighted_edges([
            ("a1", "a2", 1),
            ("a2", "a3", 1),
            ("a3", "a4", 1),
            ("b1", "b2", 1),
            ("b2", "b3", 1),
            ("b1", "b3", 1),
        ])
        .unwrap();
        let s = graph_summary(&g);
        assert_eq!(s.diameter, Some(3), "triangle would say 1");
        assert!((s.avg_path_length.unwrap() - 5.0 / 3.0).abs() < 1e-12);
        assert_eq!(s.largest_clique_number, 3, "clique lives off the largest component");
    }

    /// Exhaustive clique check over every vertex subset.
    fn clique_number_by_enumeration(g: &ContactGraph) -> usize {
        let ids: Vec<&str> = g.vertices().collect();
        let n = ids.len();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if members.len() <= best {
                continue;
            }
            let is_clique = members.iter().enumerate().all(|(k, &i)| {
                members[k + 1..]
                    .iter()
                    .all(|&j| g.weight(ids[i], ids[j]).unwrap().is_some())
            });
            if is_clique {
                best = members.len();
            }
        }
        best
    }

    #[test]
    fn clique_number_matches_exhaustive_enumeration() {
        let mut rng = StdRng::seed_from_u64(431);
        for round in 0..5 {
            let n = 12;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.random_bool(0.4) {
                        edges.push((format!("v{i:02}"), format!("v{j:02}"), 1));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let g = ContactGraph::from_weighted_edges(edges).unwrap();
            assert_eq!(
                graph_summary(&g).largest_clique_number,
                clique_number_by_enumeration(&g),
                "round {round}"
            );
        }
    }

    #[test]
    fn ccdf_matches_hand_computation() {
        let g = ContactGraph::from_weighted_edges([
            ("p1", "p2", 10),
            ("p2", "p3", 10),
            ("p3", "p4", 40),
        ])
        .unwrap();
        assert_eq!(contact_length_ccdf(&g), vec![(10, 1.0), (40, 1.0 / 3.0)]);

        let single = ContactGraph::from_weighted_edges([("p1", "p2", 77)]).unwrap();
        assert_eq!(contact_length_ccdf(&single), vec![(77, 1.0)]);
        assert!(contact_length_ccdf(&ContactGraph::empty()).is_empty());
    }

    #[test]
    fn ccdf_is_non_increasing_and_starts_at_one() {
        let mut rng = StdRng::seed_from_u64(432);
        let edges: Vec<(String, String, u64)> = (0..40)
            .map(|i| {
                (
                    format!("a{i}"),
                    format!("b{i}"),
                    rng.random_range(1..500u64),
                )
            })
            .collect();
        let g = ContactGraph::from_weighted_edges(edges).unwrap();
        let ccdf = contact_length_ccdf(&g);
        assert_eq!(ccdf[0].1, 1.0, "smallest weight covers every edge");
        for pair in ccdf.windows(2) {
            assert!(pair[0].0 < pair[1].0, "weights ascend");
            assert!(pair[0].1 >= pair[1].1, "shares never increase");
        }
    }

    #[test]
    fn contact_fractions_match_hand_computation() {
        let g = ContactGraph::from_weighted_edges([("a", "b", 3), ("a", "c", 1)]).unwrap();
        let fractions = top_k_contact_fractions(&g, 3);
        assert_eq!(fractions.len(), 3);
        // a splits 3/4 and 1/4; b and c give their whole time to a.
        assert!((fractions[0].mean - (0.75 + 1.0 + 1.0) / 3.0).abs() < 1e-12);
        assert!((fractions[1].mean - 0.25 / 3.0).abs() < 1e-12);
        assert_eq!(fractions[2].mean, 0.0);
        assert!(fractions[0].ci95 > 0.0);
        assert_eq!(fractions[2].ci95, 0.0);
    }

    #[test]
    fn contact_fractions_sum_to_one_over_max_degree_ranks() {
        let mut rng = StdRng::seed_from_u64(433);
        let mut edges = Vec::new();
        for i in 0..10 {
            for j in (i + 1)..10 {
                if rng.random_bool(0.5) {
                    edges.push((format!("p{i}"), format!("p{j}"), rng.random_range(1..900)));
                }
            }
        }
        let g = ContactGraph::from_weighted_edges(edges).unwrap();
        let max_degree = g
            .vertices()
            .map(|v| g.degree(v).unwrap())
            .max()
            .unwrap_or(0);
        let fractions = top_k_contact_fractions(&g, max_degree);
        let total: f64 = fractions.iter().map(|f| f.mean).sum();
        assert!(
            (total - 1.0).abs() < 1e-9,
            "per-participant shares sum to 1, so their means do too: {total}"
        );
    }

    #[test]
    fn single_edge_gives_full_first_rank_share() {
        let g = ContactGraph::from_weighted_edges([("p1", "p2", 50)]).unwrap();
        let fractions = top_k_contact_fractions(&g, 2);
        assert_eq!(fractions[0].mean, 1.0);
        assert_eq!(fractions[0].ci95, 0.0, "no spread across two participants");
        assert_eq!(fractions[1].mean, 0.0);
        assert!(top_k_contact_fractions(&ContactGraph::empty(), 3)
            .iter()
            .all(|f| f.mean == 0.0 && f.ci95 == 0.0));
    }

    /// Split with four core participants, training weights 30 and 100, and
    /// one never-met core pair that does meet afterwards.
    fn small_recurrence_split() -> TemporalSplit {
        let events = [
            ev(0, 30, "p1", "p2"),
            ev(0, 100, "p3", "p4"),
            ev(0, 40, "p2", "p3"),
            ev(1000, 1200, "p1", "p2"),
            ev(1000, 1100, "p1", "p3"),
            ev(1000, 1040, "p4", "p1"),
        ];
        TemporalSplit::at(&events, 500)
    }

    #[test]
    fn recurrence_table_counts_match_hand_computation() {
        let split = small_recurrence_split();
        let bins = [DurationBin::new(20, 60), DurationBin::open(60)];
        let table = recurrence_by_bin(&split, &bins);
        assert_eq!(table.unbinned_pairs, 0);

        // Core pairs: 6 total; training edges (p1,p2)=30, (p2,p3)=40,
        // (p3,p4)=100; no-contact pairs (p1,p3), (p1,p4), (p2,p4).
        let total: usize = table.rows.iter().map(|r| r.pairs).sum();
        assert_eq!(total, 6);

        let no_contact = &table.rows[0];
        assert_eq!(no_contact.bin, BinLabel::NoContact);
        assert_eq!(no_contact.pairs, 3);
        assert_eq!(no_contact.no_recurrence, 1, "only (p2,p4) stays silent");
        assert!((no_contact.probability.unwrap() - 1.0 / 3.0).abs() < 1e-12);

        let low = &table.rows[1];
        assert_eq!(low.pairs, 2);
        assert_eq!(low.no_recurrence, 1, "(p2,p3) does not recur");
        assert_eq!(low.probability, Some(0.5));

        let high = &table.rows[2];
        assert_eq!(high.pairs, 1);
        assert_eq!(high.no_recurrence, 1, "(p3,p4) does not recur");
        assert_eq!(high.probability, Some(1.0));
    }

    #[test]
    fn uncovered_weights_are_counted_not_dropped_silently() {
        let split = small_recurrence_split();
        // First bin starts at 40: the weight-30 edge is uncovered.
        let bins = [DurationBin::new(40, 200)];
        let table = recurrence_by_bin(&split, &bins);
        assert_eq!(table.unbinned_pairs, 1);
        let counted: usize = table.rows.iter().map(|r| r.pairs).sum();
        assert_eq!(counted + table.unbinned_pairs, 6);
    }

    #[test]
    fn empty_bins_have_no_probability() {
        let split = small_recurrence_split();
        let bins = [DurationBin::new(20, 200), DurationBin::new(5000, 6000)];
        let table = recurrence_by_bin(&split, &bins);
        assert_eq!(table.rows[2].pairs, 0);
        assert_eq!(table.rows[2].probability, None);
    }

    #[test]
    fn future_ccdf_rows_follow_training_bins() {
        let split = small_recurrence_split();
        let bins = [DurationBin::new(20, 60), DurationBin::open(60)];
        let rows = recurrence_duration_ccdf(&split, &bins);
        assert_eq!(rows.len(), 3);

        // New contacts: (p1,p3) 100 s and (p1,p4) 40 s.
        assert_eq!(rows[0].0, BinLabel::NoContact);
        assert_eq!(rows[0].1, vec![(40, 1.0), (100, 0.5)]);

        // Bin [20,60): only (p1,p2) recurs, for 200 s.
        assert_eq!(rows[1].1, vec![(200, 1.0)]);

        // Bin [60,inf): (p3,p4) never recurs.
        assert!(rows[2].1.is_empty());
    }

    #[test]
    fn higher_training_bins_dominate_when_future_equals_past() {
        // Future weight mirrors training weight exactly, so pairs in a
        // higher training bin always recur longer.
        let mut train_edges = Vec::new();
        let mut test_edges = Vec::new();
        let mut core = BTreeSet::new();
        let weights = [25u64, 30, 45, 70, 90, 130, 200, 400];
        for (k, &w) in weights.iter().enumerate() {
            let (a, b) = (format!("u{k}"), format!("v{k}"));
            train_edges.push((a.clone(), b.clone(), w));
            test_edges.push((a.clone(), b.clone(), w));
            core.insert(a);
            core.insert(b);
        }
        let split = TemporalSplit::from_parts(
            ContactGraph::from_weighted_edges(train_edges).unwrap(),
            ContactGraph::from_weighted_edges(test_edges).unwrap(),
            core,
            0,
        )
        .unwrap();

        let bins = [
            DurationBin::new(20, 60),
            DurationBin::new(60, 120),
            DurationBin::open(120),
        ];
        let rows = recurrence_duration_ccdf(&split, &bins);
        let ccdf_at = |row: &Vec<(u64, f64)>, s: u64| {
            row.iter()
                .filter(|&&(w, _)| w >= s)
                .map(|&(_, p)| p)
                .next_back()
                .map_or(0.0, |_| {
                    row.iter().find(|&&(w, _)| w >= s).map(|&(_, p)| p).unwrap()
                })
        };
        for s in [0, 25, 50, 100, 150, 500] {
            let low = ccdf_at(&rows[1].1, s);
            let mid = ccdf_at(&rows[2].1, s);
            let high = ccdf_at(&rows[3].1, s);
            assert!(mid >= low, "at {s}: mid {mid} < low {low}");
            assert!(high >= mid, "at {s}: high {high} < mid {mid}");
        }
    }

    #[test]
    fn conditioning_on_nothing_gives_the_plain_recurrence_rate() {
        let split = small_recurrence_split();
        let points = recurrence_prob_conditioned(&split, Condition::TieStrength, 0, &[0]);
        // Recurring universe: 3 training edges, only (p1,p2) recurs.
        assert_eq!(points[0].satisfying, 3);
        assert_eq!(points[0].recurring, 1);
        assert!((points[0].probability.unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn recurrence_steps_to_one_when_shared_neighbors_decide_it() {
        // Every edge of the 4-clique has exactly two shared neighbors and
        // recurs; the triangle edges have one and stay silent, as does the
        // isolated pair (c, d). Post-cut contacts with clique members keep
        // the silent participants core without adding training edges.
        let quad = ["a", "b", "h1", "h2"];
        let mut events = Vec::new();
        for (i, &x) in quad.iter().enumerate() {
            for &y in &quad[i + 1..] {
                events.push(ev(0, 50, x, y));
                events.push(ev(1000, 1100, x, y));
            }
        }
        for (x, y) in [("e", "f"), ("e", "g"), ("f", "g"), ("c", "d")] {
            events.push(ev(0, 50, x, y));
        }
        for (x, y) in [("e", "a"), ("f", "b"), ("g", "h1"), ("c", "h2"), ("d", "a")] {
            events.push(ev(1000, 1020, x, y));
        }
        let split = TemporalSplit::at(&events, 500);
        let points = recurrence_prob_conditioned(
            &split,
            Condition::CommonNeighbors,
            0,
            &[0, 1, 2, 3],
        );

        // Brute-force check of each point against a direct scan.
        let train = split.train();
        let recurring = candidates(&split, Task::RecurringLinks);
        for point in &points {
            let mut satisfying = 0;
            let mut recur = 0;
            for pair in &recurring {
                let shared: BTreeSet<&str> = train
                    .neighbors(pair.first())
                    .unwrap()
                    .collect::<BTreeSet<_>>()
                    .intersection(&train.neighbors(pair.second()).unwrap().collect())
                    .copied()
                    .collect();
                if shared.len() as u64 >= point.threshold {
                    satisfying += 1;
                    if split.future_weight(pair) > 0 {
                        recur += 1;
                    }
                }
            }
            assert_eq!(point.satisfying, satisfying, "threshold {}", point.threshold);
            assert_eq!(point.recurring, recur, "threshold {}", point.threshold);
        }

        assert_eq!(points[0].probability, Some(0.6), "6 of 10 edges recur");
        assert_eq!(points[1].probability, Some(6.0 / 9.0), "(c, d) drops out");
        assert_eq!(points[2].probability, Some(1.0), "clique edges all recur");
        assert_eq!(points[3].satisfying, 0);
        assert_eq!(points[3].probability, None);
    }
}
