//! Proximity measures that rank participant pairs by likelihood of future
//! contact.
//!
//! Ten neighborhood measures come in unweighted/weighted pairs (common
//! neighbors, Adamic-Adar, Jaccard, resource allocation, preferential
//! attachment), joined by rooted PageRank and truncated Katz in unweighted
//! and weighted variants, plus the current tie strength itself. All
//! logarithms are natural. Every measure is symmetric in its two arguments
//! and non-negative.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::contact_data::{ContactGraph, Pair};
use crate::error::{Error, Result};

/// The proximity measures, in canonical declaration order.
///
/// The short names used on the command line are, in the same order:
/// `cn, aa, jc, ra, pa, wcn, waa, wjc, wra, wpa, rpr, wrpr, katz, wkatz, len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    /// Number of shared neighbors.
    CommonNeighbors,
    /// Shared neighbors discounted by the log of their degree.
    AdamicAdar,
    /// Shared neighbors over the union of both neighborhoods.
    Jaccard,
    /// Shared neighbors discounted by their degree.
    ResourceAllocation,
    /// Product of the two degrees.
    PreferentialAttachment,
    /// Sum of contact seconds to shared neighbors.
    WeightedCommonNeighbors,
    /// Contact seconds to shared neighbors discounted by the log of the
    /// neighbor's total contact seconds.
    WeightedAdamicAdar,
    /// Contact seconds to shared neighbors over the endpoints' total
    /// contact seconds.
    WeightedJaccard,
    /// Contact seconds to shared neighbors discounted by the neighbor's
    /// total contact seconds.
    WeightedResourceAllocation,
    /// Product of the endpoints' total contact seconds.
    WeightedPreferentialAttachment,
    /// Stationary visit probability of a restarting random walk, summed
    /// over both directions.
    RootedPageRank,
    /// Rooted PageRank with weight-proportional transitions.
    WeightedRootedPageRank,
    /// Damped count of walks of bounded length between the endpoints.
    Katz,
    /// Katz over weights normalized by the largest edge weight.
    WeightedKatz,
    /// Current contact seconds between the endpoints, 0 without an edge.
    TieStrength,
}

impl Measure {
    /// Every measure, in declaration order.
    pub const ALL: [Measure; 15] = [
        Measure::CommonNeighbors,
        Measure::AdamicAdar,
        Measure::Jaccard,
        Measure::ResourceAllocation,
        Measure::PreferentialAttachment,
        Measure::WeightedCommonNeighbors,
        Measure::WeightedAdamicAdar,
        Measure::WeightedJaccard,
        Measure::WeightedResourceAllocation,
        Measure::WeightedPreferentialAttachment,
        Measure::RootedPageRank,
        Measure::WeightedRootedPageRank,
        Measure::Katz,
        Measure::WeightedKatz,
        Measure::TieStrength,
    ];

    /// Canonical short name, as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Measure::CommonNeighbors => "cn",
            Measure::AdamicAdar => "aa",
            Measure::Jaccard => "jc",
            Measure::ResourceAllocation => "ra",
            Measure::PreferentialAttachment => "pa",
            Measure::WeightedCommonNeighbors => "wcn",
            Measure::WeightedAdamicAdar => "waa",
            Measure::WeightedJaccard => "wjc",
            Measure::WeightedResourceAllocation => "wra",
            Measure::WeightedPreferentialAttachment => "wpa",
            Measure::RootedPageRank => "rpr",
            Measure::WeightedRootedPageRank => "wrpr",
            Measure::Katz => "katz",
            Measure::WeightedKatz => "wkatz",
            Measure::TieStrength => "len",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown measure {s:?}")))
    }
}

/// Tuning knobs for the walk-based measures.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictorConfig {
    /// Restart probability of the rooted random walk, in (0, 1).
    pub alpha: f64,
    /// Damping factor per walk step for Katz, in (0, 1).
    pub beta: f64,
    /// Longest walk counted by Katz, at least 1.
    pub l_max: usize,
    /// L1 convergence threshold for the rooted PageRank power iteration.
    pub rpr_tolerance: f64,
    /// Iteration cap for the power iteration before giving up.
    pub rpr_max_iterations: usize,
}

impl Default for PredictorConfig {
    fn default() -> Self {
        Self {
            alpha: 0.15,
            beta: 0.005,
            l_max: 6,
            rpr_tolerance: 1e-10,
            rpr_max_iterations: 10_000,
        }
    }
}

impl PredictorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Config(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return Err(Error::Config(format!(
                "beta must lie in (0, 1), got {}",
                self.beta
            )));
        }
        if self.l_max == 0 {
            return Err(Error::Config("l_max must be at least 1".into()));
        }
        if !(self.rpr_tolerance > 0.0) {
            return Err(Error::Config(format!(
                "rpr_tolerance must be positive, got {}",
                self.rpr_tolerance
            )));
        }
        if self.rpr_max_iterations == 0 {
            return Err(Error::Config("rpr_max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

/// Scores one pair of distinct participants under `measure`.
pub fn score(
    g: &ContactGraph,
    x: &str,
    y: &str,
    measure: Measure,
    cfg: &PredictorConfig,
) -> Result<f64> {
    cfg.validate()?;
    let (xi, yi) = (g.idx(x)?, g.idx(y)?);
    if xi == yi {
        return Err(Error::Invalid(format!(
            "score requires two distinct participants, got {x:?} twice"
        )));
    }
    score_indexed(g, xi, yi, measure, cfg)
}

fn score_indexed(
    g: &ContactGraph,
    xi: usize,
    yi: usize,
    measure: Measure,
    cfg: &PredictorConfig,
) -> Result<f64> {
    match measure {
        Measure::RootedPageRank => {
            let px = rpr_vector(g, xi, false, cfg)?;
            let py = rpr_vector(g, yi, false, cfg)?;
            Ok(px[yi] + py[xi])
        }
        Measure::WeightedRootedPageRank => {
            let px = rpr_vector(g, xi, true, cfg)?;
            let py = rpr_vector(g, yi, true, cfg)?;
            Ok(px[yi] + py[xi])
        }
        // Rooting the walk sum at the smaller index keeps the score
        // bit-identical under argument swap.
        Measure::Katz => Ok(katz_vector(g, xi.min(yi), false, cfg)[xi.max(yi)]),
        Measure::WeightedKatz => Ok(katz_vector(g, xi.min(yi), true, cfg)[xi.max(yi)]),
        _ => Ok(neighborhood_score(g, xi, yi, measure)),
    }
}

/// Scores many pairs under one measure, reusing per-root walk distributions.
///
/// Returns one score per input pair, in input order. Walk distributions for
/// distinct roots are computed in parallel; scores do not depend on the
/// degree of parallelism.
pub fn score_pairs(
    g: &ContactGraph,
    pairs: &[Pair],
    measure: Measure,
    cfg: &PredictorConfig,
) -> Result<Vec<f64>> {
    cfg.validate()?;
    let mut indexed = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let (xi, yi) = (g.idx(pair.first())?, g.idx(pair.second())?);
        indexed.push((xi, yi));
    }

    match measure {
        Measure::RootedPageRank | Measure::WeightedRootedPageRank => {
            let weighted = measure == Measure::WeightedRootedPageRank;
            let roots: Vec<usize> = indexed
                .iter()
                .flat_map(|&(x, y)| [x, y])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let vectors = walk_vectors(roots, |root| rpr_vector(g, root, weighted, cfg))?;
            Ok(indexed
                .iter()
                .map(|&(x, y)| vectors[&x][y] + vectors[&y][x])
                .collect())
        }
        Measure::Katz | Measure::WeightedKatz => {
            let weighted = measure == Measure::WeightedKatz;
            let roots: Vec<usize> = indexed
                .iter()
                .map(|&(x, y)| x.min(y))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let vectors = walk_vectors(roots, |root| Ok(katz_vector(g, root, weighted, cfg)))?;
            Ok(indexed
                .iter()
                .map(|&(x, y)| vectors[&x.min(y)][x.max(y)])
                .collect())
        }
        _ => Ok(indexed
            .iter()
            .map(|&(x, y)| neighborhood_score(g, x, y, measure))
            .collect()),
    }
}

fn walk_vectors<F>(roots: Vec<usize>, compute: F) -> Result<HashMap<usize, Vec<f64>>>
where
    F: Fn(usize) -> Result<Vec<f64>> + Sync,
{
    let computed: Vec<Result<Vec<f64>>> = roots.par_iter().map(|&root| compute(root)).collect();
    let mut vectors = HashMap::with_capacity(roots.len());
    for (root, result) in roots.into_iter().zip(computed) {
        vectors.insert(root, result?);
    }
    Ok(vectors)
}

/// Stationary distribution of a random walk that restarts at `root` with
/// probability `alpha` and otherwise steps to a neighbor, uniformly or in
/// proportion to edge weight. A vertex without neighbors returns its whole
/// non-restart mass to the root.
pub fn rooted_pagerank(
    g: &ContactGraph,
    root: &str,
    weighted: bool,
    cfg: &PredictorConfig,
) -> Result<std::collections::BTreeMap<String, f64>> {
    cfg.validate()?;
    let vector = rpr_vector(g, g.idx(root)?, weighted, cfg)?;
    Ok(g.vertices()
        .zip(vector)
        .map(|(id, p)| (id.to_string(), p))
        .collect())
}

fn rpr_vector(
    g: &ContactGraph,
    root: usize,
    weighted: bool,
    cfg: &PredictorConfig,
) -> Result<Vec<f64>> {
    let n = g.vertex_count();
    let alpha = cfg.alpha;
    let mut p = vec![0.0; n];
    p[root] = 1.0;
    let mut residual = f64::INFINITY;

    for _ in 0..cfg.rpr_max_iterations {
        let mut next = vec![0.0; n];
        next[root] = alpha;
        for u in 0..n {
            let mass = (1.0 - alpha) * p[u];
            if mass == 0.0 {
                continue;
            }
            let neighbors = g.neighbors_at(u);
            if neighbors.is_empty() {
                next[root] += mass;
            } else if weighted {
                let strength = g.strength_at(u) as f64;
                for &(v, w) in neighbors {
                    next[v] += mass * (w as f64 / strength);
                }
            } else {
                let share = mass / neighbors.len() as f64;
                for &(v, _) in neighbors {
                    next[v] += share;
                }
            }
        }
        residual = next.iter().zip(&p).map(|(a, b)| (a - b).abs()).sum();
        p = next;
        if residual < cfg.rpr_tolerance {
            return Ok(p);
        }
    }

    Err(Error::Convergence {
        root: g.id_at(root).to_string(),
        iterations: cfg.rpr_max_iterations,
        residual,
    })
}

/// Damped walk count between two participants: walks of length 1 to
/// `l_max`, each length damped by `beta^length`. In the weighted variant a
/// walk contributes the product of its edge weights, each normalized by the
/// graph's largest edge weight.
pub fn katz(
    g: &ContactGraph,
    x: &str,
    y: &str,
    weighted: bool,
    cfg: &PredictorConfig,
) -> Result<f64> {
    cfg.validate()?;
    let (xi, yi) = (g.idx(x)?, g.idx(y)?);
    if xi == yi {
        return Err(Error::Invalid(format!(
            "katz requires two distinct participants, got {x:?} twice"
        )));
    }
    Ok(katz_vector(g, xi.min(yi), weighted, cfg)[xi.max(yi)])
}

fn katz_vector(g: &ContactGraph, root: usize, weighted: bool, cfg: &PredictorConfig) -> Vec<f64> {
    let n = g.vertex_count();
    let w_max = g.max_edge_weight().unwrap_or(1) as f64;
    let mut walks = vec![0.0; n];
    walks[root] = 1.0;
    let mut total = vec![0.0; n];
    let mut damping = 1.0;

    for _ in 0..cfg.l_max {
        damping *= cfg.beta;
        let mut next = vec![0.0; n];
        for u in 0..n {
            if walks[u] == 0.0 {
                continue;
            }
            for &(v, w) in g.neighbors_at(u) {
                let step = if weighted { w as f64 / w_max } else { 1.0 };
                next[v] += walks[u] * step;
            }
        }
        walks = next;
        for (acc, &w) in total.iter_mut().zip(&walks) {
            *acc += damping * w;
        }
    }
    total
}

fn neighborhood_score(g: &ContactGraph, xi: usize, yi: usize, measure: Measure) -> f64 {
    match measure {
        Measure::PreferentialAttachment => {
            (g.neighbors_at(xi).len() * g.neighbors_at(yi).len()) as f64
        }
        Measure::WeightedPreferentialAttachment => {
            g.strength_at(xi) as f64 * g.strength_at(yi) as f64
        }
        Measure::TieStrength => g.weight_at(xi, yi).unwrap_or(0) as f64,
        _ => shared_neighbor_score(g, xi, yi, measure),
    }
}

/// A neighbor both endpoints share, with the weights of the two edges
/// leading to it.
struct Shared {
    z: usize,
    wx: u64,
    wy: u64,
}

fn shared_neighbors(g: &ContactGraph, xi: usize, yi: usize) -> Vec<Shared> {
    let (xs, ys) = (g.neighbors_at(xi), g.neighbors_at(yi));
    let mut shared = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        let ((zx, wx), (zy, wy)) = (xs[i], ys[j]);
        match zx.cmp(&zy) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                shared.push(Shared { z: zx, wx, wy });
                i += 1;
                j += 1;
            }
        }
    }
    shared
}

pub(crate) fn shared_neighbor_count(g: &ContactGraph, xi: usize, yi: usize) -> usize {
    shared_neighbors(g, xi, yi).len()
}

fn shared_neighbor_score(g: &ContactGraph, xi: usize, yi: usize, measure: Measure) -> f64 {
    let shared = shared_neighbors(g, xi, yi);
    match measure {
        Measure::CommonNeighbors => shared.len() as f64,
        Measure::AdamicAdar => shared
            .iter()
            .map(|s| {
                let degree = g.neighbors_at(s.z).len();
                debug_assert!(degree >= 2, "a shared neighbor touches both endpoints");
                1.0 / (degree as f64).ln()
            })
            .sum(),
        Measure::Jaccard => {
            let union =
                g.neighbors_at(xi).len() + g.neighbors_at(yi).len() - shared.len();
            if union == 0 {
                0.0
            } else {
                shared.len() as f64 / union as f64
            }
        }
        Measure::ResourceAllocation => shared
            .iter()
            .map(|s| 1.0 / g.neighbors_at(s.z).len() as f64)
            .sum(),
        Measure::WeightedCommonNeighbors => {
            shared.iter().map(|s| s.wx + s.wy).sum::<u64>() as f64
        }
        Measure::WeightedAdamicAdar => shared
            .iter()
            .map(|s| {
                let denom = (g.strength_at(s.z) as f64).ln().max(std::f64::consts::LN_2);
                (s.wx + s.wy) as f64 / denom
            })
            .sum(),
        Measure::WeightedJaccard => {
            let denom = (g.strength_at(xi) + g.strength_at(yi)) as f64;
            if denom == 0.0 {
                0.0
            } else {
                shared.iter().map(|s| s.wx + s.wy).sum::<u64>() as f64 / denom
            }
        }
        Measure::WeightedResourceAllocation => shared
            .iter()
            .map(|s| (s.wx + s.wy) as f64 / g.strength_at(s.z) as f64)
            .sum(),
        _ => unreachable!("only shared-neighbor measures reach here"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact_data::ContactGraph;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn unit_path() -> ContactGraph {
        ContactGraph::from_weighted_edges([("p1", "p2", 1), ("p2", "p3", 1)]).unwrap()
    }

    fn cfg() -> PredictorConfig {
        PredictorConfig::default()
    }

    fn random_graph(rng: &mut StdRng, n: usize, edge_prob: f64, max_w: u64) -> ContactGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(edge_prob) {
                    edges.push((
                        format!("v{i:02}"),
                        format!("v{j:02}"),
                        rng.random_range(1..=max_w),
                    ));
                }
            }
        }
        ContactGraph::from_weighted_edges(edges).unwrap()
    }

    #[test]
    fn path_endpoint_scores_match_hand_computation() {
        let g = unit_path();
        let c = cfg();
        let expect = [
            (Measure::CommonNeighbors, 1.0),
            (Measure::Jaccard, 1.0),
            (Measure::ResourceAllocation, 0.5),
            (Measure::PreferentialAttachment, 1.0),
            (Measure::AdamicAdar, 1.0 / std::f64::consts::LN_2),
            (Measure::WeightedCommonNeighbors, 2.0),
            (Measure::WeightedResourceAllocation, 1.0),
            (Measure::WeightedPreferentialAttachment, 1.0),
            (Measure::WeightedJaccard, 1.0),
            (Measure::WeightedAdamicAdar, 2.0 / std::f64::consts::LN_2),
        ];
        for (m, want) in expect {
            let got = score(&g, "p1", "p3", m, &c).unwrap();
            assert!(
                (got - want).abs() < 1e-12,
                "{m}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn pair_without_shared_structure_scores_zero() {
        let g = ContactGraph::from_weighted_edges([
            ("p1", "p2", 7),
            ("p3", "p4", 9),
        ])
        .unwrap();
        for m in [
            Measure::CommonNeighbors,
            Measure::AdamicAdar,
            Measure::Jaccard,
            Measure::ResourceAllocation,
            Measure::WeightedCommonNeighbors,
            Measure::WeightedAdamicAdar,
            Measure::WeightedJaccard,
            Measure::WeightedResourceAllocation,
            Measure::TieStrength,
        ] {
            assert_eq!(score(&g, "p1", "p3", m, &cfg()).unwrap(), 0.0, "{m}");
        }
    }

    #[test]
    fn weighted_resource_allocation_on_a_triangle() {
        let g = ContactGraph::from_weighted_edges([
            ("p1", "p2", 10),
            ("p2", "p3", 30),
            ("p1", "p3", 5),
        ])
        .unwrap();
        // Only shared neighbor of (p1, p3) is p2 with strength 40.
        let got = score(&g, "p1", "p3", Measure::WeightedResourceAllocation, &cfg()).unwrap();
        assert!((got - 1.0).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn tie_strength_reads_the_edge_weight() {
        let g = unit_path();
        assert_eq!(
            score(&g, "p1", "p2", Measure::TieStrength, &cfg()).unwrap(),
            1.0
        );
        assert_eq!(
            score(&g, "p1", "p3", Measure::TieStrength, &cfg()).unwrap(),
            0.0
        );
    }

    #[test]
    fn two_vertex_walk_splits_two_thirds_one_third() {
        let g = ContactGraph::from_weighted_edges([("p1", "p2", 1)]).unwrap();
        let mut c = cfg();
        c.alpha = 0.5;
        let dist = rooted_pagerank(&g, "p1", false, &c).unwrap();
        assert!((dist["p1"] - 2.0 / 3.0).abs() < 1e-9, "root: {}", dist["p1"]);
        assert!((dist["p2"] - 1.0 / 3.0).abs() < 1e-9, "other: {}", dist["p2"]);
    }

    #[test]
    fn isolated_root_keeps_all_mass() {
        let g = ContactGraph::from_weighted_edges([("p1", "p2", 100), ("p3", "p4", 10)])
            .unwrap()
            .prune_below(50);
        let dist = rooted_pagerank(&g, "p3", false, &cfg()).unwrap();
        assert!((dist["p3"] - 1.0).abs() < 1e-12);
        assert_eq!(dist["p1"], 0.0);
    }

    #[test]
    fn walk_distributions_sum_to_one_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(411);
        for round in 0..10 {
            let g = random_graph(&mut rng, 9, 0.4, 500);
            if g.vertex_count() == 0 {
                continue;
            }
            let root = g.vertices().next().unwrap().to_string();
            for weighted in [false, true] {
                let dist = rooted_pagerank(&g, &root, weighted, &cfg()).unwrap();
                let sum: f64 = dist.values().sum();
                assert!(
                    (sum - 1.0).abs() < 1e-9,
                    "round {round}, weighted {weighted}: sum {sum}"
                );
                assert!(dist.values().all(|&p| p >= 0.0));
            }
        }
    }

    #[test]
    fn weighting_shifts_walk_mass_toward_strong_ties() {
        let g = ContactGraph::from_weighted_edges([("hub", "p1", 1), ("hub", "p2", 99)])
            .unwrap();
        let uniform = rooted_pagerank(&g, "p1", false, &cfg()).unwrap();
        let weighted = rooted_pagerank(&g, "p1", true, &cfg()).unwrap();
        assert!(
            weighted["p2"] > uniform["p2"],
            "weighted {} vs uniform {}",
            weighted["p2"],
            uniform["p2"]
        );
    }

    #[test]
    fn iteration_cap_reports_nonconvergence() {
        let g = ContactGraph::from_weighted_edges([("p1", "p2", 1)]).unwrap();
        let mut c = cfg();
        c.rpr_max_iterations = 1;
        let err = score(&g, "p1", "p2", Measure::RootedPageRank, &c).unwrap_err();
        match err {
            Error::Convergence {
                iterations,
                residual,
                ..
            } => {
                assert_eq!(iterations, 1);
                assert!(residual > 0.0);
            }
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn three_path_walk_count_matches_hand_sum() {
        // Walks p1 -> p3 within 4 steps: one of length 2, two of length 4.
        let g = unit_path();
        let mut c = cfg();
        c.beta = 0.1;
        c.l_max = 4;
        let got = katz(&g, "p1", "p3", false, &c).unwrap();
        assert!((got - 0.0102).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn disconnected_pair_has_zero_walk_count() {
        let g = ContactGraph::from_weighted_edges([("p1", "p2", 5), ("p3", "p4", 5)]).unwrap();
        assert_eq!(katz(&g, "p1", "p3", false, &cfg()).unwrap(), 0.0);
        assert_eq!(katz(&g, "p1", "p3", true, &cfg()).unwrap(), 0.0);
    }

    #[test]
    fn single_step_walks_reduce_to_damped_adjacency() {
        let g = ContactGraph::from_weighted_edges([("p1", "p2", 50), ("p2", "p3", 100)])
            .unwrap();
        let mut c = cfg();
        c.l_max = 1;
        c.beta = 0.25;
        assert!((katz(&g, "p1", "p2", false, &c).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(katz(&g, "p1", "p3", false, &c).unwrap(), 0.0);
        // Weighted steps normalize by the largest weight in the graph.
        assert!((katz(&g, "p1", "p2", true, &c).unwrap() - 0.25 * 0.5).abs() < 1e-15);
        assert!((katz(&g, "p2", "p3", true, &c).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn every_measure_is_symmetric() {
        let mut rng = StdRng::seed_from_u64(412);
        let g = random_graph(&mut rng, 10, 0.45, 900);
        let ids: Vec<String> = g.vertices().map(String::from).collect();
        let c = cfg();
        for _ in 0..30 {
            let x = &ids[rng.random_range(0..ids.len())];
            let y = &ids[rng.random_range(0..ids.len())];
            if x == y {
                continue;
            }
            for m in Measure::ALL {
                let xy = score(&g, x, y, m, &c).unwrap();
                let yx = score(&g, y, x, m, &c).unwrap();
                assert_eq!(xy, yx, "{m} asymmetric on ({x}, {y}): {xy} vs {yx}");
                assert!(xy >= 0.0, "{m} negative on ({x}, {y}): {xy}");
            }
        }
    }

    #[test]
    fn jaccard_variants_stay_within_unit_interval() {
        let mut rng = StdRng::seed_from_u64(413);
        for _ in 0..10 {
            let g = random_graph(&mut rng, 8, 0.5, 300);
            let ids: Vec<String> = g.vertices().map(String::from).collect();
            for i in 0..ids.len() {
                for j in (i + 1)..ids.len() {
                    for m in [Measure::Jaccard, Measure::WeightedJaccard] {
                        let s = score(&g, &ids[i], &ids[j], m, &cfg()).unwrap();
                        assert!((0.0..=1.0).contains(&s), "{m} out of range: {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn unit_weights_collapse_weighted_measures() {
        let mut rng = StdRng::seed_from_u64(414);
        for round in 0..5 {
            let g = random_graph(&mut rng, 9, 0.4, 1);
            let ids: Vec<String> = g.vertices().map(String::from).collect();
            let c = cfg();
            for i in 0..ids.len() {
                for j in (i + 1)..ids.len() {
                    let (x, y) = (&ids[i], &ids[j]);
                    let pairs = [
                        (Measure::WeightedCommonNeighbors, Measure::CommonNeighbors, 2.0),
                        (Measure::WeightedAdamicAdar, Measure::AdamicAdar, 2.0),
                        (Measure::WeightedResourceAllocation, Measure::ResourceAllocation, 2.0),
                        (Measure::WeightedPreferentialAttachment, Measure::PreferentialAttachment, 1.0),
                    ];
                    for (wm, um, factor) in pairs {
                        let w = score(&g, x, y, wm, &c).unwrap();
                        let u = score(&g, x, y, um, &c).unwrap();
                        assert!(
                            (w - factor * u).abs() < 1e-12,
                            "round {round}: {wm} != {factor} * {um} on ({x}, {y}): {w} vs {u}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn integer_weight_scaling_preserves_ratio_measures_exactly() {
        let mut rng = StdRng::seed_from_u64(415);
        let base: Vec<(String, String, u64)> = {
            let g = random_graph(&mut rng, 9, 0.45, 400);
            g.edges()
                .map(|(a, b, w)| (a.to_string(), b.to_string(), w))
                .collect()
        };
        let g1 = ContactGraph::from_weighted_edges(base.clone()).unwrap();
        let g3 = ContactGraph::from_weighted_edges(
            base.iter().map(|(a, b, w)| (a.clone(), b.clone(), w * 3)),
        )
        .unwrap();
        let ids: Vec<String> = g1.vertices().map(String::from).collect();
        let c = cfg();

        let mut wcn1 = Vec::new();
        let mut wcn3 = Vec::new();
        let mut wpa1 = Vec::new();
        let mut wpa3 = Vec::new();
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                let (x, y) = (&ids[i], &ids[j]);
                for m in [
                    Measure::CommonNeighbors,
                    Measure::AdamicAdar,
                    Measure::Jaccard,
                    Measure::ResourceAllocation,
                    Measure::PreferentialAttachment,
                    Measure::WeightedJaccard,
                    Measure::WeightedResourceAllocation,
                    Measure::RootedPageRank,
                    Measure::WeightedRootedPageRank,
                ] {
                    let s1 = score(&g1, x, y, m, &c).unwrap();
                    let s3 = score(&g3, x, y, m, &c).unwrap();
                    assert_eq!(s1, s3, "{m} changed under weight scaling on ({x}, {y})");
                }
                let w1 = score(&g1, x, y, Measure::WeightedCommonNeighbors, &c).unwrap();
                let w3 = score(&g3, x, y, Measure::WeightedCommonNeighbors, &c).unwrap();
                assert_eq!(w3, 3.0 * w1, "wcn must scale by the constant");
                wcn1.push(w1);
                wcn3.push(w3);
                wpa1.push(score(&g1, x, y, Measure::WeightedPreferentialAttachment, &c).unwrap());
                wpa3.push(score(&g3, x, y, Measure::WeightedPreferentialAttachment, &c).unwrap());
            }
        }

        let rank = |scores: &[f64]| {
            let mut order: Vec<usize> = (0..scores.len()).collect();
            order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]).then(a.cmp(&b)));
            order
        };
        assert_eq!(rank(&wcn1), rank(&wcn3), "wcn ranking must survive scaling");
        assert_eq!(rank(&wpa1), rank(&wpa3), "wpa ranking must survive scaling");
    }

    #[test]
    fn batch_scoring_matches_single_scoring() {
        let mut rng = StdRng::seed_from_u64(416);
        let g = random_graph(&mut rng, 10, 0.4, 700);
        let ids: Vec<String> = g.vertices().map(String::from).collect();
        let mut pairs = Vec::new();
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                pairs.push(Pair::new(ids[i].clone(), ids[j].clone()).unwrap());
            }
        }
        let c = cfg();
        for m in [
            Measure::CommonNeighbors,
            Measure::WeightedRootedPageRank,
            Measure::WeightedKatz,
        ] {
            let batch = score_pairs(&g, &pairs, m, &c).unwrap();
            assert_eq!(batch.len(), pairs.len());
            for (pair, &got) in pairs.iter().zip(&batch) {
                let single = score(&g, pair.first(), pair.second(), m, &c).unwrap();
                assert_eq!(got, single, "{m} batch mismatch on {pair}");
            }
        }
        assert!(score_pairs(&g, &[], Measure::Katz, &c).unwrap().is_empty());
    }

    #[test]
    fn config_validation_rejects_out_of_range_values() {
        let g = unit_path();
        for bad in [
            PredictorConfig { alpha: 0.0, ..cfg() },
            PredictorConfig { alpha: 1.0, ..cfg() },
            PredictorConfig { beta: 0.0, ..cfg() },
            PredictorConfig { l_max: 0, ..cfg() },
            PredictorConfig { rpr_tolerance: 0.0, ..cfg() },
            PredictorConfig { rpr_max_iterations: 0, ..cfg() },
        ] {
            let err = score(&g, "p1", "p2", Measure::CommonNeighbors, &bad).unwrap_err();
            assert!(matches!(err, Error::Config(_)), "got {err:?}");
        }
    }

    #[test]
    fn measure_names_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
        assert!("closeness".parse::<Measure>().is_err());
    }
}
