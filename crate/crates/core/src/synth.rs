//! Seedable synthetic contact-event generator.
//!
//! Produces conference-like datasets: a few days of contacts with
//! long-tailed (Pareto) durations, plus categorical participant profiles.
//! Optional planted structure makes downstream behavior predictable, which
//! turns the whole analysis pipeline into something testable at desk scale.
//!
//! Determinism: all randomness comes from a ChaCha12 stream keyed by
//! [`SynthConfig::seed`], so a given configuration yields byte-identical
//! output on every platform and build.

use std::fmt;
use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha12Rng;

use crate::contact_data::ContactEvent;
use crate::error::{Error, Result};
use crate::subgroups::ParticipantProfile;

/// Planted structure for a generated dataset.
///
/// Parsed from the strings `positives-share-cn`,
/// `future-weight-proportional-to-training-weight`, and
/// `noise-edges-below:<seconds>` (whitespace after the colon is allowed).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlantSpec {
    /// Groups of four where the two pairs that meet after day 0 are exactly
    /// the pairs sharing two common neighbors within their group. A
    /// common-neighbors ranking of new links then has nothing to miss.
    PositivesShareCommonNeighbors,
    /// Every day-0 pair recurs once per later day for the same duration, so
    /// each pair's future weight is exactly (days - 1) times its training
    /// weight.
    FutureWeightProportionalToTrainingWeight,
    /// The common-neighbor plant plus two hub participants who touch every
    /// group briefly (each noise edge lighter than the given threshold,
    /// every structural edge at least as heavy). Pruning edges below the
    /// threshold removes exactly the noise.
    NoiseEdgesBelow(u64),
}

impl fmt::Display for PlantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlantSpec::PositivesShareCommonNeighbors => f.write_str("positives-share-cn"),
            PlantSpec::FutureWeightProportionalToTrainingWeight => {
                f.write_str("future-weight-proportional-to-training-weight")
            }
            PlantSpec::NoiseEdgesBelow(s) => write!(f, "noise-edges-below:{s}"),
        }
    }
}

impl FromStr for PlantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positives-share-cn" => Ok(PlantSpec::PositivesShareCommonNeighbors),
            "future-weight-proportional-to-training-weight" => {
                Ok(PlantSpec::FutureWeightProportionalToTrainingWeight)
            }
            other => match other.strip_prefix("noise-edges-below:") {
                Some(rest) => {
                    let seconds = rest.trim().parse().map_err(|_| {
                        Error::Config(format!(
                            "noise-edges-below takes a duration in seconds, got {rest:?}"
                        ))
                    })?;
                    Ok(PlantSpec::NoiseEdgesBelow(seconds))
                }
                None => Err(Error::Config(format!(
                    "unknown plant spec {other:?}, expected positives-share-cn, \
                     future-weight-proportional-to-training-weight, or \
                     noise-edges-below:<seconds>"
                ))),
            },
        }
    }
}

/// Configuration for [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub participants: usize,
    pub days: usize,
    /// Length of each day window in seconds; day `d` covers
    /// `[d * day_length, (d + 1) * day_length)`.
    pub day_length: i64,
    pub events_per_day: usize,
    /// Pareto tail exponent for contact durations.
    pub pareto_shape: f64,
    /// Minimum contact duration in seconds.
    pub pareto_minimum: u64,
    pub seed: u64,
    pub plant: Option<PlantSpec>,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            participants: 75,
            days: 3,
            day_length: 28_800,
            events_per_day: 400,
            pareto_shape: 1.5,
            pareto_minimum: 20,
            seed: 0,
            plant: None,
        }
    }
}

impl SynthConfig {
    /// Cut timestamp that puts all of day 0 in the training period and
    /// every later day in the test period. Planted structure is designed
    /// around this split.
    pub fn cut(&self) -> i64 {
        self.day_length - 1
    }

    /// Number of four-participant groups a planted configuration carves
    /// out of the pool.
    fn group_count(&self) -> usize {
        let reserved = match self.plant {
            Some(PlantSpec::NoiseEdgesBelow(_)) => 2,
            _ => 0,
        };
        self.participants.saturating_sub(reserved) / 4
    }

    pub fn validate(&self) -> Result<()> {
        if self.participants < 2 {
            return Err(Error::Config(format!(
                "need at least 2 participants, got {}",
                self.participants
            )));
        }
        if self.days == 0 {
            return Err(Error::Config("need at least one day".to_string()));
        }
        if self.day_length < 1 {
            return Err(Error::Config(format!(
                "day_length must be positive, got {}",
                self.day_length
            )));
        }
        if !(self.pareto_shape > 0.0 && self.pareto_shape.is_finite()) {
            return Err(Error::Config(format!(
                "pareto shape must be a positive finite number, got {}",
                self.pareto_shape
            )));
        }
        if self.pareto_minimum < 1 {
            return Err(Error::Config(
                "pareto minimum must be at least 1 second".to_string(),
            ));
        }

        let Some(plant) = self.plant else {
            return Ok(());
        };
        if self.days < 2 {
            return Err(Error::Config(format!(
                "plant {plant} needs at least 2 days so contacts can recur"
            )));
        }
        match plant {
            PlantSpec::PositivesShareCommonNeighbors | PlantSpec::NoiseEdgesBelow(_) => {
                let groups = self.group_count();
                if groups == 0 {
                    return Err(Error::Config(format!(
                        "plant {plant} needs at least one group of 4 participants, \
                         got {}",
                        self.participants
                    )));
                }
                let day0 = match plant {
                    PlantSpec::NoiseEdgesBelow(_) => 7 * groups,
                    _ => 5 * groups,
                };
                if self.events_per_day < day0 {
                    return Err(Error::Config(format!(
                        "plant {plant} places {day0} events on day 0 for {groups} \
                         groups, but events_per_day is {}",
                        self.events_per_day
                    )));
                }
                if let PlantSpec::NoiseEdgesBelow(threshold) = plant {
                    if threshold <= self.pareto_minimum {
                        return Err(Error::Config(format!(
                            "noise threshold {threshold} must exceed the minimum \
                             duration {}",
                            self.pareto_minimum
                        )));
                    }
                }
            }
            PlantSpec::FutureWeightProportionalToTrainingWeight => {
                let pairs = self.participants * (self.participants - 1) / 2;
                if pairs < self.events_per_day {
                    return Err(Error::Config(format!(
                        "plant {plant} needs {} distinct pairs on day 0 but only \
                         {pairs} exist",
                        self.events_per_day
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Generates `days * events_per_day` contact events plus one profile per
/// participant, deterministically for a fixed config.
pub fn generate(cfg: &SynthConfig) -> Result<(Vec<ContactEvent>, Vec<ParticipantProfile>)> {
    cfg.validate()?;
    let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed);
    let ids = participant_ids(cfg.participants);

    let events = match cfg.plant {
        None => uniform_events(cfg, &ids, &mut rng),
        Some(PlantSpec::PositivesShareCommonNeighbors) => {
            grouped_events(cfg, &ids, None, &mut rng)
        }
        Some(PlantSpec::NoiseEdgesBelow(threshold)) => {
            grouped_events(cfg, &ids, Some(threshold), &mut rng)
        }
        Some(PlantSpec::FutureWeightProportionalToTrainingWeight) => {
            proportional_events(cfg, &ids, &mut rng)
        }
    };
    let profiles = sample_profiles(&ids, &mut rng);
    Ok((events, profiles))
}

/// Zero-padded ids so lexicographic and numeric order agree.
fn participant_ids(n: usize) -> Vec<String> {
    let width = n.to_string().len();
    (0..n).map(|i| format!("p{i:0width$}")).collect()
}

/// Inverse-transform Pareto sample: `minimum / U^(1/shape)` with U in (0, 1],
/// floored to whole seconds.
fn pareto_duration(rng: &mut ChaCha12Rng, shape: f64, minimum: u64) -> u64 {
    let u = 1.0 - rng.random::<f64>();
    let x = minimum as f64 / u.powf(1.0 / shape);
    x.min(u64::MAX as f64).floor() as u64
}

/// Places one contact of `duration` seconds (clamped to the day window)
/// uniformly inside day `day`.
fn place_event(
    cfg: &SynthConfig,
    rng: &mut ChaCha12Rng,
    day: usize,
    a: &str,
    b: &str,
    duration: u64,
) -> ContactEvent {
    let duration = duration.clamp(1, cfg.day_length as u64) as i64;
    let day_start = day as i64 * cfg.day_length;
    let offset = rng.random_range(0..=cfg.day_length - duration);
    ContactEvent::new(day_start + offset, day_start + offset + duration, a, b)
        .expect("generated events are valid")
}

fn uniform_events(cfg: &SynthConfig, ids: &[String], rng: &mut ChaCha12Rng) -> Vec<ContactEvent> {
    let mut events = Vec::with_capacity(cfg.days * cfg.events_per_day);
    for day in 0..cfg.days {
        for _ in 0..cfg.events_per_day {
            let i = rng.random_range(0..ids.len());
            let mut j = rng.random_range(0..ids.len());
            while j == i {
                j = rng.random_range(0..ids.len());
            }
            let duration = pareto_duration(rng, cfg.pareto_shape, cfg.pareto_minimum);
            events.push(place_event(cfg, rng, day, &ids[i], &ids[j], duration));
        }
    }
    events
}

/// Common-neighbor plant, optionally with noise hubs.
///
/// Each group of four (a, b, h1, h2) gets the five day-0 edges a-h1, a-h2,
/// b-h1, b-h2, h1-h2, so (a, b) is the one unlinked pair with two common
/// neighbors. On later days exactly a-b and h1-h2 meet. Filler events
/// re-draw pairs already placed that day, adding weight but no structure.
///
/// With a noise threshold, the last two participants skip the groups and
/// instead brush each group's `a` once on day 0 for less than the threshold,
/// while structural durations are drawn with the threshold as their minimum.
fn grouped_events(
    cfg: &SynthConfig,
    ids: &[String],
    noise_below: Option<u64>,
    rng: &mut ChaCha12Rng,
) -> Vec<ContactEvent> {
    let groups = cfg.group_count();
    let structural_minimum = match noise_below {
        Some(threshold) => threshold.max(cfg.pareto_minimum),
        None => cfg.pareto_minimum,
    };

    let mut training_pairs = Vec::new();
    let mut future_pairs = Vec::new();
    for g in 0..groups {
        let [a, b, h1, h2] = [4 * g, 4 * g + 1, 4 * g + 2, 4 * g + 3];
        training_pairs.extend([(a, h1), (a, h2), (b, h1), (b, h2), (h1, h2)]);
        future_pairs.extend([(a, b), (h1, h2)]);
    }

    let mut events = Vec::with_capacity(cfg.days * cfg.events_per_day);
    for &(i, j) in &training_pairs {
        let duration = pareto_duration(rng, cfg.pareto_shape, structural_minimum);
        events.push(place_event(cfg, rng, 0, &ids[i], &ids[j], duration));
    }
    if let Some(threshold) = noise_below {
        let (m1, m2) = (ids.len() - 2, ids.len() - 1);
        for g in 0..groups {
            for hub in [m1, m2] {
                let duration = rng.random_range(cfg.pareto_minimum..threshold);
                events.push(place_event(cfg, rng, 0, &ids[4 * g], &ids[hub], duration));
            }
        }
    }
    while events.len() < cfg.events_per_day {
        let &(i, j) = &training_pairs[rng.random_range(0..training_pairs.len())];
        let duration = pareto_duration(rng, cfg.pareto_shape, structural_minimum);
        events.push(place_event(cfg, rng, 0, &ids[i], &ids[j], duration));
    }

    for day in 1..cfg.days {
        let mut placed = 0;
        for &(i, j) in &future_pairs {
            let duration = pareto_duration(rng, cfg.pareto_shape, cfg.pareto_minimum);
            events.push(place_event(cfg, rng, day, &ids[i], &ids[j], duration));
            placed += 1;
        }
        while placed < cfg.events_per_day {
            let &(i, j) = &future_pairs[rng.random_range(0..future_pairs.len())];
            let duration = pareto_duration(rng, cfg.pareto_shape, cfg.pareto_minimum);
            events.push(place_event(cfg, rng, day, &ids[i], &ids[j], duration));
            placed += 1;
        }
    }
    events
}

/// Proportional-recurrence plant: `events_per_day` distinct pairs meet on
/// day 0, then every pair meets once per later day for the same duration.
fn proportional_events(
    cfg: &SynthConfig,
    ids: &[String],
    rng: &mut ChaCha12Rng,
) -> Vec<ContactEvent> {
    let mut all_pairs = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            all_pairs.push((i, j));
        }
    }
    let chosen = rand::seq::index::sample(rng, all_pairs.len(), cfg.events_per_day);

    let mut events = Vec::with_capacity(cfg.days * cfg.events_per_day);
    let mut durations = Vec::with_capacity(cfg.events_per_day);
    for k in chosen.iter() {
        let (i, j) = all_pairs[k];
        let duration = pareto_duration(rng, cfg.pareto_shape, cfg.pareto_minimum)
            .clamp(1, cfg.day_length as u64);
        durations.push((i, j, duration));
        events.push(place_event(cfg, rng, 0, &ids[i], &ids[j], duration));
    }
    for day in 1..cfg.days {
        for &(i, j, duration) in &durations {
            events.push(place_event(cfg, rng, day, &ids[i], &ids[j], duration));
        }
    }
    events
}

const STATUSES: [(&str, u32); 4] = [
    ("professor", 14),
    ("phd-candidate", 34),
    ("phd", 20),
    ("other", 7),
];
const AFFILIATIONS: [(&str, u32); 3] = [("high", 12), ("medium", 17), ("low", 46)];
const ROLES: [(&str, f64); 3] = [
    ("session-chair", 0.15),
    ("presenter", 0.4),
    ("organizer", 0.1),
];

fn weighted_choice<'a>(rng: &mut ChaCha12Rng, table: &[(&'a str, u32)]) -> &'a str {
    let total: u32 = table.iter().map(|(_, w)| w).sum();
    let mut roll = rng.random_range(0..total);
    for &(value, weight) in table {
        if roll < weight {
            return value;
        }
        roll -= weight;
    }
    unreachable!("roll is below the total weight")
}

fn sample_profiles(ids: &[String], rng: &mut ChaCha12Rng) -> Vec<ParticipantProfile> {
    ids.iter()
        .map(|id| {
            let mut profile = ParticipantProfile::new(id)
                .with("status", weighted_choice(rng, &STATUSES))
                .with("affiliation", weighted_choice(rng, &AFFILIATIONS));
            for (role, p) in ROLES {
                let value = if rng.random_bool(p) { "yes" } else { "no" };
                profile = profile.with(role, value);
            }
            profile
        })
        .collect()
}
