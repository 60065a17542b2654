//! Attribute-based subgroup discovery over per-participant target values.
//!
//! Participants carry categorical attributes (academic status, affiliation
//! level, boolean roles such as session chair). Given a numeric target per
//! participant, [`discover`] exhaustively enumerates attribute-value
//! conjunctions up to a depth bound and ranks them by lift: the ratio of the
//! subgroup's mean target to the population mean. Targets derived from a
//! [`TemporalSplit`] are provided by [`target_new_contact_count`] and
//! [`target_recurring_duration`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use crate::contact_data::{csv_error, TemporalSplit};
use crate::error::{Error, Result};

pub(crate) const PROFILE_HEADER: [&str; 3] = ["id", "attribute", "value"];

/// One participant's categorical attributes.
///
/// Attribute names and values are lowercased on construction so that
/// selectors compare case-insensitively. Missing attributes are allowed; a
/// participant never matches a selector on an attribute it does not carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticipantProfile {
    pub id: String,
    pub attributes: BTreeMap<String, String>,
}

impl ParticipantProfile {
    pub fn new(id: impl Into<String>) -> Self {
        ParticipantProfile {
            id: id.into(),
            attributes: BTreeMap::new(),
        }
    }

    /// Sets one attribute, lowercasing both name and value. Returns `self`
    /// so profiles can be built inline.
    pub fn with(mut self, name: &str, value: &str) -> Self {
        self.attributes
            .insert(name.to_lowercase(), value.to_lowercase());
        self
    }

    /// True when the profile carries every `(name, value)` selector.
    pub fn matches(&self, selectors: &[(String, String)]) -> bool {
        selectors
            .iter()
            .all(|(name, value)| self.attributes.get(name) == Some(value))
    }
}

/// Reads profiles from long-format CSV with header `id,attribute,value`,
/// one row per attribute assignment.
///
/// Attribute names and values are lowercased; ids are kept verbatim so they
/// match event data. Repeated `(id, attribute)` rows are rejected as
/// contradictory. Profiles come back sorted by id.
pub fn parse_profiles<R: Read>(reader: R) -> Result<Vec<ParticipantProfile>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);

    let headers = rdr.headers().map_err(|e| csv_error(&e))?;
    if headers.iter().ne(PROFILE_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "expected header {:?}, got {:?}",
                PROFILE_HEADER.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut profiles: BTreeMap<String, ParticipantProfile> = BTreeMap::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error(&e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected 3 fields, got {}", record.len()),
            });
        }
        let (id, attribute, value) = (&record[0], &record[1], &record[2]);
        if id.is_empty() || attribute.is_empty() || value.is_empty() {
            return Err(Error::Validation {
                line,
                message: "id, attribute, and value must all be non-empty".into(),
            });
        }
        let attribute = attribute.to_lowercase();
        let profile = profiles
            .entry(id.to_string())
            .or_insert_with(|| ParticipantProfile::new(id));
        if profile.attributes.contains_key(&attribute) {
            return Err(Error::Validation {
                line,
                message: format!("duplicate attribute {attribute:?} for participant {id:?}"),
            });
        }
        profile
            .attributes
            .insert(attribute, value.to_lowercase());
    }
    Ok(profiles.into_values().collect())
}

/// Writes profiles as CSV in the format accepted by [`parse_profiles`].
pub fn write_profiles<W: Write>(profiles: &[ParticipantProfile], writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(PROFILE_HEADER).map_err(|e| csv_error(&e))?;
    for profile in profiles {
        for (attribute, value) in &profile.attributes {
            wtr.write_record([profile.id.as_str(), attribute, value])
                .map_err(|e| csv_error(&e))?;
        }
    }
    wtr.flush()?;
    Ok(())
}

/// Number of test-graph neighbors of `id` that were not training-graph
/// neighbors: how many distinct new contacts the participant made after
/// the cut.
pub fn target_new_contact_count(split: &TemporalSplit, id: &str) -> Result<usize> {
    if !split.is_core(id) {
        return Err(Error::UnknownParticipant(id.to_string()));
    }
    if !split.test().contains(id) {
        return Ok(0);
    }
    let known: BTreeSet<&str> = split
        .train()
        .neighbors(id)
        .expect("core participants appear in the training graph")
        .collect();
    let count = split
        .test()
        .neighbors(id)?
        .filter(|v| !known.contains(v))
        .count();
    Ok(count)
}

/// Total post-cut contact duration of `id` with participants it already
/// knew: Σ future weight over neighbors present in both graphs, in seconds.
pub fn target_recurring_duration(split: &TemporalSplit, id: &str) -> Result<u64> {
    if !split.is_core(id) {
        return Err(Error::UnknownParticipant(id.to_string()));
    }
    let test = split.test();
    if !test.contains(id) {
        return Ok(0);
    }
    let train = split.train();
    let mut total = 0u64;
    for &(vj, w) in test.neighbors_at(test.idx(id)?) {
        let v = test.id_at(vj);
        let known = train
            .weight(id, v)
            .expect("core participants appear in the training graph")
            .is_some();
        if known {
            total += w;
        }
    }
    Ok(total)
}

/// Ranking order for [`discover`]: surface subgroups whose mean target sits
/// above the population (`High`, the default) or below it (`Low`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    High,
    Low,
}

impl Direction {
    pub fn name(&self) -> &'static str {
        match self {
            Direction::High => "high",
            Direction::Low => "low",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "high" => Ok(Direction::High),
            "low" => Ok(Direction::Low),
            other => Err(Error::Config(format!(
                "unknown direction {other:?}, expected high or low"
            ))),
        }
    }
}

/// One discovered subgroup: a conjunction of attribute selectors together
/// with its mean target, size, and lift relative to the population mean.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    /// `(attribute, value)` selectors in attribute order; empty for the
    /// whole-population pattern.
    pub selectors: Vec<(String, String)>,
    pub lift: f64,
    pub mean: f64,
    pub size: usize,
}

impl Pattern {
    /// Human-readable conjunction, `attr=value AND attr=value`, or `(all)`
    /// for the empty conjunction.
    pub fn description(&self) -> String {
        if self.selectors.is_empty() {
            return "(all)".to_string();
        }
        self.selectors
            .iter()
            .map(|(name, value)| format!("{name}={value}"))
            .collect::<Vec<_>>()
            .join(" AND ")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

/// Exhaustively enumerates attribute-value conjunctions over the profiles
/// that carry a target, ranks them by lift, and returns the top `top_k`.
///
/// Conjunctions combine up to `max_depth` distinct attributes drawn from the
/// values observed in the profile list; the empty conjunction (the whole
/// population, lift exactly 1.0) is always a candidate. Patterns smaller
/// than `min_size` are dropped, as are empty ones. Ties in lift break by
/// size descending, then description ascending, so output order is
/// deterministic.
///
/// Profiles without an entry in `targets` do not participate; the
/// population is the target-bearing profiles.
pub fn discover(
    profiles: &[ParticipantProfile],
    targets: &BTreeMap<String, f64>,
    max_depth: usize,
    min_size: usize,
    top_k: usize,
    direction: Direction,
) -> Result<Vec<Pattern>> {
    if max_depth == 0 {
        return Err(Error::Config(
            "max_depth must be at least 1".to_string(),
        ));
    }

    let population: Vec<(&ParticipantProfile, f64)> = profiles
        .iter()
        .filter_map(|p| targets.get(&p.id).map(|&t| (p, t)))
        .collect();
    let population_sum: f64 = population.iter().map(|(_, t)| t).sum();
    let population_mean = population_sum / population.len() as f64;
    if !(population_mean > 0.0) {
        return Err(Error::UndefinedLift {
            population: population.len(),
        });
    }

    let mut vocabulary: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for (profile, _) in &population {
        for (name, value) in &profile.attributes {
            vocabulary
                .entry(name.as_str())
                .or_default()
                .insert(value.as_str());
        }
    }
    let attributes: Vec<&str> = vocabulary.keys().copied().collect();

    let min_size = min_size.max(1);
    let mut patterns = Vec::new();
    let mut selectors: Vec<(String, String)> = Vec::new();
    enumerate(
        &attributes,
        &vocabulary,
        &population,
        population_mean,
        max_depth,
        min_size,
        0,
        &mut selectors,
        &mut patterns,
    );

    patterns.sort_by(|a, b| {
        let by_lift = match direction {
            Direction::High => b.lift.total_cmp(&a.lift),
            Direction::Low => a.lift.total_cmp(&b.lift),
        };
        by_lift
            .then_with(|| b.size.cmp(&a.size))
            .then_with(|| a.description().cmp(&b.description()))
    });
    patterns.truncate(top_k);
    Ok(patterns)
}

/// Depth-first enumeration over attribute combinations. Each call level
/// scores the current conjunction, then extends it with every value of
/// every attribute lexicographically after the last one used.
#[allow(clippy::too_many_arguments)]
fn enumerate(
    attributes: &[&str],
    vocabulary: &BTreeMap<&str, BTreeSet<&str>>,
    population: &[(&ParticipantProfile, f64)],
    population_mean: f64,
    max_depth: usize,
    min_size: usize,
    next_attribute: usize,
    selectors: &mut Vec<(String, String)>,
    out: &mut Vec<Pattern>,
) {
    let (mut size, mut sum) = (0usize, 0.0f64);
    for (profile, target) in population {
        if profile.matches(selectors) {
            size += 1;
            sum += target;
        }
    }
    if size >= min_size {
        let mean = sum / size as f64;
        out.push(Pattern {
            selectors: selectors.clone(),
            lift: mean / population_mean,
            mean,
            size,
        });
    }
    if selectors.len() == max_depth || size == 0 {
        return;
    }
    for (i, &name) in attributes.iter().enumerate().skip(next_attribute) {
        for &value in &vocabulary[name] {
            selectors.push((name.to_string(), value.to_string()));
            enumerate(
                attributes,
                vocabulary,
                population,
                population_mean,
                max_depth,
                min_size,
                i + 1,
                selectors,
                out,
            );
            selectors.pop();
        }
    }
}
