//! Contact events, weighted contact graphs, and temporal train/test splits.
//!
//! A contact event records one face-to-face contact between two distinct
//! participants over a half-open slice of time. Aggregating events yields an
//! undirected [`ContactGraph`] whose edge weights are total contact seconds.
//! Splitting an event list at a cut timestamp yields a [`TemporalSplit`]:
//! a training graph, the core participants active on both sides of the cut,
//! and a test graph over those core participants.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::{Read, Write};

use crate::error::{Error, Result};

/// Expected header of an event CSV file.
pub const EVENT_HEADER: [&str; 4] = ["start", "end", "a", "b"];

/// One face-to-face contact between two distinct participants.
///
/// `start` and `end` are unix seconds with `end > start`; the contact
/// duration is `end - start` seconds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactEvent {
    pub start: i64,
    pub end: i64,
    pub a: String,
    pub b: String,
}

impl ContactEvent {
    /// Builds a validated event: positive duration, distinct participants.
    pub fn new(
        start: i64,
        end: i64,
        a: impl Into<String>,
        b: impl Into<String>,
    ) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if end <= start {
            return Err(Error::Invalid(format!(
                "contact must end after it starts (start {start}, end {end})"
            )));
        }
        if a == b {
            return Err(Error::Invalid(format!(
                "contact requires two distinct participants, got {a:?} twice"
            )));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::Invalid("participant id must be non-empty".into()));
        }
        Ok(Self { start, end, a, b })
    }

    /// Contact duration in seconds, always positive.
    pub fn duration(&self) -> u64 {
        (self.end - self.start) as u64
    }
}

/// An unordered pair of distinct participant ids, stored in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    a: String,
    b: String,
}

impl Pair {
    pub fn new(x: impl Into<String>, y: impl Into<String>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if x == y {
            return Err(Error::Invalid(format!(
                "pair requires two distinct participants, got {x:?} twice"
            )));
        }
        if x <= y {
            Ok(Self { a: x, b: y })
        } else {
            Ok(Self { a: y, b: x })
        }
    }

    /// Lexicographically smaller id.
    pub fn first(&self) -> &str {
        &self.a
    }

    /// Lexicographically larger id.
    pub fn second(&self) -> &str {
        &self.b
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Reads contact events from CSV with header `start,end,a,b`.
///
/// Accepts LF or CRLF line endings. Errors carry the 1-based line number of
/// the offending row; the header is line 1.
pub fn parse_events<R: Read>(reader: R) -> Result<Vec<ContactEvent>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);

    let headers = rdr.headers().map_err(|e| csv_error(&e))?;
    if headers.iter().ne(EVENT_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "expected header {:?}, got {:?}",
                EVENT_HEADER.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut events = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error(&e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 4 {
            return Err(Error::Parse {
                line,
                message: format!("expected 4 fields, got {}", record.len()),
            });
        }
        let start = parse_timestamp(&record[0], "start", line)?;
        let end = parse_timestamp(&record[1], "end", line)?;
        let (a, b) = (&record[2], &record[3]);
        if a.is_empty() || b.is_empty() {
            return Err(Error::Validation {
                line,
                message: "participant id must be non-empty".into(),
            });
        }
        if end <= start {
            return Err(Error::Validation {
                line,
                message: format!("contact must end after it starts (start {start}, end {end})"),
            });
        }
        if a == b {
            return Err(Error::Validation {
                line,
                message: format!("contact requires two distinct participants, got {a:?} twice"),
            });
        }
        events.push(ContactEvent {
            start,
            end,
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    Ok(events)
}

/// Writes events as CSV in the format accepted by [`parse_events`].
pub fn write_events<W: Write>(events: &[ContactEvent], writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(EVENT_HEADER).map_err(|e| csv_error(&e))?;
    for ev in events {
        wtr.write_record([
            ev.start.to_string().as_str(),
            ev.end.to_string().as_str(),
            &ev.a,
            &ev.b,
        ])
        .map_err(|e| csv_error(&e))?;
    }
    wtr.flush()?;
    Ok(())
}

pub(crate) fn csv_error(err: &csv::Error) -> Error {
    let line = err.position().map_or(0, |p| p.line());
    Error::Parse {
        line,
        message: err.to_string(),
    }
}

fn parse_timestamp(field: &str, name: &str, line: u64) -> Result<i64> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{name} must be an integer timestamp, got {field:?}"),
    })
}

/// Undirected weighted graph over participants.
///
/// Edge weight is the total contact duration in seconds between the two
/// endpoints, always positive. Vertices are held in lexicographic order, so
/// iteration order is deterministic and index order equals id order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContactGraph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<(usize, u64)>>,
    edge_count: usize,
}

impl ContactGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Aggregates events into a graph: one edge per unordered pair with at
    /// least one event, weighted by the summed durations.
    pub fn from_events<'a, I>(events: I) -> Self
    where
        I: IntoIterator<Item = &'a ContactEvent> + Clone,
    {
        let mut id_set = BTreeSet::new();
        for ev in events.clone() {
            id_set.insert(ev.a.as_str());
            id_set.insert(ev.b.as_str());
        }
        let ids: Vec<String> = id_set.into_iter().map(String::from).collect();
        let index: HashMap<String, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();

        let mut weights: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for ev in events {
            let (i, j) = (index[&ev.a], index[&ev.b]);
            let key = (i.min(j), i.max(j));
            *weights.entry(key).or_insert(0) += ev.duration();
        }

        Self::assemble(ids, index, weights)
    }

    /// Builds a graph directly from weighted edges. Duplicate pairs are
    /// summed; weights must be positive and endpoints distinct.
    pub fn from_weighted_edges<S, I>(edges: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = (S, S, u64)>,
    {
        let mut raw: Vec<(String, String, u64)> = Vec::new();
        for (a, b, w) in edges {
            let (a, b) = (a.into(), b.into());
            if a == b {
                return Err(Error::Invalid(format!(
                    "edge requires two distinct participants, got {a:?} twice"
                )));
            }
            if w == 0 {
                return Err(Error::Invalid(format!(
                    "edge weight must be positive, got 0 for ({a:?}, {b:?})"
                )));
            }
            raw.push((a, b, w));
        }

        let mut id_set = BTreeSet::new();
        for (a, b, _) in &raw {
            id_set.insert(a.clone());
            id_set.insert(b.clone());
        }
        let ids: Vec<String> = id_set.into_iter().collect();
        let index: HashMap<String, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();

        let mut weights: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (a, b, w) in &raw {
            let (i, j) = (index[a], index[b]);
            let key = (i.min(j), i.max(j));
            *weights.entry(key).or_insert(0) += w;
        }

        Ok(Self::assemble(ids, index, weights))
    }

    fn assemble(
        ids: Vec<String>,
        index: HashMap<String, usize>,
        weights: BTreeMap<(usize, usize), u64>,
    ) -> Self {
        let mut adj = vec![Vec::new(); ids.len()];
        for (&(i, j), &w) in &weights {
            adj[i].push((j, w));
            adj[j].push((i, w));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(n, _)| n);
        }
        let edge_count = weights.len();
        Self {
            ids,
            index,
            adj,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Participant ids in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.ids.iter().map(String::as_str)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    /// Neighbors of `id` in lexicographic order.
    pub fn neighbors(&self, id: &str) -> Result<impl Iterator<Item = &str>> {
        let i = self.idx(id)?;
        Ok(self.adj[i].iter().map(|&(n, _)| self.ids[n].as_str()))
    }

    pub fn degree(&self, id: &str) -> Result<usize> {
        Ok(self.adj[self.idx(id)?].len())
    }

    /// Total contact seconds of `id` across all its edges.
    pub fn strength(&self, id: &str) -> Result<u64> {
        Ok(self.strength_at(self.idx(id)?))
    }

    /// Weight of the edge between `x` and `y`, `None` when no edge exists.
    /// Both participants must be present in the graph.
    pub fn weight(&self, x: &str, y: &str) -> Result<Option<u64>> {
        let (i, j) = (self.idx(x)?, self.idx(y)?);
        Ok(self.weight_at(i, j))
    }

    /// All edges as `(smaller id, larger id, weight)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .filter(move |&&(j, _)| i < j)
                .map(move |&(j, w)| (self.ids[i].as_str(), self.ids[j].as_str(), w))
        })
    }

    /// Copy of the graph without edges weaker than `threshold` seconds.
    /// All vertices are kept, so lookups remain valid after pruning.
    pub fn prune_below(&self, threshold: u64) -> ContactGraph {
        let mut pruned = self.clone();
        if threshold == 0 {
            return pruned;
        }
        pruned.edge_count = 0;
        for (i, list) in pruned.adj.iter_mut().enumerate() {
            list.retain(|&(_, w)| w >= threshold);
            pruned.edge_count += list.iter().filter(|&&(j, _)| i < j).count();
        }
        pruned
    }

    pub fn max_edge_weight(&self) -> Option<u64> {
        self.adj
            .iter()
            .flat_map(|list| list.iter().map(|&(_, w)| w))
            .max()
    }

    pub(crate) fn idx(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownParticipant(id.to_string()))
    }

    pub(crate) fn id_at(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub(crate) fn neighbors_at(&self, i: usize) -> &[(usize, u64)] {
        &self.adj[i]
    }

    pub(crate) fn weight_at(&self, i: usize, j: usize) -> Option<u64> {
        self.adj[i]
            .binary_search_by_key(&j, |&(n, _)| n)
            .ok()
            .map(|pos| self.adj[i][pos].1)
    }

    pub(crate) fn strength_at(&self, i: usize) -> u64 {
        self.adj[i].iter().map(|&(_, w)| w).sum()
    }
}

/// A temporal split of an event list at a cut timestamp.
///
/// Training events are those with `start <= cut`; events straddling the cut
/// are assigned by their start alone. Core participants have at least one
/// event on each side of the cut. The test graph aggregates post-cut events
/// whose endpoints are both core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalSplit {
    train: ContactGraph,
    test: ContactGraph,
    core: BTreeSet<String>,
    cut: i64,
}

impl TemporalSplit {
    pub fn at(events: &[ContactEvent], cut: i64) -> Self {
        let mut before: BTreeSet<&str> = BTreeSet::new();
        let mut after: BTreeSet<&str> = BTreeSet::new();
        for ev in events {
            let side = if ev.start <= cut {
                &mut before
            } else {
                &mut after
            };
            side.insert(ev.a.as_str());
            side.insert(ev.b.as_str());
        }
        let core: BTreeSet<String> = before
            .intersection(&after)
            .map(|id| id.to_string())
            .collect();

        let train = ContactGraph::from_events(events.iter().filter(|ev| ev.start <= cut));
        let test = ContactGraph::from_events(events.iter().filter(|ev| {
            ev.start > cut && core.contains(&ev.a) && core.contains(&ev.b)
        }));

        Self {
            train,
            test,
            core,
            cut,
        }
    }

    /// Assembles a split from pre-built graphs, checking the structural
    /// invariants: core participants appear in the training graph with at
    /// least one edge, and every test vertex is core.
    pub fn from_parts(
        train: ContactGraph,
        test: ContactGraph,
        core: BTreeSet<String>,
        cut: i64,
    ) -> Result<Self> {
        for id in &core {
            if !train.contains(id) || train.degree(id)? == 0 {
                return Err(Error::Invalid(format!(
                    "core participant {id:?} has no training contact"
                )));
            }
        }
        for id in test.vertices() {
            if !core.contains(id) {
                return Err(Error::Invalid(format!(
                    "test participant {id:?} is not core"
                )));
            }
        }
        Ok(Self {
            train,
            test,
            core,
            cut,
        })
    }

    pub fn train(&self) -> &ContactGraph {
        &self.train
    }

    pub fn test(&self) -> &ContactGraph {
        &self.test
    }

    pub fn core(&self) -> &BTreeSet<String> {
        &self.core
    }

    pub fn cut(&self) -> i64 {
        self.cut
    }

    pub fn is_core(&self, id: &str) -> bool {
        self.core.contains(id)
    }

    /// Total post-cut contact seconds between two core participants,
    /// 0 when the pair never meets after the cut.
    pub fn future_weight(&self, pair: &Pair) -> u64 {
        if !self.test.contains(pair.first()) || !self.test.contains(pair.second()) {
            return 0;
        }
        self.test
            .weight(pair.first(), pair.second())
            .expect("both endpoints verified present")
            .unwrap_or(0)
    }
}
