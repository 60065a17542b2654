//! Link prediction and contact statistics for temporal face-to-face
//! contact networks.
//!
//! The library ingests timestamped contact events, aggregates them into
//! weighted contact graphs, splits them at a cut timestamp into training and
//! test periods, and evaluates how well weighted and unweighted proximity
//! measures rank future contacts. Companion modules compute descriptive
//! network statistics, discover attribute subgroups with unusual contact
//! behavior, and generate synthetic event data for experiments.

pub mod contact_data;
pub mod evaluation;
pub mod predictors;
pub mod statistics;
pub mod subgroups;
pub mod synth;
pub mod error;

pub use contact_data::{ContactEvent, ContactGraph, Pair, TemporalSplit};
pub use error::{Error, Result};
