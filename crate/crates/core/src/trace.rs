//! Ordered log of the proof steps an extraction takes.
//!
//! Each event names the claim being executed, the case inside it, and the
//! vertices bound at that step under their proof labels. The JSON shape
//! `{"events":[{"claim":...,"case":...,"bind":{...}}]}` is stable and used
//! by regression tests.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub claim: String,
    pub case: String,
    pub bind: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionTrace {
    pub events: Vec<TraceEvent>,
}

impl ExtractionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, claim: &str, case: &str, bind: &[(&str, usize)]) {
        self.events.push(TraceEvent {
            claim: claim.to_string(),
            case: case.to_string(),
            bind: bind.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialization cannot fail")
    }

    /// Every bound vertex must exist in the graph the trace was taken from.
    pub fn binds_in_range(&self, n: usize) -> bool {
        self.events
            .iter()
            .all(|e| e.bind.values().all(|&v| v < n))
    }
}
