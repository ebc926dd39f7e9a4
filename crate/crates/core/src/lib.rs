//! Certificate engine for power-of-two cycles in graphs of minimum degree
//! at least three.
//!
//! For any graph with minimum degree >= 3 the extractors in [`extract`]
//! produce a verifiable witness: a 4-cycle, an 8-cycle, or an induced path
//! on eight vertices (`eg_witness`), respectively a 4-cycle or an induced
//! path on five vertices (`p5_witness`). Every witness is checked by an
//! independent verifier before it is returned. The [`enumerate`] module
//! generates all small graphs with a degree floor, one per isomorphism
//! class, and sweeps the extractors over them exhaustively.
//!
//! ```
//! use egc_core::{eg_witness, families, verify_witness, WitnessKind};
//!
//! let g = families::petersen();
//! let (w, trace) = eg_witness(&g).unwrap();
//! assert_eq!(w.kind, WitnessKind::Cycle8);
//! assert!(verify_witness(&g, &w));
//! assert!(trace.to_json().contains("Lemma2.1"));
//! ```

pub mod bitset;
pub mod cut;
pub mod detect;
pub mod edgelist;
pub mod enumerate;
pub mod extract;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod sweep;
pub mod trace;
pub mod witness;

pub use bitset::VertexSet;
pub use cut::{min_vertex_cut, CncLabel, CutAnalysis, CutError};
pub use detect::{
    cycle_spectrum, find_c4, find_cycle_of_length, is_pk_free, longest_induced_path,
    power_of_two_cycle, shortest_induced_cycle_at_least, VertexCycle, VertexPath,
};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use extract::{cut_analysis_cnc, eg_witness, p5_witness, ExtractError};
pub use graph::{DegreeStats, Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use trace::{ExtractionTrace, TraceEvent};
pub use witness::{reduce_cycle, verify_witness, CycleReduction, Witness, WitnessKind};
