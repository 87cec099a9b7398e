//! Diagram emission, reports, and the verification driver behind the CLI.
//!
//! Diagram stages, output formats, and checks are strategies registered by
//! name; the command line selects among them at runtime.

mod analyze;
mod checks;
mod config;
mod emit;
mod graph;
mod registry;
mod stage;

pub use analyze::{analyze, AnalysisReport};
pub use checks::{
    catalog_groups, checks, run_checks, selftest, Check, CheckOutcome, NamedGroup, SelftestReport,
    VerificationReport, CATALOG_GROUPS, CATALOG_TRIPLES, DEFAULT_ORDER_BOUND,
};
pub use config::{GeneratorSpec, JobConfig, TestHooks};
pub use emit::{emit_dot, emit_json, formats, GraphFormat};
pub use graph::{to_graph, DynkinGraph, Edge, Vertex};
pub use registry::{Registry, Strategy};
pub use stage::{stages, DiagramStage, Milnor, MilnorQuotient, Orbit, Resolution};
