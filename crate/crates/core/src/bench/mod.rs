//! Loading graphs, building dynamic scenarios and measuring runs.

pub mod experiment;
pub mod io;
pub mod rank;
pub mod scenario;

pub use experiment::{run_experiment, ExperimentConfig, OutputFormat, ReportWriter, RunReport};
pub use io::{load_edge_list, parse_edge_list, write_edge_list, Format, LoadedGraph, TimedEdge};
pub use rank::{rank_error, ranks};
pub use scenario::{build_scenario, edges_as_events, Scenario, ScenarioKind, ScenarioSpec};
