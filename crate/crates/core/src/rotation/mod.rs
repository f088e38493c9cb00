//! Pósa rotations, long cycles through rotation closures and chorded odd
//! cycles.

mod closure;
mod longest;
mod posa;
mod theta;

pub use closure::{
    elementary_rotation, rotation_closure, rotation_closure_with_budget, ClosureMode, Derivation, RotationState,
};
pub use longest::{longest_path, LongestPath, PathMode, DEFAULT_PATH_LIMIT};
pub use posa::{posa_long_cycle, posa_long_cycle_with, CycleConstruction, PosaOptions, PosaOutcome, PosaResult};
pub use theta::{
    theta_from_cycle, theta_subgraph, theta_subgraph_with, ChordedCycle, HostSource, ThetaBranch, ThetaCase,
    ThetaConstruction, ThetaOutcome, ThetaReport,
};
