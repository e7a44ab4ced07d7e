//! Exact simulator and verifier for a closed two-contour cluster system.
//!
//! Two rings of `n` cells share two nodes; each ring carries one cluster
//! of contiguous particles that advances one cell per tick unless delayed
//! at a node. This crate implements the transition rules exactly, detects
//! limit cycles, computes average cluster speeds as exact rationals,
//! classifies whole parameter points by their velocity spectrum, and
//! cross-checks a catalog of behavior-region results against exhaustive
//! simulation.

pub mod dynamics;
pub mod model;
pub mod orbit;
pub mod spectrum;
pub mod sweep;
pub mod theorems;

pub use dynamics::{
    is_blocked, step, step_unrestricted, trajectory, BlockReason, DynamicsError, StepResult,
};
pub use model::{
    enumerate_acceptable_states, is_acceptable, occupied_cells, occupies_node, ClusterId, NodeId,
    ParamError, SystemParams, SystemState,
};
pub use orbit::{analyze_orbit, OrbitSummary, Outcome, Velocity};
pub use spectrum::{
    classify_scenario, classify_spectrum, spectrum_with_audit, velocity_spectrum, PointAudit,
    ScenarioLabel, SpectrumEntry, VelocitySpectrum,
};
pub use sweep::{emit_grid, sweep_grid, GridCell, GridFormat, PhaseGrid};
pub use theorems::{
    applicable_results, verify, Claim, ReportEntry, ResultId, TheoremPrediction, VerificationReport,
    Verdict,
};
