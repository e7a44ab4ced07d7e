//! Reporting layer for the two-contour cluster simulator: reference
//! trajectories with replay, plain-text trajectory rendering, and the JSON
//! documents the CLI prints.

pub mod docs;
pub mod golden;
pub mod render;

pub use docs::{to_json_line, AuditDoc, OrbitDoc, SpectrumDoc, SpectrumEntryDoc, VerifyDoc};
pub use golden::{corpus, replay_golden, GoldenSequence, Misprint, ReplayFailure, ReplayReport};
pub use render::render_trajectory;
