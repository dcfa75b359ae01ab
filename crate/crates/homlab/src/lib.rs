//! Census sweeps, identity checks and file formats on top of `homlab_core`.

pub mod checks;
pub mod config;
pub mod graph6;
pub mod random;
pub mod report;
pub mod target_json;
