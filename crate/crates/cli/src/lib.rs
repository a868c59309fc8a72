//! Serialization used by the `unifock` binary.

pub mod graph;
pub mod json;
