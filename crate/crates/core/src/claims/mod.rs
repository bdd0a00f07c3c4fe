//! Claim checks.

pub mod closed_forms;
pub mod qsets;
pub mod reduce;
pub mod registry;
pub mod search;
