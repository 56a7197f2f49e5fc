//! Library surface of the powideal CLI, exposed so integration tests can
//! drive the report types and sweep machinery directly.

pub mod args;
pub mod cache;
pub mod commands;
pub mod output;
pub mod sweep;
