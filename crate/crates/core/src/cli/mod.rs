//! Object files, command dispatch and verification suites.

pub mod corpus;
pub mod format;
pub mod report;
pub mod commands;
pub mod suites;
