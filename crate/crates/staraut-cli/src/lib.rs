//! JSON formats and command implementations behind the `staraut` binary.

pub mod commands;
pub mod json;
