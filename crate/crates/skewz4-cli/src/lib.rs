//! Command layer for the skewz4 library: polynomial text parsing, the
//! reference-code manifest, parallel distance computation, and the
//! reports behind the `skewz4` binary's subcommands.

pub mod commands;
pub mod distance;
pub mod manifest;
pub mod output;
pub mod parse;
