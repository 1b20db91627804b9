//! JSON run reports: one envelope for every subcommand.
//!
//! Identical inputs (and seed, where one applies) produce byte-identical
//! reports; wall-clock timing is therefore only included when explicitly
//! requested with `--timings`.

use std::fs;
use std::io::Write;

use anyhow::{Context, Result};
use serde::Serialize;

#[derive(Serialize)]
pub struct RunReport<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub params: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl<T: Serialize> RunReport<T> {
    pub fn new(subcommand: &'static str, params: serde_json::Value, results: T) -> Self {
        RunReport {
            tool: "exmat",
            version: env!("CARGO_PKG_VERSION"),
            subcommand,
            params,
            seed: None,
            results,
            timing_ms: None,
        }
    }

    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

/// Writes rendered text to a path, `-` meaning stdout.
pub fn write_output(dest: &str, text: &str) -> Result<()> {
    if dest == "-" {
        std::io::stdout().write_all(text.as_bytes()).context("writing to stdout")
    } else {
        fs::write(dest, text).with_context(|| format!("writing {dest}"))
    }
}
