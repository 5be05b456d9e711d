//! Run manifests: the resolved inputs and settings of one command, written as
//! `key = value` lines so the run can be repeated exactly.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use mrpca_core::data::keyvalue::{self, Entry};

use crate::exit::UsageError;

pub const FILE_NAME: &str = "manifest.txt";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunManifest {
    pub entries: Vec<(String, String)>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        let mut m = RunManifest::default();
        m.push("command", command);
        m.push("tool_version", TOOL_VERSION);
        m
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    /// Exact decimal form, so parsing returns the same `f64`.
    pub fn push_f64(&mut self, key: &str, value: f64) {
        self.push(key, format!("{value:?}"));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn command(&self) -> Option<&str> {
        self.get("command")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("# mrpca run manifest\n");
        for (k, v) in &self.entries {
            let _ = writeln!(s, "{k} = {v}");
        }
        s
    }

    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let entries = keyvalue::parse(text)?
            .into_iter()
            .map(|Entry { key, value, .. }| (key, value))
            .collect();
        Ok(RunManifest { entries })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read manifest {}", path.display()))?;
        Self::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())).into())
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        let path = dir.join(FILE_NAME);
        std::fs::write(&path, self.to_text()).with_context(|| format!("cannot write {}", path.display()))
    }
}
