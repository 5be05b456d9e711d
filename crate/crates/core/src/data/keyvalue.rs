//! Plain `key = value` text files: one entry per line, `#` starts a comment.

use std::fmt::Display;
use std::str::FromStr;

/// One parsed entry with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub key: String,
    pub value: String,
}

impl Entry {
    pub fn error(&self, msg: impl Display) -> String {
        format!("line {} ({}): {msg}", self.line, self.key)
    }

    pub fn parse<T: FromStr>(&self) -> Result<T, String>
    where
        T::Err: Display,
    {
        self.value
            .trim()
            .parse::<T>()
            .map_err(|e| self.error(format!("cannot parse {:?}: {e}", self.value)))
    }

    /// Whitespace-separated list of values.
    pub fn parse_list<T: FromStr>(&self) -> Result<Vec<T>, String>
    where
        T::Err: Display,
    {
        self.value
            .split_whitespace()
            .map(|tok| {
                tok.parse::<T>()
                    .map_err(|e| self.error(format!("cannot parse {tok:?}: {e}")))
            })
            .collect()
    }
}

pub fn parse(text: &str) -> Result<Vec<Entry>, String> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value, got {raw:?}", idx + 1))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(format!("line {}: empty key", idx + 1));
        }
        out.push(Entry {
            line: idx + 1,
            key: key.to_string(),
            value: value.trim().to_string(),
        });
    }
    Ok(out)
}

/// Last value for `key`, if present.
pub fn lookup<'a>(entries: &'a [Entry], key: &str) -> Option<&'a Entry> {
    entries.iter().rev().find(|e| e.key == key)
}
