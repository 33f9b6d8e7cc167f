//! `key=value` settings shared by the command-line tools. Recognized keys:
//! `guard_log2`, `orbit_ceiling_log2` and `workers`. Blank lines and `#`
//! comments are skipped.

use std::path::Path;

use crate::code::DEFAULT_GUARD_LOG2;
use crate::error::{Error, Result};
use crate::search::{SearchOptions, DEFAULT_CEILING_LOG2};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub guard_log2: usize,
    pub orbit_ceiling_log2: u32,
    /// 0 means one worker per core.
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            guard_log2: DEFAULT_GUARD_LOG2,
            orbit_ceiling_log2: DEFAULT_CEILING_LOG2,
            workers: 0,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got `{line}`")))?;
            let value = value.trim();
            let bad = || err(format!("`{value}` is not a non-negative integer"));
            match key.trim() {
                "guard_log2" => cfg.guard_log2 = value.parse().map_err(|_| bad())?,
                "orbit_ceiling_log2" => cfg.orbit_ceiling_log2 = value.parse().map_err(|_| bad())?,
                "workers" => cfg.workers = value.parse().map_err(|_| bad())?,
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn search_options(&self) -> SearchOptions {
        SearchOptions {
            workers: self.workers,
            ceiling_log2: self.orbit_ceiling_log2,
            prune: true,
        }
    }
}
