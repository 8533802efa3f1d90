use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::SplitMode;
use crate::stats::DEFAULT_ALPHA;

pub const DEFAULT_BINS: usize = 30;
/// Label of the concatenated-corpus row.
pub const COMBINED_LABEL: &str = "Combined";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub label: String,
    pub path: PathBuf,
    #[serde(default)]
    pub pre_split: bool,
}

impl CorpusSpec {
    pub fn split_mode(&self) -> SplitMode {
        if self.pre_split {
            SplitMode::PreSplit
        } else {
            SplitMode::Split
        }
    }
}

/// Settings for one analysis run.
///
/// On disk this is JSON:
///
/// ```json
/// {
///   "corpora": [{ "label": "essay", "path": "essay.txt", "pre_split": false }],
///   "bins": 30,
///   "alpha": 0.05,
///   "combined": true,
///   "verbose_pca": false,
///   "out": "reports"
/// }
/// ```
///
/// Only `corpora` is required. Relative paths resolve against the directory
/// holding the config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub corpora: Vec<CorpusSpec>,
    #[serde(default = "default_bins")]
    pub bins: usize,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default)]
    pub combined: bool,
    #[serde(default)]
    pub verbose_pca: bool,
    #[serde(default = "default_out", rename = "out")]
    pub out_dir: PathBuf,
}

fn default_bins() -> usize {
    DEFAULT_BINS
}

fn default_alpha() -> f64 {
    DEFAULT_ALPHA
}

fn default_out() -> PathBuf {
    PathBuf::from("lexibalance-out")
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            corpora: Vec::new(),
            bins: DEFAULT_BINS,
            alpha: DEFAULT_ALPHA,
            combined: false,
            verbose_pca: false,
            out_dir: default_out(),
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str, base_dir: &Path) -> Result<Self> {
        let mut cfg: RunConfig = serde_json::from_str(text)?;
        for c in &mut cfg.corpora {
            if c.path.is_relative() {
                c.path = base_dir.join(&c.path);
            }
        }
        if cfg.out_dir.is_relative() {
            cfg.out_dir = base_dir.join(&cfg.out_dir);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::from_json(&text, base)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Config(format!("alpha must lie in (0, 1), got {}", self.alpha)));
        }
        if self.bins == 0 {
            return Err(Error::Config("bins must be at least 1".into()));
        }
        let mut seen = HashSet::new();
        for c in &self.corpora {
            if c.label.trim().is_empty() {
                return Err(Error::Config("corpus labels must be non-empty".into()));
            }
            if !seen.insert(c.label.as_str()) {
                return Err(Error::Config(format!("duplicate label {:?}", c.label)));
            }
            if self.combined && c.label == COMBINED_LABEL {
                return Err(Error::Config(format!(
                    "label {COMBINED_LABEL:?} is reserved for the combined row"
                )));
            }
        }
        Ok(())
    }
}
