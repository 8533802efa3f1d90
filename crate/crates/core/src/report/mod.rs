//! Pipeline orchestration and report output.

mod analyze;
mod config;
pub mod render;

pub use analyze::{
    analyze_corpus, analyze_loaded, batch, canonical_category_vector, AnalysisOptions,
    BatchReport, CategoryVectorSummary, CorpusOutcome, CorpusReport, PcaSummary, MIN_SENTENCES,
};
pub use config::{CorpusSpec, RunConfig, COMBINED_LABEL, DEFAULT_BINS};
