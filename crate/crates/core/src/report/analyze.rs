use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{RunConfig, COMBINED_LABEL};
use crate::align::{
    alignment_scores, build_category_vector, embed_sentences, AlignmentVector, LexicalCategorySet,
};
use crate::error::{Error, Result};
use crate::ingest::{load_corpus_with, Corpus, CorpusSource, SplitMode};
use crate::stats::{histogram, normality_report, Histogram, NormalityReport};

/// Fewest sentences the normality tests accept.
pub const MIN_SENTENCES: usize = 3;

/// Settings that affect a single corpus analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    pub bins: usize,
    pub alpha: f64,
    pub verbose_pca: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        let cfg = RunConfig::default();
        Self::from(&cfg)
    }
}

impl From<&RunConfig> for AnalysisOptions {
    fn from(cfg: &RunConfig) -> Self {
        Self {
            bins: cfg.bins,
            alpha: cfg.alpha,
            verbose_pca: cfg.verbose_pca,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaSummary {
    pub n_components: usize,
    pub eigenvalues: Vec<f64>,
    pub explained_variance_ratio: Vec<f64>,
    pub cumulative_explained_variance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryVectorSummary {
    pub names: Vec<String>,
    pub values: Vec<f64>,
    pub cumulative_explained_variance: f64,
}

impl CategoryVectorSummary {
    pub fn new(set: &LexicalCategorySet, k: &AlignmentVector<f64>) -> Self {
        Self {
            names: set.display_names(),
            values: k.values.clone(),
            cumulative_explained_variance: k.cumulative_explained_variance,
        }
    }
}

/// Everything produced for one corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub corpus_id: String,
    pub source: String,
    pub sample_size: usize,
    /// Width of the padded ASCII matrix before any widening to 17 columns.
    pub matrix_width: usize,
    pub normality: NormalityReport<f64>,
    pub dot_histogram: Histogram<f64>,
    pub length_histogram: Histogram<f64>,
    pub zero_score_fraction: f64,
    pub sentence_pca: PcaSummary,
    pub category_vector: CategoryVectorSummary,
    pub sentence_lengths: Vec<usize>,
    pub scores: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CorpusOutcome {
    Analyzed(Box<CorpusReport>),
    Skipped { corpus_id: String, reason: String },
}

impl CorpusOutcome {
    pub fn corpus_id(&self) -> &str {
        match self {
            Self::Analyzed(r) => &r.corpus_id,
            Self::Skipped { corpus_id, .. } => corpus_id,
        }
    }

    pub fn report(&self) -> Option<&CorpusReport> {
        match self {
            Self::Analyzed(r) => Some(r),
            Self::Skipped { .. } => None,
        }
    }
}

/// The canonical category vector, in `f64`.
pub fn canonical_category_vector() -> Result<AlignmentVector<f64>> {
    build_category_vector(&LexicalCategorySet::canonical())
}

/// Loads a source and runs the full pipeline on it.
pub fn analyze_corpus(
    source: &CorpusSource,
    label: &str,
    mode: SplitMode,
    options: &AnalysisOptions,
) -> Result<CorpusOutcome> {
    let corpus = load_corpus_with(source, label, mode)?;
    let k = canonical_category_vector()?;
    analyze_loaded(&corpus, &k, options)
}

/// Pipeline on an already-loaded corpus: pad, embed, score, test, bin.
pub fn analyze_loaded(
    corpus: &Corpus,
    k_vector: &AlignmentVector<f64>,
    options: &AnalysisOptions,
) -> Result<CorpusOutcome> {
    let n = corpus.len();
    let skip = |reason: String| {
        Ok(CorpusOutcome::Skipped {
            corpus_id: corpus.id.clone(),
            reason,
        })
    };
    if n < MIN_SENTENCES {
        return skip(format!(
            "too small: {n} sentence(s), need at least {MIN_SENTENCES}"
        ));
    }
    let matrix = corpus.ascii_matrix()?;
    let embedding = embed_sentences::<f64>(&matrix, &corpus.id)?;
    let scores = alignment_scores(&embedding, k_vector)?;
    let normality = match normality_report(&scores.scores, options.alpha) {
        Ok(r) => r,
        Err(Error::ZeroVariance) => return skip("zero variance: all scores are equal".into()),
        Err(e) => return Err(e),
    };
    let lengths = corpus.sentence_lengths();
    let length_values: Vec<f64> = lengths.iter().map(|&l| l as f64).collect();
    let model = &embedding.model;
    Ok(CorpusOutcome::Analyzed(Box::new(CorpusReport {
        corpus_id: corpus.id.clone(),
        source: corpus.source.clone(),
        sample_size: n,
        matrix_width: matrix.cols(),
        normality,
        dot_histogram: histogram(&scores.scores, options.bins)?,
        length_histogram: histogram(&length_values, options.bins)?,
        zero_score_fraction: scores.zero_fraction(),
        sentence_pca: PcaSummary {
            n_components: model.n_components(),
            eigenvalues: model.eigenvalues.clone(),
            explained_variance_ratio: model.explained_variance_ratio.clone(),
            cumulative_explained_variance: model.cumulative_explained_variance,
            components: options.verbose_pca.then(|| model.components.to_rows()),
        },
        category_vector: CategoryVectorSummary::new(&LexicalCategorySet::canonical(), k_vector),
        sentence_lengths: lengths,
        scores: scores.scores,
    })))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub category_vector: CategoryVectorSummary,
    /// Analyzed rows by ascending sample size, then skipped rows.
    pub rows: Vec<CorpusOutcome>,
}

impl BatchReport {
    pub fn reports(&self) -> impl Iterator<Item = &CorpusReport> + '_ {
        self.rows.iter().filter_map(CorpusOutcome::report)
    }

    pub fn skipped(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.rows.iter().filter_map(|r| match r {
            CorpusOutcome::Skipped { corpus_id, reason } => Some((corpus_id.as_str(), reason.as_str())),
            CorpusOutcome::Analyzed(_) => None,
        })
    }
}

/// Analyzes every corpus in the config, plus the concatenated corpus when
/// `combined` is set.
pub fn batch(config: &RunConfig) -> Result<BatchReport> {
    config.validate()?;
    if config.corpora.is_empty() {
        return Err(Error::Config("no corpora configured".into()));
    }
    let options = AnalysisOptions::from(config);
    let k = canonical_category_vector()?;

    let corpora = config
        .corpora
        .iter()
        .map(|c| load_corpus_with(&CorpusSource::File(c.path.clone()), &c.label, c.split_mode()))
        .collect::<Result<Vec<_>>>()?;

    let mut jobs: Vec<Corpus> = corpora;
    if config.combined {
        let sentences: Vec<String> = jobs.iter().flat_map(|c| c.sentences.clone()).collect();
        let sources: Vec<&str> = jobs.iter().map(|c| c.source.as_str()).collect();
        jobs.push(Corpus {
            id: COMBINED_LABEL.to_string(),
            sentences,
            source: sources.join(";"),
        });
    }

    let outcomes = jobs
        .par_iter()
        .map(|c| analyze_loaded(c, &k, &options))
        .collect::<Result<Vec<_>>>()?;

    let (mut analyzed, skipped): (Vec<_>, Vec<_>) = outcomes
        .into_iter()
        .partition(|o| matches!(o, CorpusOutcome::Analyzed(_)));
    if analyzed.is_empty() {
        return Err(Error::EmptyTable);
    }
    analyzed.sort_by_key(|o| o.report().map_or(usize::MAX, |r| r.sample_size));
    analyzed.extend(skipped);
    Ok(BatchReport {
        category_vector: CategoryVectorSummary::new(&LexicalCategorySet::canonical(), &k),
        rows: analyzed,
    })
}
