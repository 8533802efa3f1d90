//! Lexical alignment: the category vector, sentence embeddings, and the
//! per-sentence dot-product scores between them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{encode_ascii, pad_matrix, AsciiMatrix};
use crate::matrix::Matrix;
use crate::pca::{self, PcaModel};
use crate::scalar::Scalar;

/// Number of lexical categories, and so the embedding dimension.
pub const CATEGORY_COUNT: usize = 17;

pub const CANONICAL_CATEGORIES: [&str; CATEGORY_COUNT] = [
    "abbreviation",
    "adjective",
    "adposition",
    "adverb",
    "affix",
    "conjunction",
    "contraction",
    "determiner",
    "interjection",
    "noun",
    "other",
    "phrase",
    "predeterminer",
    "preposition",
    "pronoun",
    "symbol",
    "verb",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexicalCategorySet {
    names: Vec<String>,
}

impl LexicalCategorySet {
    pub fn canonical() -> Self {
        Self {
            names: CANONICAL_CATEGORIES.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Accepts any ordering of seventeen names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.len() != CATEGORY_COUNT {
            return Err(Error::DimensionMismatch {
                expected: CATEGORY_COUNT,
                got: names.len(),
            });
        }
        Ok(Self {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Names with the first letter upper-cased, as they are encoded.
    pub fn display_names(&self) -> Vec<String> {
        self.names.iter().map(|n| capitalize(n)).collect()
    }

    /// Padded ASCII rows of the capitalized names.
    pub fn ascii_matrix(&self) -> Result<AsciiMatrix> {
        let rows: Vec<Vec<u8>> = self.display_names().iter().map(|n| encode_ascii(n)).collect();
        pad_matrix(&rows)
    }
}

impl Default for LexicalCategorySet {
    fn default() -> Self {
        Self::canonical()
    }
}

pub fn capitalize(name: &str) -> String {
    let mut chars = name.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// One-dimensional PCA coordinates of the category names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlignmentVector<T> {
    pub values: Vec<T>,
    /// Explained variance retained by the single component.
    pub cumulative_explained_variance: T,
    /// The `k = 1` model fitted on the category matrix.
    pub model: PcaModel<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentenceEmbedding<T> {
    pub corpus_id: String,
    /// `n x 17`, one row per sentence.
    pub coords: Matrix<T>,
    /// The `k = 17` model fitted on this corpus.
    pub model: PcaModel<T>,
}

impl<T: Scalar> SentenceEmbedding<T> {
    pub fn len(&self) -> usize {
        self.coords.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.rows() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlignmentScores<T> {
    pub corpus_id: String,
    pub scores: Vec<T>,
}

impl<T: Scalar> AlignmentScores<T> {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Share of scores that are exactly zero.
    pub fn zero_fraction(&self) -> f64 {
        if self.scores.is_empty() {
            return 0.0;
        }
        let zeros = self.scores.iter().filter(|s| s.is_zero()).count();
        zeros as f64 / self.scores.len() as f64
    }
}

pub fn build_category_vector<T: Scalar>(
    categories: &LexicalCategorySet,
) -> Result<AlignmentVector<T>> {
    let data = categories.ascii_matrix()?.to_matrix::<T>();
    let model = pca::fit(&data, 1)?;
    let values = pca::project(&data, &model)?.column(0);
    Ok(AlignmentVector {
        values,
        cumulative_explained_variance: model.cumulative_explained_variance,
        model,
    })
}

/// Fits a 17-component PCA on the corpus matrix and projects it.
///
/// Matrices narrower than 17 columns are zero-padded first, leaving the extra
/// components with zero eigenvalues.
pub fn embed_sentences<T: Scalar>(
    matrix: &AsciiMatrix,
    corpus_id: &str,
) -> Result<SentenceEmbedding<T>> {
    if matrix.rows() < 2 {
        return Err(Error::CorpusTooSmall(matrix.rows()));
    }
    let data = matrix.to_matrix::<T>().pad_columns(CATEGORY_COUNT);
    let model = pca::fit(&data, CATEGORY_COUNT)?;
    let coords = pca::project(&data, &model)?;
    Ok(SentenceEmbedding {
        corpus_id: corpus_id.to_string(),
        coords,
        model,
    })
}

/// `score_i = Σ_j J_i[j] · K[j]` for every sentence row `J_i`.
pub fn alignment_scores<T: Scalar>(
    embedding: &SentenceEmbedding<T>,
    k_vector: &AlignmentVector<T>,
) -> Result<AlignmentScores<T>> {
    if k_vector.values.len() != CATEGORY_COUNT {
        return Err(Error::DimensionMismatch {
            expected: CATEGORY_COUNT,
            got: k_vector.values.len(),
        });
    }
    if embedding.coords.cols() != CATEGORY_COUNT {
        return Err(Error::DimensionMismatch {
            expected: CATEGORY_COUNT,
            got: embedding.coords.cols(),
        });
    }
    let scores = embedding
        .coords
        .iter_rows()
        .map(|row| {
            row.iter()
                .zip(&k_vector.values)
                .fold(T::zero(), |acc, (&j, &k)| acc + j * k)
        })
        .collect();
    Ok(AlignmentScores {
        corpus_id: embedding.corpus_id.clone(),
        scores,
    })
}
