//! Sentence-structure balance analysis.
//!
//! Sentences are encoded as rows of ASCII codes, compressed to seventeen
//! dimensions with principal component analysis, and scored against a
//! one-dimensional compression of seventeen lexical category names. The
//! distribution of those alignment scores is then tested for normality with
//! the Shapiro-Wilk and Anderson-Darling tests.
//!
//! The numerical modules ([`pca`], [`align`], [`stats`]) are generic over
//! [`Scalar`]; the aliases below fix the common `f64` and `f32` instances.

pub mod align;
pub mod error;
pub mod ingest;
pub mod matrix;
pub mod pca;
pub mod report;
pub mod scalar;
pub mod stats;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Matrix64 = matrix::Matrix<f64>;
pub type Matrix32 = matrix::Matrix<f32>;
pub type PcaModel64 = pca::PcaModel<f64>;
pub type PcaModel32 = pca::PcaModel<f32>;
pub type AlignmentVector64 = align::AlignmentVector<f64>;
pub type AlignmentVector32 = align::AlignmentVector<f32>;
pub type SentenceEmbedding64 = align::SentenceEmbedding<f64>;
pub type SentenceEmbedding32 = align::SentenceEmbedding<f32>;
pub type AlignmentScores64 = align::AlignmentScores<f64>;
pub type AlignmentScores32 = align::AlignmentScores<f32>;
pub type SwCoefficients64 = stats::SwCoefficients<f64>;
pub type Histogram64 = stats::Histogram<f64>;
