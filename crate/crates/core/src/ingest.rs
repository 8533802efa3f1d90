//! Corpus loading, sentence splitting and ASCII encoding.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Code substituted for characters outside the 7-bit range (`'?'`).
pub const REPLACEMENT_CODE: u8 = b'?';
/// Value written into padding cells.
pub const PAD_CODE: u8 = 0;

/// Where a corpus came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    File(PathBuf),
    Inline(String),
}

impl CorpusSource {
    pub fn file(path: impl AsRef<Path>) -> Self {
        Self::File(path.as_ref().to_path_buf())
    }

    pub fn inline(text: impl Into<String>) -> Self {
        Self::Inline(text.into())
    }

    pub fn describe(&self) -> String {
        match self {
            Self::File(p) => p.display().to_string(),
            Self::Inline(_) => "inline".to_string(),
        }
    }
}

/// How raw text becomes sentences.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitMode {
    /// Rule-based splitting on terminator runs.
    #[default]
    Split,
    /// One sentence per non-blank line.
    PreSplit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub id: String,
    pub sentences: Vec<String>,
    pub source: String,
}

impl Corpus {
    /// Builds a corpus from already-split sentences, trimming each and
    /// dropping blanks.
    pub fn from_sentences<S: AsRef<str>>(
        id: impl Into<String>,
        sentences: &[S],
        source: impl Into<String>,
    ) -> Result<Self> {
        let sentences: Vec<String> = sentences
            .iter()
            .map(|s| s.as_ref().trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if sentences.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        Ok(Self {
            id: id.into(),
            sentences,
            source: source.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    /// Character count of every sentence, in order.
    pub fn sentence_lengths(&self) -> Vec<usize> {
        self.sentences.iter().map(|s| s.chars().count()).collect()
    }

    /// Encodes and pads every sentence.
    pub fn ascii_matrix(&self) -> Result<AsciiMatrix> {
        let seqs: Vec<Vec<u8>> = self.sentences.iter().map(|s| encode_ascii(s)).collect();
        pad_matrix(&seqs)
    }
}

pub fn load_corpus(source: &CorpusSource, id: &str) -> Result<Corpus> {
    load_corpus_with(source, id, SplitMode::Split)
}

pub fn load_corpus_with(source: &CorpusSource, id: &str, mode: SplitMode) -> Result<Corpus> {
    let text = match source {
        CorpusSource::File(path) => {
            let bytes = fs::read(path).map_err(|source| Error::Read {
                path: path.clone(),
                source,
            })?;
            String::from_utf8(bytes).map_err(|_| Error::Utf8(path.display().to_string()))?
        }
        CorpusSource::Inline(text) => text.clone(),
    };
    if text.trim().is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let sentences = match mode {
        SplitMode::Split => split_sentences(&text),
        SplitMode::PreSplit => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect(),
    };
    Corpus::from_sentences(id, &sentences, source.describe())
}

#[inline]
fn is_terminator(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

/// Splits text after every maximal run of `.`, `!` or `?` that is followed by
/// whitespace or the end of the text. Terminators stay with their sentence,
/// whitespace runs (newlines included) collapse to a single space, and a
/// trailing fragment without a terminator is kept.
pub fn split_sentences(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut chars = text.chars().peekable();
    let mut pending_space = false;

    let flush = |current: &mut String, out: &mut Vec<String>| {
        let s = current.trim();
        if !s.is_empty() {
            out.push(s.to_string());
        }
        current.clear();
    };

    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            pending_space = true;
            continue;
        }
        if pending_space && !current.is_empty() {
            current.push(' ');
        }
        pending_space = false;
        current.push(c);
        if is_terminator(c) {
            while let Some(&next) = chars.peek() {
                if !is_terminator(next) {
                    break;
                }
                current.push(next);
                chars.next();
            }
            match chars.peek() {
                None => flush(&mut current, &mut out),
                Some(next) if next.is_whitespace() => flush(&mut current, &mut out),
                _ => {}
            }
        }
    }
    flush(&mut current, &mut out);
    out
}

/// Maps each character to its 7-bit code; anything above 127 becomes `'?'`.
pub fn encode_ascii(text: &str) -> Vec<u8> {
    text.chars()
        .map(|c| if c.is_ascii() { c as u8 } else { REPLACEMENT_CODE })
        .collect()
}

/// Inverse of [`encode_ascii`] for pure-ASCII input. Pad codes are dropped.
pub fn decode_ascii(codes: &[u8]) -> String {
    codes
        .iter()
        .filter(|&&c| c != PAD_CODE)
        .map(|&c| char::from(c))
        .collect()
}

/// Right-padded matrix of ASCII codes, one row per item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsciiMatrix {
    rows: usize,
    cols: usize,
    values: Vec<u8>,
    lengths: Vec<usize>,
}

impl AsciiMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Length of each row before padding.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn to_matrix<T: Scalar>(&self) -> Matrix<T> {
        let data = self.values.iter().map(|&v| T::from_count(v as usize)).collect();
        Matrix::from_vec(self.rows, self.cols, data).expect("shape is consistent")
    }

    /// Stacks the rows of several matrices, re-padding to the widest.
    pub fn concat(parts: &[&AsciiMatrix]) -> Result<AsciiMatrix> {
        let seqs: Vec<&[u8]> = parts
            .iter()
            .flat_map(|m| m.iter_rows().zip(m.lengths()).map(|(r, &len)| &r[..len]))
            .collect();
        pad_matrix(&seqs)
    }
}

/// Right-pads every sequence with [`PAD_CODE`] to the longest length.
pub fn pad_matrix<S: AsRef<[u8]>>(sequences: &[S]) -> Result<AsciiMatrix> {
    let cols = sequences.iter().map(|s| s.as_ref().len()).max().unwrap_or(0);
    if cols == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut values = vec![PAD_CODE; sequences.len() * cols];
    let mut lengths = Vec::with_capacity(sequences.len());
    for (i, s) in sequences.iter().enumerate() {
        let s = s.as_ref();
        values[i * cols..i * cols + s.len()].copy_from_slice(s);
        lengths.push(s.len());
    }
    Ok(AsciiMatrix {
        rows: sequences.len(),
        cols,
        values,
        lengths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn splits_on_terminators() {
        assert_eq!(
            split_sentences("Hello world. How are you?"),
            vec!["Hello world.", "How are you?"]
        );
        assert_eq!(split_sentences("Wait... what?!"), vec!["Wait...", "what?!"]);
        assert!(split_sentences("").is_empty());
        assert!(split_sentences("  \n\t ").is_empty());
    }

    #[test]
    fn keeps_trailing_fragment_and_inner_dots() {
        assert_eq!(split_sentences("hello world"), vec!["hello world"]);
        assert_eq!(
            split_sentences("Pi is 3.14 or so. Next"),
            vec!["Pi is 3.14 or so.", "Next"]
        );
    }

    #[test]
    fn newlines_are_whitespace() {
        assert_eq!(
            split_sentences("One line\nwraps here.\n\nTwo!"),
            vec!["One line wraps here.", "Two!"]
        );
    }

    #[test]
    fn encodes_ascii() {
        assert_eq!(encode_ascii("Affix"), vec![65, 102, 102, 105, 120]);
        assert!(encode_ascii("").is_empty());
        assert_eq!(encode_ascii("Ab€"), vec![65, 98, 63]);
    }

    #[test]
    fn pads_rows() {
        let m = pad_matrix(&[vec![65u8], vec![66, 67]]).unwrap();
        assert_eq!(m.shape(), (2, 2));
        assert_eq!(m.row(0), &[65, 0]);
        assert_eq!(m.row(1), &[66, 67]);
        assert_eq!(m.lengths(), &[1, 2]);

        let one = pad_matrix(&[vec![1u8, 2, 3]]).unwrap();
        assert_eq!(one.row(0), &[1, 2, 3]);

        let empty: Vec<Vec<u8>> = vec![vec![], vec![]];
        assert!(matches!(pad_matrix(&empty), Err(Error::EmptyMatrix)));
    }

    #[test]
    fn concat_repads_to_widest() {
        let a = pad_matrix(&[b"ab".to_vec()]).unwrap();
        let b = pad_matrix(&[b"abcd".to_vec(), b"a".to_vec()]).unwrap();
        let c = AsciiMatrix::concat(&[&a, &b]).unwrap();
        assert_eq!(c.shape(), (3, 4));
        assert_eq!(c.row(0), b"ab\0\0");
    }

    #[test]
    fn load_inline_and_errors() {
        let c = load_corpus(&CorpusSource::inline("Hi. Bye."), "x").unwrap();
        assert_eq!(c.sentences, vec!["Hi.", "Bye."]);
        assert_eq!(c.source, "inline");
        let c = load_corpus(&CorpusSource::inline("hello world"), "x").unwrap();
        assert_eq!(c.len(), 1);
        assert!(matches!(
            load_corpus(&CorpusSource::inline("   "), "x"),
            Err(Error::EmptyCorpus)
        ));
    }

    #[test]
    fn pre_split_reads_lines() {
        let src = CorpusSource::inline("first line. still first\n\n second ");
        let c = load_corpus_with(&src, "x", SplitMode::PreSplit).unwrap();
        assert_eq!(c.sentences, vec!["first line. still first", "second"]);
    }

    #[test]
    fn missing_file_is_read_error() {
        let err = load_corpus(&CorpusSource::file("/definitely/not/here.txt"), "x").unwrap_err();
        assert!(matches!(err, Error::Read { .. }));
    }

    fn word() -> impl Strategy<Value = String> {
        "[A-Za-z0-9,']{1,8}"
    }

    fn sentence() -> impl Strategy<Value = (Vec<String>, String)> {
        (prop::collection::vec(word(), 1..6), "[.!?]{1,3}")
    }

    proptest! {
        #[test]
        fn ascii_round_trip(s in "[ -~]{0,64}") {
            prop_assert_eq!(decode_ascii(&encode_ascii(&s)), s);
        }

        #[test]
        fn codes_are_seven_bit(s in any::<String>()) {
            let codes = encode_ascii(&s);
            prop_assert_eq!(codes.len(), s.chars().count());
            prop_assert!(codes.iter().all(|&c| c <= 127));
        }

        #[test]
        fn pad_is_idempotent(rows in prop::collection::vec(prop::collection::vec(1u8..128, 5), 1..6)) {
            let m = pad_matrix(&rows).unwrap();
            let again: Vec<Vec<u8>> = m.iter_rows().map(<[u8]>::to_vec).collect();
            prop_assert_eq!(pad_matrix(&again).unwrap(), m);
        }

        #[test]
        fn sentence_count_matches_terminator_runs(
            parts in prop::collection::vec(sentence(), 0..8),
            tail in prop::option::of(prop::collection::vec(word(), 1..4)),
            sep in "[ \n\t]{1,3}",
        ) {
            let mut text = String::new();
            for (words, term) in &parts {
                text.push_str(&words.join(" "));
                text.push_str(term);
                text.push_str(&sep);
            }
            if let Some(t) = &tail {
                text.push_str(&t.join(" "));
            }
            let out = split_sentences(&text);
            prop_assert_eq!(out.len(), parts.len() + usize::from(tail.is_some()));
            prop_assert!(out.iter().all(|s| !s.is_empty()));
            let strip = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
            prop_assert_eq!(strip(&out.concat()), strip(&text));
        }
    }
}
