use serde::{Deserialize, Serialize};

use super::sorted_finite;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram<T> {
    /// `bins + 1` ascending edges; the last bin includes its upper edge.
    pub edges: Vec<T>,
    pub counts: Vec<u64>,
}

impl<T: Scalar> Histogram<T> {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(lower, upper, count)` for every bin.
    pub fn iter_bins(&self) -> impl Iterator<Item = (T, T, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(i, &c)| (self.edges[i], self.edges[i + 1], c))
    }
}

/// Equal-width histogram over `[min, max]`. A constant sample is binned over
/// `[v - 0.5, v + 0.5]`.
pub fn histogram<T: Scalar>(values: &[T], bins: usize) -> Result<Histogram<T>> {
    if values.is_empty() {
        return Err(Error::InsufficientSamples { needed: 1, got: 0 });
    }
    if bins == 0 {
        return Err(Error::Config("histogram needs at least one bin".into()));
    }
    let sorted = sorted_finite(values)?;
    let (mut lo, mut hi) = (sorted[0], sorted[sorted.len() - 1]);
    if lo == hi {
        let half = T::lit(0.5);
        lo = lo - half;
        hi = hi + half;
    }
    let width = (hi - lo) / T::from_count(bins);
    let mut edges: Vec<T> = (0..bins)
        .map(|i| lo + width * T::from_count(i))
        .collect();
    edges.push(hi);

    let mut counts = vec![0u64; bins];
    for &v in values {
        let guess = ((v - lo) / width).floor().to_usize().unwrap_or(0);
        let mut idx = guess.min(bins - 1);
        while idx > 0 && v < edges[idx] {
            idx -= 1;
        }
        while idx + 1 < bins && v >= edges[idx + 1] {
            idx += 1;
        }
        counts[idx] += 1;
    }
    Ok(Histogram { edges, counts })
}
