//! Anderson-Darling test for normality with estimated mean and variance.

use serde::{Deserialize, Serialize};

use super::normal;
use super::sorted_finite;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Significance levels (percent) of [`AD_BASE_CRITICAL`].
pub const AD_SIGNIFICANCE_LEVELS: [f64; 5] = [15.0, 10.0, 5.0, 2.5, 1.0];
/// Asymptotic critical values for the estimated-parameters case.
pub const AD_BASE_CRITICAL: [f64; 5] = [0.576, 0.656, 0.787, 0.918, 1.092];
/// Position of the 5% level in the arrays above.
pub const AD_FIVE_PERCENT: usize = 2;

/// Critical values at 15/10/5/2.5/1%, each divided by `1 + 4/n - 25/n²` and
/// rounded to three decimals.
///
/// The correction factor is negative for `n <= 3`, so those values are
/// meaningless; callers should require more data.
pub fn ad_critical<T: Scalar>(n: usize) -> [T; 5] {
    let nf = n as f64;
    let factor = 1.0 + 4.0 / nf - 25.0 / (nf * nf);
    AD_BASE_CRITICAL.map(|c| T::lit((c / factor * 1000.0).round() / 1000.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AndersonDarling<T> {
    /// `A²`.
    pub statistic: T,
    pub critical_values: [T; 5],
    pub n: usize,
}

impl<T: Scalar> AndersonDarling<T> {
    pub fn critical_5(&self) -> T {
        self.critical_values[AD_FIVE_PERCENT]
    }
}

/// `A² = -n - (1/n) Σ (2i-1) [ln F(x_(i)) + ln(1 - F(x_(n+1-i)))]`, with `F`
/// the normal CDF at the sample mean and `n - 1` standard deviation.
pub fn anderson_darling<T: Scalar>(sample: &[T]) -> Result<AndersonDarling<T>> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::SampleTooSmall { needed: 2, got: n });
    }
    let x = sorted_finite(sample)?;
    if x[0] == x[n - 1] {
        return Err(Error::ZeroVariance);
    }
    let nf = T::from_count(n);
    let mean = x.iter().copied().sum::<T>() / nf;
    let var = x.iter().map(|&v| (v - mean) * (v - mean)).sum::<T>() / T::from_count(n - 1);
    let sd = var.sqrt();
    if sd.is_nan() || sd <= T::zero() {
        return Err(Error::ZeroVariance);
    }
    let z: Vec<f64> = x.iter().map(|&v| ((v - mean) / sd).as_f64()).collect();
    let mut acc = 0.0f64;
    for i in 0..n {
        let weight = (2 * i + 1) as f64;
        acc += weight * (normal::ln_cdf(z[i]) + normal::ln_sf(z[n - 1 - i]));
    }
    let statistic = -(n as f64) - acc / n as f64;
    Ok(AndersonDarling {
        statistic: T::lit(statistic),
        critical_values: ad_critical(n),
        n,
    })
}
